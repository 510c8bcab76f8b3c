#include "ternalg/algebra.hpp"

#include "ternalg/error.hpp"

namespace ternalg {

std::string to_string(Linearity mode)
{
  return mode == Linearity::Trilinear ? "trilinear" : "conjugate-mid";
}

std::string to_string(CommutativityType type)
{
  switch (type) {
  case CommutativityType::Commutative:
    return "commutative";
  case CommutativityType::LeftCommutative:
    return "left-commutative";
  case CommutativityType::CyclicCommutative:
    return "cyclic-commutative";
  case CommutativityType::None:
    break;
  }
  return "none";
}

template <class S>
BasicTernaryAlgebra<S>::BasicTernaryAlgebra(Tensor4<S> product, Linearity mode, std::vector<std::string> labels)
: m_product(std::move(product)), m_mode(mode), m_labels(std::move(labels))
{
  const std::size_t d = m_product.dim();
  if (d == 0)
    throw ShapeError("ternary algebra must have positive dimension");
  if (m_labels.empty())
    for (std::size_t t = 0; t < d; ++t)
      m_labels.push_back("e" + std::to_string(t + 1));
  if (m_labels.size() != d)
    throw ShapeError("basis label count does not match dimension");
  m_sparse.resize(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto &col = m_sparse[(i * d + j) * d + k];
        for (std::size_t m = 0; m < d; ++m)
          if (!is_zero(m_product.at(m, i, j, k)))
            col.push_back({static_cast<std::uint32_t>(m), m_product.at(m, i, j, k)});
      }
}

template <class S>
Vector<S> BasicTernaryAlgebra<S>::product(const Vector<S> &x, const Vector<S> &y, const Vector<S> &z) const
{
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d || z.size() != d)
    throw ShapeError("element length does not match algebra dimension");
  Vector<S> out(d, S{});
  std::vector<std::size_t> nx, ny, nz;
  for (std::size_t t = 0; t < d; ++t) {
    if (!is_zero(x[t]))
      nx.push_back(t);
    if (!is_zero(y[t]))
      ny.push_back(t);
    if (!is_zero(z[t]))
      nz.push_back(t);
  }
  const bool conj_mid = m_mode == Linearity::ConjugateMid;
  for (auto i : nx)
    for (auto j : ny) {
      S xy = x[i] * (conj_mid ? conj(y[j]) : y[j]);
      for (auto k : nz) {
        const auto &col = m_sparse[(i * d + j) * d + k];
        if (col.empty())
          continue;
        S coef = xy * z[k];
        for (const auto &e : col)
          out[e.m] += coef * e.value;
      }
    }
  return out;
}

template class BasicTernaryAlgebra<CycNum>;
template class BasicTernaryAlgebra<FloatC>;

FloatAlgebra to_float(const TernaryAlgebra &algebra)
{
  return FloatAlgebra(to_float(algebra.product_tensor()), algebra.mode(), algebra.labels());
}

Bracket Bracket::omega()
{
  const CycNum w = CycNum::omega(), wb = CycNum::omega_bar();
  return {"omega", {CycNum(1), w, wb, CycNum(1), wb, w}, w};
}

Bracket Bracket::conjugate()
{
  const CycNum w = CycNum::omega(), wb = CycNum::omega_bar();
  return {"conjugate", {CycNum(1), wb, w, CycNum(1), w, wb}, wb};
}

Bracket Bracket::reduced()
{
  const CycNum w = CycNum::omega(), wb = CycNum::omega_bar();
  return {"reduced", {w, wb, CycNum(1), CycNum(), CycNum(), CycNum()}, w};
}

Bracket Bracket::product()
{
  return {"product", {CycNum(1), CycNum(), CycNum(), CycNum(), CycNum(), CycNum()}, CycNum::omega()};
}

Bracket Bracket::parse(std::string_view name)
{
  if (name == "omega")
    return omega();
  if (name == "conjugate")
    return conjugate();
  if (name == "reduced")
    return reduced();
  if (name == "product")
    return product();
  throw ParseError("unknown bracket kind '" + std::string(name) + "'", 0);
}

template <class S>
Vector<S> bracket(const BasicTernaryAlgebra<S> &algebra, const Bracket &br, const Vector<S> &s, const Vector<S> &u,
                  const Vector<S> &v)
{
  Vector<S> out(algebra.dim(), S{});
  const std::array<std::array<const Vector<S> *, 3>, 6> orders{{{&s, &u, &v},
                                                               {&u, &v, &s},
                                                               {&v, &s, &u},
                                                               {&v, &u, &s},
                                                               {&u, &s, &v},
                                                               {&s, &v, &u}}};
  for (std::size_t t = 0; t < 6; ++t) {
    if (br.coeffs[t].is_zero())
      continue;
    const auto &o = orders[t];
    Vector<S> term = algebra.product(*o[0], *o[1], *o[2]);
    if (br.coeffs[t].is_one())
      out += term;
    else
      axpy(out, scalar_cast<S>(br.coeffs[t]), term);
  }
  return out;
}

template Vector<CycNum> bracket(const TernaryAlgebra &, const Bracket &, const Vector<CycNum> &,
                                const Vector<CycNum> &, const Vector<CycNum> &);
template Vector<FloatC> bracket(const FloatAlgebra &, const Bracket &, const Vector<FloatC> &, const Vector<FloatC> &,
                                const Vector<FloatC> &);

template <class S>
Vector<S> assoc_q(const BasicTernaryAlgebra<S> &algebra, int kind, Root root, const Vector<S> &s, const Vector<S> &u,
                  const Vector<S> &v, const Vector<S> &x, const Vector<S> &y)
{
  if (kind != 1 && kind != 2)
    throw Error("associator kind must be 1 or 2");
  const S w = scalar_cast<S>(CycNum::omega());
  const S wb = scalar_cast<S>(CycNum::omega_bar());
  const S &c_mid = root == Root::Omega ? w : wb;
  const S &c_right = root == Root::Omega ? wb : w;
  Vector<S> left = algebra.product(algebra.product(s, u, v), x, y);
  Vector<S> mid = kind == 1 ? algebra.product(s, algebra.product(u, v, x), y)
                            : algebra.product(s, algebra.product(x, v, u), y);
  Vector<S> right = algebra.product(s, u, algebra.product(v, x, y));
  axpy(left, c_mid, mid);
  axpy(left, c_right, right);
  return left;
}

template Vector<CycNum> assoc_q(const TernaryAlgebra &, int, Root, const Vector<CycNum> &, const Vector<CycNum> &,
                                const Vector<CycNum> &, const Vector<CycNum> &, const Vector<CycNum> &);
template Vector<FloatC> assoc_q(const FloatAlgebra &, int, Root, const Vector<FloatC> &, const Vector<FloatC> &,
                                const Vector<FloatC> &, const Vector<FloatC> &, const Vector<FloatC> &);

template <class S>
Vector<S> assoc_t(const BasicTernaryAlgebra<S> &algebra, int which, const Vector<S> &s, const Vector<S> &u,
                  const Vector<S> &v, const Vector<S> &x, const Vector<S> &y)
{
  Vector<S> mid = algebra.product(s, algebra.product(u, v, x), y);
  if (which == 1)
    return algebra.product(algebra.product(s, u, v), x, y) - mid;
  if (which == 2)
    return mid - algebra.product(s, u, algebra.product(v, x, y));
  throw Error("associator index must be 1 or 2");
}

template Vector<CycNum> assoc_t(const TernaryAlgebra &, int, const Vector<CycNum> &, const Vector<CycNum> &,
                                const Vector<CycNum> &, const Vector<CycNum> &, const Vector<CycNum> &);
template Vector<FloatC> assoc_t(const FloatAlgebra &, int, const Vector<FloatC> &, const Vector<FloatC> &,
                                const Vector<FloatC> &, const Vector<FloatC> &, const Vector<FloatC> &);

std::vector<Element> argument_basis(const TernaryAlgebra &algebra)
{
  const std::size_t d = algebra.dim();
  std::vector<Element> out;
  for (std::size_t t = 0; t < d; ++t)
    out.push_back(unit_vector<CycNum>(d, t));
  if (algebra.mode() == Linearity::ConjugateMid)
    for (std::size_t t = 0; t < d; ++t)
      out.push_back(CycNum::i() * unit_vector<CycNum>(d, t));
  return out;
}

std::vector<std::string> argument_labels(const TernaryAlgebra &algebra)
{
  std::vector<std::string> out = algebra.labels();
  if (algebra.mode() == Linearity::ConjugateMid)
    for (const auto &l : algebra.labels())
      out.push_back("i*" + l);
  return out;
}

CommutativityType commutativity_type(const TernaryAlgebra &algebra)
{
  const auto basis = argument_basis(algebra);
  bool left = true, cyclic = true;
  for (const auto &s : basis)
    for (const auto &u : basis)
      for (const auto &v : basis) {
        Element suv = algebra.product(s, u, v);
        if (left && suv != algebra.product(u, s, v))
          left = false;
        if (cyclic && suv != algebra.product(u, v, s))
          cyclic = false;
        if (!left && !cyclic)
          return CommutativityType::None;
      }
  if (left && cyclic)
    return CommutativityType::Commutative;
  return left ? CommutativityType::LeftCommutative : CommutativityType::CyclicCommutative;
}

namespace {

CycMatrix basis_inverse(const std::vector<Element> &basis, std::size_t dim)
{
  if (basis.size() != dim)
    throw BasisError("basis must have exactly " + std::to_string(dim) + " elements");
  for (const auto &b : basis)
    if (b.size() != dim)
      throw BasisError("basis element has wrong length");
  try {
    return inverse(CycMatrix::from_columns(basis));
  } catch (const SingularError &) {
    throw BasisError("basis elements are linearly dependent");
  }
}

} // namespace

StructureTensor structure_constants(const TernaryAlgebra &algebra, const Bracket &br,
                                    const std::optional<std::vector<Element>> &basis)
{
  const std::size_t d = algebra.dim();
  std::vector<Element> complex_basis;
  std::optional<CycMatrix> to_coords;
  if (basis) {
    complex_basis = *basis;
    to_coords = basis_inverse(complex_basis, d);
  } else {
    for (std::size_t t = 0; t < d; ++t)
      complex_basis.push_back(unit_vector<CycNum>(d, t));
  }
  auto coords = [&](const Element &v) { return to_coords ? *to_coords * v : v; };

  if (algebra.mode() == Linearity::Trilinear) {
    StructureTensor c(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          c.set_column(i, j, k, coords(bracket(algebra, br, complex_basis[i], complex_basis[j], complex_basis[k])));
    return c;
  }

  // Realified constants: arguments range over {b_a, i b_a}; a complex
  // coordinate c_a contributes Re(c_a) to b_a and Im(c_a) to i b_a.
  std::vector<Element> real_basis = complex_basis;
  for (const auto &b : complex_basis)
    real_basis.push_back(CycNum::i() * b);
  const std::size_t r = 2 * d;
  const CycNum half = CycNum(Rat(1, 2));
  const CycNum minus_half_i = -(half * CycNum::i());
  StructureTensor c(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        Element z = coords(bracket(algebra, br, real_basis[i], real_basis[j], real_basis[k]));
        Element real(r);
        for (std::size_t a = 0; a < d; ++a) {
          if (z[a].is_zero())
            continue;
          CycNum cz = z[a].conj();
          real[a] = half * (z[a] + cz);
          real[d + a] = minus_half_i * (z[a] - cz);
        }
        c.set_column(i, j, k, real);
      }
  return c;
}

template <class S>
Vector<S> contract(const Tensor4<S> &c, const Vector<S> &x, const Vector<S> &y, const Vector<S> &z)
{
  const std::size_t d = c.dim();
  if (x.size() != d || y.size() != d || z.size() != d)
    throw ShapeError("contract: element length does not match tensor dimension");
  Vector<S> out(d, S{});
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(x[i]))
      continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(y[j]))
        continue;
      S xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (is_zero(z[k]))
          continue;
        S coef = xy * z[k];
        for (std::size_t m = 0; m < d; ++m)
          if (!is_zero(c.at(m, i, j, k)))
            out[m] += coef * c.at(m, i, j, k);
      }
    }
  }
  return out;
}

template Vector<CycNum> contract(const Tensor4<CycNum> &, const Vector<CycNum> &, const Vector<CycNum> &,
                                 const Vector<CycNum> &);
template Vector<FloatC> contract(const Tensor4<FloatC> &, const Vector<FloatC> &, const Vector<FloatC> &,
                                 const Vector<FloatC> &);

StructureTensor transform_constants(const StructureTensor &c, const CycMatrix &a)
{
  const std::size_t d = c.dim();
  if (a.rows != d || a.cols != d)
    throw ShapeError("basis change matrix has wrong shape");
  CycMatrix a_inv = inverse(a);

  // Contract one lower index at a time; each stage costs d^5.
  auto stage = [&](const StructureTensor &in, int slot) {
    StructureTensor out(d);
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
          for (std::size_t z = 0; z < d; ++z) {
            CycNum acc;
            for (std::size_t p = 0; p < d; ++p) {
              const CycNum &coef = slot == 0 ? a(p, x) : slot == 1 ? a(p, y) : a(p, z);
              if (coef.is_zero())
                continue;
              const CycNum &val = slot == 0 ? in.at(m, p, y, z) : slot == 1 ? in.at(m, x, p, z) : in.at(m, x, y, p);
              if (!val.is_zero())
                acc += coef * val;
            }
            out.at(m, x, y, z) = std::move(acc);
          }
    return out;
  };
  StructureTensor t = stage(stage(stage(c, 0), 1), 2);
  StructureTensor out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        out.set_column(i, j, k, a_inv * t.column(i, j, k));
  return out;
}

TernaryAlgebra change_basis(const TernaryAlgebra &algebra, const std::vector<Element> &basis,
                            std::vector<std::string> labels)
{
  const std::size_t d = algebra.dim();
  CycMatrix to_coords = basis_inverse(basis, d);
  Tensor4<CycNum> p(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        p.set_column(i, j, k, to_coords * algebra.product(basis[i], basis[j], basis[k]));
  return TernaryAlgebra(std::move(p), algebra.mode(), std::move(labels));
}

TernaryAlgebra algebra_from_constants(const StructureTensor &c, std::vector<std::string> labels)
{
  return TernaryAlgebra(c, Linearity::Trilinear, std::move(labels));
}

std::optional<Element> coordinates_in(const std::vector<Element> &basis, const Element &v)
{
  if (basis.empty())
    return is_zero_vector(v) ? std::optional<Element>(Element{}) : std::nullopt;
  return solve(CycMatrix::from_columns(basis), v);
}

} // namespace ternalg
