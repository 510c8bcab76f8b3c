#include "ternalg/zoo.hpp"

#include <random>

#include "ternalg/error.hpp"

namespace ternalg {

TernaryAlgebra vector_algebra(std::size_t n, VectorForm form)
{
  if (n == 0)
    throw ShapeError("vector algebra needs n >= 1");
  Tensor4<CycNum> p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      p.at(k, i, i, k) = CycNum(1);
  return TernaryAlgebra(std::move(p), form == VectorForm::Alpha ? Linearity::Trilinear : Linearity::ConjugateMid);
}

TernaryAlgebra rect_algebra(std::size_t m, std::size_t n, RectForm form)
{
  if (m == 0 || n == 0)
    throw ShapeError("rectangular algebra needs m, n >= 1");
  const std::size_t d = m * n;
  auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
  Tensor4<CycNum> p(d);
  // E_{a1 b1} E_{b2 a2} E_{a3 b3} is E_{a1 b3} when b1 = b2 and a2 = a3.
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t b3 = 0; b3 < n; ++b3)
          p.at(idx(a1, b3), idx(a1, b1), idx(a2, b1), idx(a2, b3)) = CycNum(1);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  return TernaryAlgebra(std::move(p), form == RectForm::Transpose ? Linearity::Trilinear : Linearity::ConjugateMid,
                        std::move(labels));
}

std::size_t cubic_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k)
{
  return (i * n + j) * n + k;
}

std::vector<std::string> cubic_labels(std::size_t n)
{
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        labels.push_back("X" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1));
  return labels;
}

TernaryAlgebra cubic_algebra(std::size_t n, Pairing pairing, bool conj_mid)
{
  if (n == 0)
    throw ShapeError("cubic algebra needs n >= 1");
  Tensor4<CycNum> p(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s)
            for (std::size_t k = 0; k < n; ++k) {
              std::size_t z = pairing == Pairing::A ? cubic_index(n, s, r, k) : cubic_index(n, r, s, k);
              p.at(cubic_index(n, i, j, k), cubic_index(n, i, j, q), cubic_index(n, r, s, q), z) = CycNum(1);
            }
  return TernaryAlgebra(std::move(p), conj_mid ? Linearity::ConjugateMid : Linearity::Trilinear, cubic_labels(n));
}

TernaryAlgebra cubic_scalar_trace_algebra(std::size_t n, bool conj_mid)
{
  if (n == 0)
    throw ShapeError("cubic algebra needs n >= 1");
  const std::size_t d = n * n * n;
  Tensor4<CycNum> p(d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t q = 0; q < n; ++q)
          p.at(x, x, cubic_index(n, r, s, q), cubic_index(n, s, r, q)) = CycNum(1);
  return TernaryAlgebra(std::move(p), conj_mid ? Linearity::ConjugateMid : Linearity::Trilinear, cubic_labels(n));
}

TernaryAlgebra zero_algebra(std::size_t dim)
{
  return TernaryAlgebra(Tensor4<CycNum>(dim), Linearity::Trilinear);
}

TernaryAlgebra random_algebra(std::size_t dim, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  Tensor4<CycNum> p(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t m = 0; m < dim; ++m)
          p.at(m, i, j, k) = CycNum(static_cast<long>(dist(rng)));
  return TernaryAlgebra(std::move(p), Linearity::Trilinear);
}

Vector<CycNum> cubic_trace(const Element &x, std::size_t n, TracePair pair)
{
  if (x.size() != n * n * n)
    throw ShapeError("cubic_trace: element is not a cubic matrix of order n");
  Vector<CycNum> out(n);
  for (std::size_t free = 0; free < n; ++free)
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t idx = pair == TracePair::T12   ? cubic_index(n, t, t, free)
                        : pair == TracePair::T13 ? cubic_index(n, t, free, t)
                                                 : cubic_index(n, free, t, t);
      out[free] += x[idx];
    }
  return out;
}

std::vector<Element> canonical_G_basis()
{
  auto entry = [](Element &x, int ijk, const CycNum &value) {
    int i = ijk / 100, j = ijk / 10 % 10, k = ijk % 10;
    x[cubic_index(2, i - 1, j - 1, k - 1)] = value;
  };
  const CycNum i = CycNum::i();
  const CycNum half(Rat(1, 2));
  const CycNum g12 = -(i * CycNum::sqrt2() * CycNum(Rat(1, 4)));

  std::vector<Element> g(8, Element(8));
  for (auto [ijk, v] : std::initializer_list<std::pair<int, long>>{{111, 1}, {221, -1}, {122, -1}, {212, -1}})
    entry(g[0], ijk, g12 * CycNum(v));
  for (auto [ijk, v] : std::initializer_list<std::pair<int, long>>{{121, -1}, {211, -1}, {112, -1}, {222, 1}})
    entry(g[1], ijk, g12 * CycNum(v));
  entry(g[2], 121, -i);
  entry(g[2], 211, -(i * half));
  entry(g[3], 121, CycNum(-1));
  entry(g[3], 211, half);
  entry(g[4], 122, -i);
  entry(g[4], 212, -(i * half));
  entry(g[5], 122, CycNum(-1));
  entry(g[5], 212, half);
  entry(g[6], 111, CycNum(1));
  entry(g[7], 222, CycNum(1));
  return g;
}

std::vector<std::string> G_labels()
{
  return {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8"};
}

TernaryAlgebra cubic2_in_G_basis(Pairing pairing, bool conj_mid)
{
  return change_basis(cubic_algebra(2, pairing, conj_mid), canonical_G_basis(), G_labels());
}

// ---------------------------------------------------------------------------
// Module construction

std::vector<Element> matrix_ring(std::size_t r)
{
  const std::size_t d = r * r;
  std::vector<Element> mult(d * d, Element(d));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        mult[(a * r + b) * d + (b * r + c)][a * r + c] = CycNum(1);
  return mult;
}

namespace {

FormSpec empty_spec(std::string name, std::size_t module_dim, std::size_t ring_dim, Side side)
{
  FormSpec spec;
  spec.name = std::move(name);
  spec.module_dim = module_dim;
  spec.ring_dim = ring_dim;
  spec.side = side;
  spec.form.assign(module_dim * module_dim, Element(ring_dim));
  spec.action.assign(ring_dim, CycMatrix(module_dim, module_dim));
  return spec;
}

FormSpec scalar_ring_spec(std::string name, std::size_t module_dim, Side side)
{
  FormSpec spec = empty_spec(std::move(name), module_dim, 1, side);
  spec.ring_mult = {Element{CycNum(1)}};
  spec.action[0] = CycMatrix::identity(module_dim);
  return spec;
}

} // namespace

FormSpec rect_form_spec(std::size_t m, std::size_t n)
{
  FormSpec spec = empty_spec("rect-transpose", m * n, m * m, Side::Left);
  spec.ring_mult = matrix_ring(m);
  const std::size_t d = m * n;
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t a2 = 0; a2 < m; ++a2)
      for (std::size_t b = 0; b < n; ++b)
        spec.form[(a1 * n + b) * d + (a2 * n + b)][a1 * m + a2] = CycNum(1);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b)
        spec.action[c * m + a](c * n + b, a * n + b) = CycNum(1);
  return spec;
}

FormSpec cubic_form_spec(std::size_t n)
{
  const std::size_t d = n * n * n;
  FormSpec spec = empty_spec("cubic-trace-pairing", d, n * n, Side::Right);
  spec.ring_mult = matrix_ring(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t k = 0; k < n; ++k)
          spec.form[cubic_index(n, r, s, p) * d + cubic_index(n, s, r, k)][p * n + k] = CycNum(1);
  // X |> E_{cq} moves the slice X_(c) to position q.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          spec.action[c * n + q](cubic_index(n, i, j, q), cubic_index(n, i, j, c)) = CycNum(1);
  return spec;
}

FormSpec cubic_scalar_trace_form_spec(std::size_t n)
{
  const std::size_t d = n * n * n;
  FormSpec spec = scalar_ring_spec("cubic-scalar-trace", d, Side::Right);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t p = 0; p < n; ++p)
        spec.form[cubic_index(n, r, s, p) * d + cubic_index(n, s, r, p)][0] = CycNum(1);
  return spec;
}

FormSpec zero_form_spec(std::size_t module_dim)
{
  return scalar_ring_spec("zero", module_dim, Side::Left);
}

FormSpec random_form_spec(std::size_t n, std::uint64_t seed)
{
  FormSpec spec = empty_spec("random", n, n * n, Side::Left);
  spec.ring_mult = matrix_ring(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1, 1);
  for (auto &value : spec.form)
    for (auto &x : value)
      x = CycNum(static_cast<long>(dist(rng)));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      spec.action[c * n + a](c, a) = CycNum(1);
  return spec;
}

namespace {

struct FormOps
{
  const FormSpec &spec;

  Element ring_mul(const Element &x, const Element &y) const
  {
    Element out(spec.ring_dim);
    for (std::size_t a = 0; a < spec.ring_dim; ++a) {
      if (x[a].is_zero())
        continue;
      for (std::size_t b = 0; b < spec.ring_dim; ++b)
        if (!y[b].is_zero())
          axpy(out, x[a] * y[b], spec.ring_mult[a * spec.ring_dim + b]);
    }
    return out;
  }

  CycMatrix action_of(const Element &x) const
  {
    CycMatrix out(spec.module_dim, spec.module_dim);
    for (std::size_t a = 0; a < spec.ring_dim; ++a)
      if (!x[a].is_zero())
        for (std::size_t t = 0; t < out.data.size(); ++t)
          if (!spec.action[a].data[t].is_zero())
            out.data[t] += x[a] * spec.action[a].data[t];
    return out;
  }

  Element act(const Element &x, const Element &w) const { return action_of(x) * w; }

  Element form(const Element &u, const Element &v) const
  {
    Element out(spec.ring_dim);
    for (std::size_t i = 0; i < spec.module_dim; ++i) {
      if (u[i].is_zero())
        continue;
      for (std::size_t j = 0; j < spec.module_dim; ++j)
        if (!v[j].is_zero())
          axpy(out, u[i] * v[j], spec.form[i * spec.module_dim + j]);
    }
    return out;
  }
};

void validate(const FormSpec &spec)
{
  const std::size_t md = spec.module_dim, rd = spec.ring_dim;
  if (md == 0 || rd == 0)
    throw ConstructionError("form spec needs positive module and ring dimensions");
  if (spec.ring_mult.size() != rd * rd || spec.form.size() != md * md || spec.action.size() != rd)
    throw ConstructionError("form spec tables have inconsistent sizes");
  for (const auto &v : spec.ring_mult)
    if (v.size() != rd)
      throw ConstructionError("ring multiplication entry has wrong length");
  for (const auto &v : spec.form)
    if (v.size() != rd)
      throw ConstructionError("form value has wrong length");
  for (const auto &m : spec.action)
    if (m.rows != md || m.cols != md)
      throw ConstructionError("action matrix has wrong shape");
}

} // namespace

TernaryAlgebra make_algebra_from_form(const FormSpec &spec)
{
  validate(spec);
  FormOps ops{spec};
  const std::size_t md = spec.module_dim, rd = spec.ring_dim;
  for (std::size_t a = 0; a < rd; ++a)
    for (std::size_t b = 0; b < rd; ++b) {
      CycMatrix lhs = ops.action_of(spec.ring_mult[a * rd + b]);
      CycMatrix rhs = spec.side == Side::Left ? spec.action[a] * spec.action[b] : spec.action[b] * spec.action[a];
      if (!(lhs == rhs))
        throw ConstructionError("action is not a representation of the ring (basis pair " + std::to_string(a + 1) +
                                "," + std::to_string(b + 1) + ")");
    }
  Tensor4<CycNum> p(md);
  for (std::size_t u = 0; u < md; ++u)
    for (std::size_t v = 0; v < md; ++v)
      for (std::size_t w = 0; w < md; ++w) {
        if (spec.side == Side::Left)
          p.set_column(u, v, w, ops.action_of(spec.form[u * md + v]).column(w));
        else
          p.set_column(u, v, w, ops.action_of(spec.form[v * md + w]).column(u));
      }
  return TernaryAlgebra(std::move(p), Linearity::Trilinear);
}

LawReport check_construction_conditions(const FormSpec &spec, int kind)
{
  if (kind != 1 && kind != 2)
    throw Error("associativity kind must be 1 or 2");
  validate(spec);
  FormOps ops{spec};
  const std::size_t md = spec.module_dim;
  auto e = [md](std::size_t t) { return unit_vector<CycNum>(md, t); };
  auto f = [&](std::size_t a, std::size_t b) -> const Element & { return spec.form[a * md + b]; };

  LawReport report;
  report.law = "construction-conditions-kind" + std::to_string(kind) + "[" + spec.name + "]";
  report.regime = "exhaustive-basis";
  report.tuples_total = md * md * md * md;
  for (std::size_t a = 0; a < md; ++a)
    for (std::size_t b = 0; b < md; ++b)
      for (std::size_t c = 0; c < md; ++c)
        for (std::size_t d = 0; d < md; ++d) {
          ++report.tuples_checked;
          Element first, middle, last;
          if (spec.side == Side::Left) {
            // alpha(alpha(u,v).w, s) = alpha(u,v) alpha(w,s) = alpha(u, alpha(v,w).s) or alpha(u, alpha(s,w).v)
            first = ops.form(ops.act(f(a, b), e(c)), e(d));
            middle = ops.ring_mul(f(a, b), f(c, d));
            last = kind == 1 ? ops.form(e(a), ops.act(f(b, c), e(d))) : ops.form(e(a), ops.act(f(d, c), e(b)));
          } else {
            // beta(v, w.beta(s,t)) = beta(v,w) beta(s,t) = beta(v.beta(w,s), t) or beta(s.beta(w,v), t)
            first = ops.form(e(a), ops.act(f(c, d), e(b)));
            middle = ops.ring_mul(f(a, b), f(c, d));
            last = kind == 1 ? ops.form(ops.act(f(b, c), e(a)), e(d)) : ops.form(ops.act(f(b, a), e(c)), e(d));
          }
          Element residual = first - middle;
          if (is_zero_vector(residual))
            residual = middle - last;
          if (!is_zero_vector(residual)) {
            report.holds = false;
            Counterexample ce;
            for (auto t : {a, b, c, d})
              ce.args.push_back("e" + std::to_string(t + 1));
            for (const auto &x : residual)
              ce.residual.push_back(x.format());
            ce.residual_norm = max_abs(residual);
            report.counterexample = std::move(ce);
            report.failing_tuple = {a, b, c, d};
            return report;
          }
        }
  return report;
}

// ---------------------------------------------------------------------------
// Binary relations

FiniteRelation::FiniteRelation(std::size_t from, std::size_t to, std::uint64_t bits)
: m_from(from), m_to(to), m_bits(bits)
{
  if (from * to > 64)
    throw ShapeError("relations are limited to 64 pairs");
  if (from * to < 64 && (bits >> (from * to)) != 0)
    throw ShapeError("relation bits outside A x B");
}

FiniteRelation FiniteRelation::identity(std::size_t n)
{
  FiniteRelation r(n, n);
  for (std::size_t a = 0; a < n; ++a)
    r.insert(a, a);
  return r;
}

bool FiniteRelation::contains(std::size_t a, std::size_t b) const
{
  return (m_bits >> (a * m_to + b)) & 1u;
}

void FiniteRelation::insert(std::size_t a, std::size_t b)
{
  if (a >= m_from || b >= m_to)
    throw ShapeError("pair outside A x B");
  m_bits |= std::uint64_t{1} << (a * m_to + b);
}

FiniteRelation compose(const FiniteRelation &r, const FiniteRelation &s)
{
  if (r.to() != s.from())
    throw ShapeError("relation composition shape mismatch");
  FiniteRelation out(r.from(), s.to());
  for (std::size_t a = 0; a < r.from(); ++a)
    for (std::size_t b = 0; b < r.to(); ++b)
      if (r.contains(a, b))
        for (std::size_t c = 0; c < s.to(); ++c)
          if (s.contains(b, c))
            out.insert(a, c);
  return out;
}

FiniteRelation inverse(const FiniteRelation &r)
{
  FiniteRelation out(r.to(), r.from());
  for (std::size_t a = 0; a < r.from(); ++a)
    for (std::size_t b = 0; b < r.to(); ++b)
      if (r.contains(a, b))
        out.insert(b, a);
  return out;
}

FiniteRelation relation_ternary(const FiniteRelation &r, const FiniteRelation &s, const FiniteRelation &t)
{
  if (r.from() != s.from() || r.from() != t.from() || r.to() != s.to() || r.to() != t.to())
    throw ShapeError("relation_ternary: operands must lie in the same P(A, B)");
  return compose(compose(r, inverse(s)), t);
}

SemiheapReport check_semiheap(std::size_t a, std::size_t b)
{
  if (a * b > 4)
    throw ShapeError("exhaustive semiheap check is limited to |A||B| <= 4");
  const std::uint64_t count = std::uint64_t{1} << (a * b);
  std::vector<std::uint64_t> table(count * count * count);
  for (std::uint64_t r = 0; r < count; ++r)
    for (std::uint64_t s = 0; s < count; ++s)
      for (std::uint64_t t = 0; t < count; ++t)
        table[(r * count + s) * count + t] =
            relation_ternary(FiniteRelation(a, b, r), FiniteRelation(a, b, s), FiniteRelation(a, b, t)).bits();
  auto tern = [&](std::uint64_t r, std::uint64_t s, std::uint64_t t) { return table[(r * count + s) * count + t]; };

  SemiheapReport report;
  for (std::uint64_t r = 0; r < count; ++r)
    for (std::uint64_t s = 0; s < count; ++s)
      for (std::uint64_t t = 0; t < count; ++t)
        for (std::uint64_t u = 0; u < count; ++u)
          for (std::uint64_t v = 0; v < count; ++v) {
            ++report.tuples_checked;
            std::uint64_t left = tern(tern(r, s, t), u, v);
            std::uint64_t mid = tern(r, tern(u, t, s), v);
            std::uint64_t right = tern(r, s, tern(t, u, v));
            if (left != mid || mid != right) {
              report.holds = false;
              report.counterexample = {r, s, t, u, v};
              return report;
            }
          }
  return report;
}

} // namespace ternalg
