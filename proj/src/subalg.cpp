#include "ternalg/subalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "ternalg/error.hpp"

namespace ternalg {

namespace {

Echelon echelon_of(const std::vector<Element> &rows, std::size_t n)
{
  CycMatrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = rows[r][c];
  return rref(std::move(m));
}

Element reduce(const Echelon &e, Element v)
{
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const std::size_t p = e.pivot_cols[r];
    if (v[p].is_zero())
      continue;
    CycNum f = v[p];
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!e.reduced(r, c).is_zero())
        v[c] -= f * e.reduced(r, c);
  }
  return v;
}

} // namespace

Subspace::Subspace(const TernaryAlgebra &ambient, std::vector<Element> spanning)
: m_ambient(&ambient), m_spanning(std::move(spanning))
{
  const std::size_t n = ambient.dim();
  for (const auto &v : m_spanning) {
    if (v.size() != n)
      throw ShapeError("spanning vector has length " + std::to_string(v.size()) + ", ambient dimension is " +
                       std::to_string(n));
    if (!is_zero_vector(reduce(m_echelon, v))) {
      m_basis.push_back(v);
      m_echelon = echelon_of(m_basis, n);
    }
  }
  if (m_basis.empty())
    m_echelon = echelon_of({}, n);
}

Subspace Subspace::full(const TernaryAlgebra &ambient)
{
  std::vector<std::size_t> all(ambient.dim());
  for (std::size_t t = 0; t < all.size(); ++t)
    all[t] = t;
  return coordinate_span(ambient, all);
}

Subspace Subspace::coordinate_span(const TernaryAlgebra &ambient, const std::vector<std::size_t> &indices)
{
  std::vector<Element> vs;
  for (auto t : indices) {
    if (t >= ambient.dim())
      throw ShapeError("coordinate index out of range");
    vs.push_back(unit_vector<CycNum>(ambient.dim(), t));
  }
  return Subspace(ambient, std::move(vs));
}

bool Subspace::contains(const Element &v) const
{
  if (v.size() != m_ambient->dim())
    throw ShapeError("element length does not match the ambient dimension");
  return is_zero_vector(reduce(m_echelon, v));
}

std::optional<Element> Subspace::coordinates(const Element &v) const
{
  if (!contains(v))
    return std::nullopt;
  return coordinates_in(m_basis, v);
}

std::vector<Element> Subspace::argument_set() const
{
  std::vector<Element> out = m_basis;
  if (m_ambient->mode() == Linearity::ConjugateMid)
    for (const auto &b : m_basis)
      out.push_back(CycNum::i() * b);
  return out;
}

namespace {

template <class Pred, class Eval>
ClosureReport scan_triples(const std::vector<Element> &xs, const std::vector<Element> &ys,
                           const std::vector<Element> &zs, Pred &&accept, Eval &&eval)
{
  ClosureReport report;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < ys.size(); ++b)
      for (std::size_t c = 0; c < zs.size(); ++c) {
        ++report.triples_checked;
        Element v = eval(xs[a], ys[b], zs[c]);
        if (!accept(v)) {
          report.holds = false;
          report.failing = std::array<std::size_t, 3>{a, b, c};
          report.value = std::move(v);
          return report;
        }
      }
  return report;
}

} // namespace

ClosureReport is_subalgebra(const Subspace &s, const Bracket &br)
{
  auto args = s.argument_set();
  const auto &alg = s.ambient();
  return scan_triples(
      args, args, args, [&](const Element &v) { return s.contains(v); },
      [&](const Element &x, const Element &y, const Element &z) { return bracket(alg, br, x, y, z); });
}

IdealReport is_ideal(const Subspace &s, const Bracket &br)
{
  auto inner = s.argument_set();
  auto outer = argument_basis(s.ambient());
  const auto &alg = s.ambient();
  auto in_s = [&](const Element &v) { return s.contains(v); };
  auto eval = [&](const Element &x, const Element &y, const Element &z) { return bracket(alg, br, x, y, z); };

  IdealReport report;
  report.first_slot = scan_triples(inner, outer, outer, in_s, eval);
  report.all_slots = report.first_slot;
  if (report.all_slots.holds) {
    auto second = scan_triples(outer, inner, outer, in_s, eval);
    auto third = scan_triples(outer, outer, inner, in_s, eval);
    report.all_slots.triples_checked += second.triples_checked;
    if (!second.holds) {
      report.all_slots.holds = false;
      report.all_slots.failing = second.failing;
      report.all_slots.value = second.value;
    } else {
      report.all_slots.triples_checked += third.triples_checked;
      if (!third.holds) {
        report.all_slots.holds = false;
        report.all_slots.failing = third.failing;
        report.all_slots.value = third.value;
      }
    }
  }
  return report;
}

ClosureReport is_abelian(const Subspace &s, const Bracket &br)
{
  auto args = s.argument_set();
  const auto &alg = s.ambient();
  return scan_triples(
      args, args, args, [](const Element &v) { return is_zero_vector(v); },
      [&](const Element &x, const Element &y, const Element &z) { return bracket(alg, br, x, y, z); });
}

StructureTensor induced_constants(const Subspace &s, const Bracket &br)
{
  const auto &alg = s.ambient();
  const auto args = s.argument_set();
  const std::size_t d = s.dim();
  const bool realified = alg.mode() == Linearity::ConjugateMid;
  StructureTensor out(args.size());
  const CycNum half(Rat(1, 2));
  for (std::size_t a = 0; a < args.size(); ++a)
    for (std::size_t b = 0; b < args.size(); ++b)
      for (std::size_t c = 0; c < args.size(); ++c) {
        Element v = bracket(alg, br, args[a], args[b], args[c]);
        auto coords = s.coordinates(v);
        if (!coords)
          throw ClosureError("subspace is not closed under the " + br.name + " bracket", {a, b, c});
        if (!realified) {
          out.set_column(a, b, c, *coords);
          continue;
        }
        Element col(2 * d);
        for (std::size_t t = 0; t < d; ++t) {
          const CycNum &z = (*coords)[t];
          col[t] = half * (z + z.conj());
          col[d + t] = -(CycNum::i() * half) * (z - z.conj());
        }
        out.set_column(a, b, c, col);
      }
  return out;
}

std::string to_string(TwoDimType type)
{
  switch (type) {
  case TwoDimType::I:
    return "I";
  case TwoDimType::II:
    return "II";
  case TwoDimType::III:
    return "III";
  case TwoDimType::IV:
    return "IV";
  case TwoDimType::Unclassified:
    break;
  }
  return "unclassified";
}

StructureTensor fill_2dim(const CycNum &a, const CycNum &b, const CycNum &c, const CycNum &d)
{
  const CycNum w = CycNum::omega(), wb = CycNum::omega_bar();
  StructureTensor t(2);
  auto put = [&t](std::size_t i, std::size_t j, std::size_t k, const CycNum &x, const CycNum &y) {
    t.at(0, i, j, k) = x;
    t.at(1, i, j, k) = y;
  };
  put(0, 1, 0, a, b);
  put(0, 0, 1, w * a, w * b);
  put(1, 0, 0, wb * a, wb * b);
  put(1, 0, 1, c, d);
  put(1, 1, 0, w * c, w * d);
  put(0, 1, 1, wb * c, wb * d);
  return t;
}

namespace {

CycMatrix mat2(const CycNum &a, const CycNum &b, const CycNum &c, const CycNum &d)
{
  CycMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

CycMatrix scaled(const CycNum &s, CycMatrix m)
{
  for (auto &x : m.data)
    x *= s;
  return m;
}

CycMatrix operator+(const CycMatrix &a, const CycMatrix &b)
{
  CycMatrix out = a;
  for (std::size_t t = 0; t < out.data.size(); ++t)
    out.data[t] += b.data[t];
  return out;
}

CycNum one_minus_omega()
{
  return CycNum(1) - CycNum::omega();
}

// K(C) = (1/(1-w)) [[a, -c], [b, -d]]; a basis change A acts by
// K -> det(A) A^-1 K A.
CycMatrix k_matrix(const StructureTensor &c)
{
  CycNum f = one_minus_omega().inverse();
  return scaled(f, mat2(c.at(0, 0, 1, 0), -c.at(0, 1, 0, 1), c.at(1, 0, 1, 0), -c.at(1, 1, 0, 1)));
}

} // namespace

StructureTensor canonical_2dim(TwoDimType type)
{
  switch (type) {
  case TwoDimType::I:
    return StructureTensor(2);
  case TwoDimType::II:
    return fill_2dim(0, 1, 1, 0);
  case TwoDimType::III:
    return fill_2dim(0, 1, 0, 0);
  case TwoDimType::IV:
    return fill_2dim(1, 0, 0, -1);
  case TwoDimType::Unclassified:
    break;
  }
  throw Error("no canonical table for an unclassified algebra");
}

TwoDimClassification classify_constants_2dim(const StructureTensor &c)
{
  if (c.dim() != 2)
    throw DimensionError("2-dimensional classification needs dimension 2, got " + std::to_string(c.dim()));
  TwoDimClassification out;
  out.constants = c;
  if (c.is_zero_tensor()) {
    out.type = TwoDimType::I;
    out.witness = CycMatrix::identity(2);
    out.method = "zero";
    return out;
  }
  if (!(fill_2dim(c.at(0, 0, 1, 0), c.at(1, 0, 1, 0), c.at(0, 1, 0, 1), c.at(1, 1, 0, 1)) == c)) {
    out.method = "constants are not omega-symmetric";
    return out;
  }

  const CycMatrix k = k_matrix(c);
  const CycNum tr = k(0, 0) + k(1, 1);
  const CycNum dt = k(0, 0) * k(1, 1) - k(0, 1) * k(1, 0);
  TwoDimType type;
  if (k(0, 1).is_zero() && k(1, 0).is_zero() && k(0, 0) == k(1, 1))
    type = TwoDimType::IV;
  else if (tr.is_zero() && dt.is_zero())
    type = TwoDimType::III;
  else if (tr.is_zero())
    type = TwoDimType::II;
  else {
    out.method = "invariant tr(K)^2/det(K) matches no canonical type";
    return out;
  }

  const StructureTensor target = canonical_2dim(type);
  auto accept = [&](const CycMatrix &a, const char *method) {
    if (det(a).is_zero() || !(transform_constants(c, a) == target))
      return false;
    out.type = type;
    out.witness = a;
    out.method = method;
    return true;
  };

  if (c == target) {
    out.type = type;
    out.witness = CycMatrix::identity(2);
    out.method = "identity";
    return out;
  }

  const CycNum f = one_minus_omega().inverse();
  const CycMatrix swap = mat2(0, 1, 1, 0);

  // Diagonal scalings, optionally after swapping the basis vectors.
  if (type == TwoDimType::II || type == TwoDimType::III) {
    for (bool swapped : {false, true}) {
      const CycMatrix pre = swapped ? swap : CycMatrix::identity(2);
      // det(swap) = -1 and swap^-1 K swap reverses both indices.
      const CycMatrix kk = swapped ? scaled(CycNum(-1), mat2(k(1, 1), k(1, 0), k(0, 1), k(0, 0))) : k;
      if (!kk(0, 0).is_zero() || !kk(1, 1).is_zero() || kk(1, 0).is_zero())
        continue;
      auto lambda = exact_sqrt(f / kk(1, 0));
      std::optional<CycNum> mu = CycNum(1);
      if (type == TwoDimType::II)
        mu = kk(0, 1).is_zero() ? std::nullopt : exact_sqrt(-f / kk(0, 1));
      if (!lambda || !mu)
        continue;
      if (accept(pre * mat2(*lambda, 0, 0, *mu), swapped ? "swap-diagonal" : "diagonal"))
        return out;
    }
  }

  if (type == TwoDimType::IV) {
    const CycNum kappa = k(0, 0);
    if (accept(mat2(1, 0, 0, (one_minus_omega() * kappa).inverse()), "diagonal"))
      return out;
  }

  // Companion-basis construction: P = [v | Kv] brings K to companion form.
  auto companion = [](const CycMatrix &m) {
    Element v = unit_vector<CycNum>(2, 0);
    CycMatrix p = CycMatrix::from_columns({v, m * v});
    if (det(p).is_zero()) {
      v = unit_vector<CycNum>(2, 1);
      p = CycMatrix::from_columns({v, m * v});
    }
    return p;
  };

  if (type == TwoDimType::III) {
    CycMatrix p = companion(k);
    if (!det(p).is_zero()) {
      auto lambda = exact_sqrt(f / det(p));
      if (lambda && accept(p * mat2(*lambda, 0, 0, 1), "companion"))
        return out;
    }
  }

  if (type == TwoDimType::II) {
    const CycMatrix kt = k_matrix(target);
    const CycNum delta_t = kt(0, 0) * kt(1, 1) - kt(0, 1) * kt(1, 0);
    auto s = exact_sqrt(delta_t / dt);
    if (s) {
      CycMatrix pk = companion(k);
      CycMatrix pt = companion(scaled(s->inverse(), kt));
      if (!det(pk).is_zero() && !det(pt).is_zero()) {
        CycMatrix a0 = pk * inverse(pt);
        // Centralizer element Z = x I + y K_T with det Z = x^2 + q^2 y^2 = r.
        const CycNum r = *s / det(a0);
        const CycNum q = CycNum::i() * CycNum::omega() / CycNum::sqrt3();
        const CycNum x = (r + CycNum(1)) * CycNum(Rat(1, 2));
        const CycNum y = (r - CycNum(1)) / (CycNum(2) * CycNum::i() * q);
        CycMatrix z = scaled(x, CycMatrix::identity(2)) + scaled(y, kt);
        if (accept(a0 * z, "companion"))
          return out;
      }
    } else {
      out.method = "determinant ratio has no square root in Q(zeta_24)";
      return out;
    }
  }

  out.method = "no witness found";
  return out;
}

TwoDimClassification classify_2dim(const Subspace &s, const Bracket &br)
{
  if (s.ambient().mode() != Linearity::Trilinear)
    throw DimensionError("2-dimensional classification needs a trilinear ambient algebra");
  if (s.dim() != 2)
    throw DimensionError("2-dimensional classification needs a 2-dimensional subspace, got dimension " +
                         std::to_string(s.dim()));
  return classify_constants_2dim(induced_constants(s, br));
}

std::optional<CycMatrix> find_isomorphism(const StructureTensor &from, const StructureTensor &to)
{
  const std::size_t d = from.dim();
  if (to.dim() != d)
    return std::nullopt;
  const Tensor4<FloatC> cf = to_float(from);
  const Tensor4<FloatC> ct = to_float(to);
  std::array<FloatC, CycNum::order> roots;
  for (int t = 0; t < CycNum::order; ++t)
    roots[static_cast<std::size_t>(t)] = std::polar(1.0, std::numbers::pi * t / 12.0);

  std::vector<std::size_t> perm(d);
  for (std::size_t t = 0; t < d; ++t)
    perm[t] = t;
  std::uint64_t combos = 1;
  for (std::size_t t = 0; t < d; ++t)
    combos *= CycNum::order;

  // New basis b'_i = c_i b_perm(i): C'^m_{ijk} = c_i c_j c_k C^{perm m}_{perm i perm j perm k} / c_m.
  do {
    std::vector<int> expo(d);
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t rest = code;
      for (std::size_t t = 0; t < d; ++t) {
        expo[t] = static_cast<int>(rest % CycNum::order);
        rest /= CycNum::order;
      }
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i)
        for (std::size_t j = 0; j < d && ok; ++j)
          for (std::size_t k = 0; k < d && ok; ++k)
            for (std::size_t m = 0; m < d && ok; ++m) {
              int e = ((expo[i] + expo[j] + expo[k] - expo[m]) % 24 + 24) % 24;
              FloatC v = roots[static_cast<std::size_t>(e)] * cf.at(perm[m], perm[i], perm[j], perm[k]);
              ok = std::abs(v - ct.at(m, i, j, k)) < 1e-9;
            }
      if (!ok)
        continue;
      CycMatrix a(d, d);
      for (std::size_t t = 0; t < d; ++t)
        a(perm[t], t) = CycNum::zeta(expo[t]);
      if (transform_constants(from, a) == to)
        return a;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

DirectSumReport direct_sum_report(const std::vector<Subspace> &parts, const Bracket &br)
{
  DirectSumReport report;
  if (parts.empty())
    return report;
  const TernaryAlgebra &alg = parts.front().ambient();
  std::vector<Element> all;
  std::vector<std::size_t> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (&parts[p].ambient() != &alg)
      throw Error("direct_sum_report: parts must share one ambient algebra");
    report.part_dims.push_back(parts[p].dim());
    for (const auto &b : parts[p].basis()) {
      all.push_back(b);
      owner.push_back(p);
    }
  }
  Subspace total(alg, all);
  report.span_dim = total.dim();
  report.direct = report.span_dim == all.size();

  report.all_closed = true;
  for (const auto &part : parts) {
    report.closure.push_back(is_subalgebra(part, br));
    report.all_closed = report.all_closed && report.closure.back().holds;
  }

  const std::size_t np = parts.size();
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < np; ++q)
      for (std::size_t r = 0; r < np; ++r) {
        if (p == q && q == r)
          continue;
        CrossBracket cb;
        cb.parts = {p, q, r};
        std::set<std::size_t> lands;
        for (const auto &x : parts[p].argument_set())
          for (const auto &y : parts[q].argument_set())
            for (const auto &z : parts[r].argument_set()) {
              Element v = bracket(alg, br, x, y, z);
              if (is_zero_vector(v))
                continue;
              auto coords = report.direct ? coordinates_in(all, v) : std::nullopt;
              if (!coords) {
                cb.outside = true;
                continue;
              }
              for (std::size_t t = 0; t < coords->size(); ++t)
                if (!(*coords)[t].is_zero())
                  lands.insert(owner[t]);
            }
        cb.lands_in.assign(lands.begin(), lands.end());
        report.cross.push_back(std::move(cb));
      }
  return report;
}

} // namespace ternalg
