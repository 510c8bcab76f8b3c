#include "ternalg/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "ternalg/descriptor.hpp"
#include "ternalg/error.hpp"
#include "ternalg/perms.hpp"
#include "ternalg/subalg.hpp"
#include "ternalg/zoo.hpp"

namespace ternalg {

bool BundleReport::holds() const
{
  return std::all_of(claims.begin(), claims.end(), [](const Claim &c) { return c.holds; });
}

const std::vector<std::string> &reproduce_targets()
{
  static const std::vector<std::string> targets{"presentation", "twodim-table",    "vector-prop",    "traces",
                                                "theorem2",     "msc2-decomp", "subalgebra-list"};
  return targets;
}

namespace {

class Recorder
{
public:
  Recorder(BundleReport &report, const std::function<void(const Claim &)> &sink) : m_report(report), m_sink(sink) {}

  void operator()(std::string name, bool holds, std::string detail = {})
  {
    m_report.claims.push_back({std::move(name), holds, std::move(detail)});
    if (m_sink)
      m_sink(m_report.claims.back());
  }

private:
  BundleReport &m_report;
  const std::function<void(const Claim &)> &m_sink;
};

const TernaryAlgebra &g_algebra()
{
  static const TernaryAlgebra g = cubic2_in_G_basis();
  return g;
}

Element g(std::size_t k)
{
  return unit_vector<CycNum>(8, k - 1);
}

std::string span_name(const std::vector<std::size_t> &idx)
{
  std::string s = "<";
  for (std::size_t t = 0; t < idx.size(); ++t)
    s += (t ? ",G" : "G") + std::to_string(idx[t]);
  return s + ">";
}

Subspace g_span(const std::vector<std::size_t> &idx)
{
  std::vector<std::size_t> zero_based;
  for (auto k : idx)
    zero_based.push_back(k - 1);
  return Subspace::coordinate_span(g_algebra(), zero_based);
}

std::string matrix_text(const CycMatrix &m)
{
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols; ++c)
      os << (c ? ", " : "") << m(r, c).format();
  }
  os << "]";
  return os.str();
}

void presentation(Recorder &rec)
{
  auto r = check_presentation();
  rec("generated subgroup <sigma, tau> has order 20", r.group_order == 20,
      "order " + std::to_string(r.group_order));
  rec("sigma^5 = e", r.sigma_order_5);
  rec("tau^4 = e", r.tau_order_4);
  rec("tau sigma tau^-1 = sigma^2", r.conjugation);
  rec("every element is x -> a x + b over F_5", r.all_affine && r.affine_matches == 20,
      std::to_string(r.affine_matches) + " distinct affine maps");
}

const std::vector<std::vector<std::size_t>> &abelian_spans()
{
  static const std::vector<std::vector<std::size_t>> s{{3, 6}, {3, 8}, {4, 5}, {4, 8}, {5, 7}, {6, 7}, {7, 8}};
  return s;
}

const std::vector<std::vector<std::size_t>> &type2_spans()
{
  static const std::vector<std::vector<std::size_t>> s{{1, 2}, {3, 4}, {3, 5}, {4, 6}, {5, 6},
                                                       {3, 7}, {4, 7}, {5, 8}, {6, 8}};
  return s;
}

void twodim_table(Recorder &rec)
{
  const Bracket br = Bracket::omega();
  for (const auto &idx : abelian_spans()) {
    auto s = g_span(idx);
    auto ab = is_abelian(s, br);
    auto cls = classify_2dim(s, br);
    rec(span_name(idx) + " is an abelian subalgebra of type I", ab.holds && cls.type == TwoDimType::I,
        "type " + to_string(cls.type));
  }
  for (const auto &idx : type2_spans()) {
    auto s = g_span(idx);
    auto cls = classify_2dim(s, br);
    bool ok = cls.type == TwoDimType::II && cls.witness &&
              transform_constants(induced_constants(s, br), *cls.witness) == canonical_2dim(TwoDimType::II);
    rec(span_name(idx) + " is of type II", ok,
        "type " + to_string(cls.type) + " via " + cls.method +
            (cls.witness ? ", witness " + matrix_text(*cls.witness) : ""));
  }
  for (const auto &idx : {std::vector<std::size_t>{3, 4}, std::vector<std::size_t>{5, 6}}) {
    auto cls = classify_2dim(g_span(idx), br);
    rec(span_name(idx) + " is type II in the given basis", cls.type == TwoDimType::II && cls.method == "identity",
        "method " + cls.method);
  }
  auto iv = classify_constants_2dim(canonical_2dim(TwoDimType::IV));
  rec("canonical type IV table classifies as IV", iv.type == TwoDimType::IV && iv.method == "identity");
}

void vector_prop(Recorder &rec)
{
  const Bracket br = Bracket::reduced();
  const CycNum w = CycNum::omega(), wb = CycNum::omega_bar();
  for (std::size_t n : {2, 3, 4}) {
    auto alg = vector_algebra(n, VectorForm::Alpha);
    auto c = structure_constants(alg, br);
    StructureTensor expect(n);
    auto delta = [](std::size_t a, std::size_t b) { return a == b ? CycNum(1) : CycNum(0); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t m = 0; m < n; ++m)
            expect.at(m, i, j, k) = delta(i, k) * delta(m, j) + w * delta(i, j) * delta(m, k) +
                                    wb * delta(j, k) * delta(m, i);
    rec("vector n=" + std::to_string(n) + ": constants match the closed form", c == expect);
  }
  const std::size_t n = 4;
  auto alg = vector_algebra(n, VectorForm::Alpha);
  auto e = [&](std::size_t t) { return unit_vector<CycNum>(n, t); };
  bool pairs = true, distinct = true;
  std::string where;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (!(bracket(alg, br, e(i), e(j), e(i)) == e(j)) || !(bracket(alg, br, e(j), e(i), e(j)) == e(i))) {
        pairs = false;
        where = "e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1);
      }
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && !is_zero_vector(bracket(alg, br, e(i), e(j), e(k))))
          distinct = false;
    }
  rec("vector n=4: [ei,ej,ei] = ej and [ej,ei,ej] = ei", pairs, where);
  rec("vector n=4: [ei,ej,ek] = 0 for distinct i,j,k", distinct);
  std::size_t closed = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < n; ++t)
      if (mask >> t & 1u)
        idx.push_back(t);
    closed += is_subalgebra(Subspace::coordinate_span(alg, idx), br).holds ? 1 : 0;
  }
  rec("vector n=4: all 15 coordinate spans are subalgebras", closed == 15, std::to_string(closed) + " closed");
}

void traces(Recorder &rec)
{
  const std::size_t n = 2, d = 8;
  auto alg = cubic_algebra(n, Pairing::A, false);
  auto trace_rows = [&](TracePair pair) {
    std::vector<Element> rows(n, Element(d));
    for (std::size_t x = 0; x < d; ++x) {
      auto t = cubic_trace(unit_vector<CycNum>(d, x), n, pair);
      for (std::size_t r = 0; r < n; ++r)
        rows[r][x] = t[r];
    }
    return rows;
  };
  auto kernel_of = [&](const std::vector<Element> &rows) {
    CycMatrix m(rows.size(), d);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < d; ++c)
        m(r, c) = rows[r][c];
    return nullspace(m);
  };
  auto t12 = trace_rows(TracePair::T12);
  std::vector<Element> all = t12;
  for (auto pair : {TracePair::T13, TracePair::T23})
    for (auto &row : trace_rows(pair))
      all.push_back(row);
  auto k0 = kernel_of(t12);
  auto k1 = kernel_of(all);
  rec("dim ker Tr_12 = 6", k0.size() == 6, "dim " + std::to_string(k0.size()));
  rec("dim of the common kernel of all three traces = 2", k1.size() == 2, "dim " + std::to_string(k1.size()));

  const Bracket br = Bracket::omega();
  Subspace t0(alg, k0), t1(alg, k1);
  auto c0 = is_subalgebra(t0, br);
  auto c1 = is_subalgebra(t1, br);
  rec("ker Tr_12 is closed under the omega-commutator", c0.holds,
      std::to_string(c0.triples_checked) + " basis triples");
  rec("the common trace kernel is closed under the omega-commutator", c1.holds,
      std::to_string(c1.triples_checked) + " basis triples");

  auto gb = canonical_G_basis();
  bool g_in_t0 = true;
  std::string in_t1;
  for (std::size_t k = 0; k < 8; ++k) {
    bool in0 = t0.contains(gb[k]);
    if (k < 6 && !in0)
      g_in_t0 = false;
    if (k >= 6 && in0)
      g_in_t0 = false;
    if (t1.contains(gb[k]))
      in_t1 += (in_t1.empty() ? "G" : ", G") + std::to_string(k + 1);
  }
  rec("ker Tr_12 = <G1,...,G6>", g_in_t0);
  std::vector<Element> g_in_t1;
  for (const auto &x : gb)
    if (t1.contains(x))
      g_in_t1.push_back(x);
  rec("the G-basis vectors in the common trace kernel span it", Subspace(alg, g_in_t1).dim() == 2,
      in_t1.empty() ? "none" : in_t1);
}

struct Relation
{
  std::size_t a, b, c;
  const char *g3;
  const char *g4;
};

void theorem2(Recorder &rec, const CheckOptions &opts)
{
  // i/(4 sqrt 2) = i*r2/8 and 3/(4 sqrt 2) = 3*r2/8.
  static const Relation relations[] = {
      {2, 3, 2, "-1/32", "3/32*i"},         {2, 4, 2, "3/32*i", "9/32"},
      {3, 2, 3, "0", "1/8*i*r2"},           {4, 2, 4, "0", "-3/8*r2"},
      {3, 4, 3, "0", "1"},                  {4, 3, 4, "1", "0"},
      {2, 3, 4, "1/8*i*r2", "-3/8*w*r2"},   {4, 3, 2, "1/8*i*r2", "-3/8*wb*r2"},
  };
  const auto &alg = g_algebra();
  const Bracket br = Bracket::omega();
  for (const auto &r : relations) {
    Element expect(8);
    expect[2] = parse_cyc(r.g3);
    expect[3] = parse_cyc(r.g4);
    Element got = bracket(alg, br, g(r.a), g(r.b), g(r.c));
    std::string name = "[G" + std::to_string(r.a) + ",G" + std::to_string(r.b) + ",G" + std::to_string(r.c) +
                       "] = " + format_element(expect, alg.labels());
    rec(name, got == expect, "computed " + format_element(got, alg.labels()));
  }
  auto sym = check_omega_symmetry(alg, br, opts);
  rec("omega-symmetry in the G-basis", sym.holds, sym.to_text());
  auto ga = check_ga15_identity(alg, br, opts);
  rec("GA(1,5)-identity in the G-basis", ga.holds, ga.to_text());
}

void msc2_decomp(Recorder &rec)
{
  const Bracket br = Bracket::omega();
  auto describe = [](const DirectSumReport &r) {
    std::ostringstream os;
    os << "part dims";
    for (auto d : r.part_dims)
      os << " " << d;
    os << ", span dim " << r.span_dim;
    std::size_t zero = 0;
    for (const auto &c : r.cross)
      zero += c.lands_in.empty() && !c.outside ? 1 : 0;
    os << ", " << zero << "/" << r.cross.size() << " mixed patterns vanish";
    return os.str();
  };
  std::vector<Subspace> three{g_span({2, 3, 4}), g_span({1, 5, 6})};
  auto r3 = direct_sum_report(three, br);
  rec("T0 = <G2,G3,G4> + <G1,G5,G6> is a direct sum", r3.direct, describe(r3));
  rec("<G2,G3,G4> and <G1,G5,G6> are subalgebras", r3.all_closed);

  std::vector<Subspace> four{g_span({1, 2}), g_span({3, 4}), g_span({5, 6}), g_span({7, 8})};
  auto r4 = direct_sum_report(four, br);
  rec("M2 = <G1,G2> + <G3,G4> + <G5,G6> + <G7,G8> is a direct sum", r4.direct && r4.span_dim == 8, describe(r4));
  rec("the four 2-dimensional parts are subalgebras", r4.all_closed);

  auto from = induced_constants(three[1], br);
  auto to = induced_constants(three[0], br);
  auto iso = find_isomorphism(from, to);
  rec("<G1,G5,G6> and <G2,G3,G4> are isomorphic", iso.has_value(),
      iso ? "witness " + matrix_text(*iso) + " (exactly verified)" : "unclassified: no monomial witness found");
}

void subalgebra_list(Recorder &rec)
{
  const Bracket br = Bracket::omega();
  std::vector<std::vector<std::size_t>> expected_abelian = abelian_spans();
  std::vector<std::vector<std::size_t>> expected_two = type2_spans();
  std::vector<std::string> extra;
  std::size_t closed = 0;
  bool all_match = true;
  for (std::size_t a = 1; a <= 8; ++a)
    for (std::size_t b = a + 1; b <= 8; ++b) {
      std::vector<std::size_t> idx{a, b};
      auto s = g_span(idx);
      if (!is_subalgebra(s, br).holds)
        continue;
      ++closed;
      auto cls = classify_2dim(s, br);
      bool in_abelian = std::find(expected_abelian.begin(), expected_abelian.end(), idx) != expected_abelian.end();
      bool in_two = std::find(expected_two.begin(), expected_two.end(), idx) != expected_two.end();
      if (in_abelian)
        all_match = all_match && cls.type == TwoDimType::I;
      else if (in_two)
        all_match = all_match && cls.type == TwoDimType::II;
      else
        extra.push_back(span_name(idx) + " type " + to_string(cls.type));
      rec(span_name(idx) + " is a subalgebra of type " + to_string(cls.type), cls.type != TwoDimType::Unclassified,
          cls.method);
    }
  std::string detail = std::to_string(closed) + " closed coordinate 2-spans";
  for (const auto &x : extra)
    detail += "; extra " + x;
  rec("closed coordinate 2-spans of the G-basis carry the asserted types", all_match, detail);
}

} // namespace

BundleReport reproduce(std::string_view target, const CheckOptions &opts,
                       const std::function<void(const Claim &)> &on_claim)
{
  BundleReport report;
  report.target = std::string(target);
  Recorder rec(report, on_claim);
  if (target == "presentation")
    presentation(rec);
  else if (target == "twodim-table")
    twodim_table(rec);
  else if (target == "vector-prop")
    vector_prop(rec);
  else if (target == "traces")
    traces(rec);
  else if (target == "theorem2")
    theorem2(rec, opts);
  else if (target == "msc2-decomp")
    msc2_decomp(rec);
  else if (target == "subalgebra-list")
    subalgebra_list(rec);
  else
    throw ParseError("unknown reproduce target '" + std::string(target) + "'", 0);
  return report;
}

} // namespace ternalg
