#include "ternalg/laws.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "ternalg/error.hpp"

namespace ternalg {

std::string to_string(Mode mode)
{
  return mode == Mode::Exact ? "exact" : "float";
}

Mode parse_mode(std::string_view text)
{
  if (text == "exact")
    return Mode::Exact;
  if (text == "float")
    return Mode::Float;
  throw ParseError("unknown mode '" + std::string(text) + "'", 0);
}

unsigned resolve_jobs(unsigned requested)
{
  if (requested > 0)
    return requested;
  if (const char *env = std::getenv("TERNALG_JOBS")) {
    char *end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && value > 0)
      return static_cast<unsigned>(value);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

nlohmann::json LawReport::to_json() const
{
  nlohmann::json j;
  j["law"] = law;
  j["verdict"] = verdict();
  j["mode"] = to_string(mode);
  j["regime"] = regime;
  j["tuples_checked"] = tuples_checked;
  j["tuples_total"] = tuples_total;
  j["certifying"] = certifying;
  if (counterexample) {
    j["counterexample"] = {{"args", counterexample->args},
                           {"residual", counterexample->residual},
                           {"residual_norm", counterexample->residual_norm}};
  }
  return j;
}

std::string LawReport::to_text() const
{
  std::ostringstream os;
  os << law << ": " << verdict() << " [" << to_string(mode) << ", " << regime << ", " << tuples_checked << "/"
     << tuples_total << " tuples" << (certifying ? "" : ", NON-CERTIFYING") << "]";
  if (counterexample) {
    os << "\n  counterexample: (";
    for (std::size_t t = 0; t < counterexample->args.size(); ++t)
      os << (t ? ", " : "") << counterexample->args[t];
    os << ")\n  residual: [";
    for (std::size_t t = 0; t < counterexample->residual.size(); ++t)
      os << (t ? ", " : "") << counterexample->residual[t];
    os << "]";
  }
  return os.str();
}

namespace {

// ---------------------------------------------------------------------------
// Deterministic chunked iteration

void parallel_for(std::uint64_t total, unsigned jobs, const std::function<void(std::uint64_t)> &body)
{
  if (total == 0)
    return;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, jobs), total));
  if (jobs == 1) {
    for (std::uint64_t t = 0; t < total; ++t)
      body(t);
    return;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(1024, total / (8ull * jobs)));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      while (true) {
        std::uint64_t start = next.fetch_add(chunk);
        if (start >= total)
          break;
        std::uint64_t end = std::min(total, start + chunk);
        for (std::uint64_t t = start; t < end; ++t)
          body(t);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error)
        error = std::current_exception();
      next.store(total);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

/// Index of the first t in [0, total) with fails(t), scanning in chunks.
std::optional<std::uint64_t> first_failure(std::uint64_t total, unsigned jobs,
                                           const std::function<bool(std::uint64_t)> &fails)
{
  constexpr std::uint64_t none = ~0ull;
  std::atomic<std::uint64_t> best{none};
  if (total == 0)
    return std::nullopt;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, jobs), total));
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(512, total / (8ull * jobs)));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      while (true) {
        std::uint64_t c = next.fetch_add(1);
        if (c >= chunks)
          break;
        std::uint64_t start = c * chunk;
        if (start > best.load())
          break;
        std::uint64_t end = std::min(total, start + chunk);
        for (std::uint64_t t = start; t < end && t < best.load(); ++t) {
          if (fails(t)) {
            std::uint64_t cur = best.load();
            while (t < cur && !best.compare_exchange_weak(cur, t)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error)
        error = std::current_exception();
      next.store(chunks);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  if (error)
    std::rethrow_exception(error);
  if (best.load() == none)
    return std::nullopt;
  return best.load();
}

std::uint64_t ipow(std::uint64_t base, int exp)
{
  std::uint64_t r = 1;
  for (int t = 0; t < exp; ++t)
    r *= base;
  return r;
}

std::array<std::size_t, 5> decode(std::uint64_t index, std::size_t base, int arity)
{
  std::array<std::size_t, 5> digits{};
  for (int pos = arity - 1; pos >= 0; --pos) {
    digits[pos] = static_cast<std::size_t>(index % base);
    index /= base;
  }
  return digits;
}

template <class S> using SparseVec = std::vector<std::pair<std::uint32_t, S>>;

template <class S> SparseVec<S> sparsify(const Vector<S> &v)
{
  SparseVec<S> out;
  for (std::size_t t = 0; t < v.size(); ++t)
    if (!is_zero(v[t]))
      out.emplace_back(static_cast<std::uint32_t>(t), v[t]);
  return out;
}

template <class S> void add_sparse(Vector<S> &acc, const SparseVec<S> &v)
{
  for (const auto &[m, x] : v)
    acc[m] += x;
}

template <class S> bool residual_fails(const Vector<S> &r, const CheckOptions &opts)
{
  if constexpr (std::is_same_v<S, CycNum>) {
    (void)opts;
    return !is_zero_vector(r);
  } else {
    return max_abs(r) > opts.tol;
  }
}

template <class S> Counterexample make_counterexample(std::vector<std::string> args, const Vector<S> &residual)
{
  Counterexample ce;
  ce.args = std::move(args);
  for (const auto &x : residual)
    ce.residual.push_back(format_scalar(x));
  ce.residual_norm = max_abs(residual);
  return ce;
}

template <class S> std::vector<Vector<S>> basis_in(const TernaryAlgebra &algebra)
{
  auto exact = argument_basis(algebra);
  if constexpr (std::is_same_v<S, CycNum>) {
    return exact;
  } else {
    std::vector<Vector<S>> out;
    for (const auto &b : exact)
      out.push_back(to_float(b));
    return out;
  }
}

template <class S> BasicTernaryAlgebra<S> algebra_in(const TernaryAlgebra &algebra)
{
  if constexpr (std::is_same_v<S, CycNum>)
    return algebra;
  else
    return to_float(algebra);
}

/// A law over `arity`-tuples of argument-basis elements.
template <class S> struct TupleLaw
{
  std::size_t base = 0;
  int arity = 0;
  /// Prepares caches; may be skipped when only a few tuples are visited.
  std::function<void(bool exhaustive)> prepare;
  std::function<Vector<S>(const std::array<std::size_t, 5> &)> residual;
};

template <class S>
LawReport run_tuple_law(const std::string &name, const std::string &regime, TupleLaw<S> law,
                        const std::vector<std::string> &labels, const CheckOptions &opts)
{
  LawReport report;
  report.law = name;
  report.mode = std::is_same_v<S, CycNum> ? Mode::Exact : Mode::Float;
  report.regime = regime;
  const std::uint64_t full = ipow(law.base, law.arity);
  report.tuples_total = full;
  std::uint64_t total = full;
  if (opts.limit && *opts.limit < full) {
    total = *opts.limit;
    report.certifying = false;
  }
  if (law.prepare)
    law.prepare(total == full);
  const unsigned jobs = resolve_jobs(opts.jobs);
  auto fail = first_failure(total, jobs, [&](std::uint64_t idx) {
    return residual_fails(law.residual(decode(idx, law.base, law.arity)), opts);
  });
  if (!fail) {
    report.tuples_checked = total;
    return report;
  }
  report.holds = false;
  report.tuples_checked = *fail + 1;
  auto tuple = decode(*fail, law.base, law.arity);
  std::vector<std::string> args;
  for (int p = 0; p < law.arity; ++p) {
    args.push_back(labels.at(tuple[p]));
    report.failing_tuple.push_back(tuple[p]);
  }
  report.counterexample = make_counterexample(std::move(args), law.residual(tuple));
  return report;
}

// ---------------------------------------------------------------------------
// Random exact samples (conjugate-mid algebras with large realified spaces)

Element random_element(std::size_t dim, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Element v(dim);
  for (auto &x : v)
    x = CycNum(Rat(num(rng), den(rng))) + CycNum(Rat(num(rng), den(rng))) * CycNum::i();
  return v;
}

std::string format_element(const Element &v)
{
  std::string s = "[";
  for (std::size_t t = 0; t < v.size(); ++t)
    s += (t ? ", " : "") + v[t].format();
  return s + "]";
}

using GeneralResidual = std::function<Element(const std::vector<Element> &)>;

/// Applies `residual` to random element tuples and merges into `report`.
void run_samples(LawReport &report, std::size_t dim, int arity, const GeneralResidual &residual,
                 const CheckOptions &opts)
{
  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<Element>> samples(opts.exact_samples);
  for (auto &tuple : samples)
    for (int p = 0; p < arity; ++p)
      tuple.push_back(random_element(dim, rng));
  auto fail = first_failure(samples.size(), resolve_jobs(opts.jobs),
                            [&](std::uint64_t idx) { return !is_zero_vector(residual(samples[idx])); });
  report.regime += "+exact-samples(" + std::to_string(opts.exact_samples) + ")";
  if (!fail) {
    report.tuples_checked += samples.size();
    report.tuples_total += samples.size();
    return;
  }
  report.holds = false;
  report.tuples_checked += *fail + 1;
  report.tuples_total += samples.size();
  std::vector<std::string> args;
  for (const auto &e : samples[*fail])
    args.push_back(format_element(e));
  report.counterexample = make_counterexample(std::move(args), residual(samples[*fail]));
}

/// Dispatches a law to the regime demanded by the algebra and options.
template <class Builder>
LawReport dispatch(const std::string &name, const TernaryAlgebra &algebra, int arity, Builder &&build,
                   const GeneralResidual &general, const CheckOptions &opts)
{
  const auto labels = argument_labels(algebra);
  const bool realified = algebra.mode() == Linearity::ConjugateMid;
  const std::string base_regime = realified ? "realified-exhaustive" : "exhaustive-basis";
  const std::uint64_t space = ipow(labels.size(), arity);
  if (opts.mode == Mode::Float)
    return run_tuple_law<FloatC>(name, base_regime, build(FloatC{}), labels, opts);
  if (!realified || space <= opts.exact_exhaustive_max || opts.limit)
    return run_tuple_law<CycNum>(name, base_regime, build(CycNum{}), labels, opts);

  // Large realified space: float pass over every tuple, exact confirmation of
  // any float failure, then exact random samples.
  auto law = build(CycNum{});
  LawReport report = run_tuple_law<FloatC>(name, "realified-float-exhaustive", build(FloatC{}), labels, opts);
  report.mode = Mode::Exact;
  if (!report.holds) {
    std::array<std::size_t, 5> tuple{};
    std::copy(report.failing_tuple.begin(), report.failing_tuple.end(), tuple.begin());
    if (law.prepare)
      law.prepare(false);
    Element exact = law.residual(tuple);
    report.counterexample = make_counterexample(report.counterexample->args, exact);
    if (is_zero_vector(exact)) {
      report.holds = true;
      report.certifying = false;
      report.counterexample.reset();
    }
    return report;
  }
  run_samples(report, algebra.dim(), arity, general, opts);
  return report;
}

// ---------------------------------------------------------------------------
// Individual laws

/// Cache of the products of all argument-basis triples.
template <class S> struct TripleCache
{
  std::size_t n = 0;
  std::vector<Vector<S>> values;
  const Vector<S> &operator()(std::size_t a, std::size_t b, std::size_t c) const { return values[(a * n + b) * n + c]; }
};

template <class S, class F> TripleCache<S> build_triples(std::size_t n, unsigned jobs, F &&f)
{
  TripleCache<S> cache;
  cache.n = n;
  cache.values.resize(n * n * n);
  parallel_for(n * n * n, jobs, [&](std::uint64_t idx) {
    auto t = decode(idx, n, 3);
    cache.values[idx] = f(t[0], t[1], t[2]);
  });
  return cache;
}

/// Products L = (s.u.v).x.y, M = s.(mid).y and R = s.u.(v.x.y) of a basis tuple.
template <class S> struct AssocTerms
{
  std::shared_ptr<BasicTernaryAlgebra<S>> algebra;
  std::vector<Vector<S>> basis;
  std::shared_ptr<TripleCache<S>> triples;
  int kind = 2;

  std::array<Vector<S>, 3> terms(const std::array<std::size_t, 5> &t) const
  {
    const auto &[s, u, v, x, y] = t;
    const auto &B = basis;
    const auto &T = *triples;
    Vector<S> left = algebra->product(T(s, u, v), B[x], B[y]);
    Vector<S> mid = kind == 1 ? algebra->product(B[s], T(u, v, x), B[y]) : algebra->product(B[s], T(x, v, u), B[y]);
    Vector<S> right = algebra->product(B[s], B[u], T(v, x, y));
    return {std::move(left), std::move(mid), std::move(right)};
  }
};

template <class S> AssocTerms<S> make_assoc_terms(const TernaryAlgebra &exact, int kind, const CheckOptions &opts)
{
  AssocTerms<S> out;
  out.algebra = std::make_shared<BasicTernaryAlgebra<S>>(algebra_in<S>(exact));
  out.basis = basis_in<S>(exact);
  out.kind = kind;
  auto alg = out.algebra;
  auto basis = out.basis;
  out.triples = std::make_shared<TripleCache<S>>(build_triples<S>(
      basis.size(), resolve_jobs(opts.jobs),
      [&](std::size_t a, std::size_t b, std::size_t c) { return alg->product(basis[a], basis[b], basis[c]); }));
  return out;
}

Element assoc_general(const TernaryAlgebra &a, int kind, const std::vector<Element> &t)
{
  Element left = a.product(a.product(t[0], t[1], t[2]), t[3], t[4]);
  Element mid = kind == 1 ? a.product(t[0], a.product(t[1], t[2], t[3]), t[4])
                          : a.product(t[0], a.product(t[3], t[2], t[1]), t[4]);
  Element right = a.product(t[0], t[1], a.product(t[2], t[3], t[4]));
  Element r = left - mid;
  return is_zero_vector(r) ? mid - right : r;
}

void check_kind(int kind)
{
  if (kind != 1 && kind != 2)
    throw Error("associativity kind must be 1 or 2");
}

} // namespace

LawReport check_assoc(const TernaryAlgebra &algebra, int kind, const CheckOptions &opts)
{
  check_kind(kind);
  auto build = [&](auto tag) {
    using S = decltype(tag);
    TupleLaw<S> law;
    law.base = argument_basis(algebra).size();
    law.arity = 5;
    auto terms = std::make_shared<std::optional<AssocTerms<S>>>();
    law.prepare = [terms, &algebra, kind, &opts](bool) {
      if (!*terms)
        *terms = make_assoc_terms<S>(algebra, kind, opts);
    };
    law.residual = [terms](const std::array<std::size_t, 5> &t) {
      auto [l, m, r] = (*terms)->terms(t);
      Vector<S> d = l - m;
      if (!is_zero_vector(d))
        return d;
      return m - r;
    };
    return law;
  };
  GeneralResidual general = [&](const std::vector<Element> &t) { return assoc_general(algebra, kind, t); };
  return dispatch("assoc-kind" + std::to_string(kind), algebra, 5, build, general, opts);
}

LawReport check_q_associators(const TernaryAlgebra &algebra, int kind, const CheckOptions &opts)
{
  check_kind(kind);
  auto build = [&](auto tag) {
    using S = decltype(tag);
    TupleLaw<S> law;
    law.base = argument_basis(algebra).size();
    law.arity = 5;
    auto terms = std::make_shared<std::optional<AssocTerms<S>>>();
    law.prepare = [terms, &algebra, kind, &opts](bool) {
      if (!*terms)
        *terms = make_assoc_terms<S>(algebra, kind, opts);
    };
    const S w = scalar_cast<S>(CycNum::omega()), wb = scalar_cast<S>(CycNum::omega_bar());
    law.residual = [terms, w, wb](const std::array<std::size_t, 5> &t) {
      auto [l, m, r] = (*terms)->terms(t);
      Vector<S> q_w = l, q_wb = l;
      axpy(q_w, w, m);
      axpy(q_w, wb, r);
      axpy(q_wb, wb, m);
      axpy(q_wb, w, r);
      q_w.insert(q_w.end(), q_wb.begin(), q_wb.end());
      return q_w;
    };
    return law;
  };
  GeneralResidual general = [&](const std::vector<Element> &t) {
    Element q_w = assoc_q(algebra, kind, Root::Omega, t[0], t[1], t[2], t[3], t[4]);
    Element q_wb = assoc_q(algebra, kind, Root::OmegaBar, t[0], t[1], t[2], t[3], t[4]);
    q_w.insert(q_w.end(), q_wb.begin(), q_wb.end());
    return q_w;
  };
  return dispatch("q-associators-kind" + std::to_string(kind), algebra, 5, build, general, opts);
}

LawReport check_omega_symmetry(const TernaryAlgebra &algebra, const Bracket &br, const CheckOptions &opts)
{
  auto build = [&](auto tag) {
    using S = decltype(tag);
    TupleLaw<S> law;
    law.base = argument_basis(algebra).size();
    law.arity = 3;
    const S root = scalar_cast<S>(br.symmetry_root);
    auto alg = std::make_shared<BasicTernaryAlgebra<S>>(algebra_in<S>(algebra));
    auto basis = std::make_shared<std::vector<Vector<S>>>(basis_in<S>(algebra));
    law.residual = [alg, basis, root, br](const std::array<std::size_t, 5> &t) {
      const auto &B = *basis;
      Vector<S> r = bracket(*alg, br, B[t[0]], B[t[1]], B[t[2]]);
      axpy(r, -root, bracket(*alg, br, B[t[1]], B[t[2]], B[t[0]]));
      return r;
    };
    return law;
  };
  GeneralResidual general = [&](const std::vector<Element> &t) {
    Element r = bracket(algebra, br, t[0], t[1], t[2]);
    axpy(r, -br.symmetry_root, bracket(algebra, br, t[1], t[2], t[0]));
    return r;
  };
  return dispatch("symmetry[" + br.name + "]", algebra, 3, build, general, opts);
}

namespace {

/// Double brackets [[a,b,c],x,y] of argument-basis elements, evaluated through
/// the algebra's product and cached when the tuple space is small enough.
template <class S> struct DoubleBracketTable
{
  static constexpr std::uint64_t cache_limit = 1u << 17;

  std::shared_ptr<BasicTernaryAlgebra<S>> algebra;
  Bracket br;
  std::vector<Vector<S>> basis;
  TripleCache<S> inner;
  std::vector<SparseVec<S>> cache;
  std::size_t n = 0;

  SparseVec<S> compute(std::size_t a, std::size_t b, std::size_t c, std::size_t x, std::size_t y) const
  {
    return sparsify(bracket(*algebra, br, inner(a, b, c), basis[x], basis[y]));
  }

  void add(Vector<S> &acc, std::size_t a, std::size_t b, std::size_t c, std::size_t x, std::size_t y) const
  {
    if (!cache.empty())
      add_sparse(acc, cache[(((a * n + b) * n + c) * n + x) * n + y]);
    else
      add_sparse(acc, compute(a, b, c, x, y));
  }
};

/// Residual of the GA(1,5)-identity on the index tuple t, given an accessor
/// add(acc, a, b, c, x, y) accumulating [[a,b,c],x,y].
template <class S, class Table>
Vector<S> ga_residual_indices(const Table &table, std::size_t dim, const std::array<std::size_t, 5> &t)
{
  Vector<S> acc(dim, S{});
  for (int k = 0; k < 5; ++k) {
    const std::size_t u = t[k % 5], v = t[(k + 1) % 5], w = t[(k + 2) % 5], x = t[(k + 3) % 5], y = t[(k + 4) % 5];
    table.add(acc, u, v, w, x, y);
    table.add(acc, u, x, v, y, w);
    table.add(acc, u, y, x, w, v);
    table.add(acc, u, w, y, v, x);
  }
  return acc;
}

} // namespace

LawReport check_ga15_identity(const TernaryAlgebra &algebra, const Bracket &br, const CheckOptions &opts)
{
  auto build = [&](auto tag) {
    using S = decltype(tag);
    TupleLaw<S> law;
    law.base = argument_basis(algebra).size();
    law.arity = 5;
    auto table = std::make_shared<DoubleBracketTable<S>>();
    law.prepare = [table, &algebra, br, &opts](bool exhaustive) {
      if (table->algebra)
        return;
      table->algebra = std::make_shared<BasicTernaryAlgebra<S>>(algebra_in<S>(algebra));
      table->br = br;
      table->basis = basis_in<S>(algebra);
      table->n = table->basis.size();
      const unsigned jobs = resolve_jobs(opts.jobs);
      auto alg = table->algebra;
      auto &basis = table->basis;
      table->inner = build_triples<S>(table->n, jobs, [&](std::size_t a, std::size_t b, std::size_t c) {
        return bracket(*alg, br, basis[a], basis[b], basis[c]);
      });
      const std::uint64_t count = ipow(table->n, 5);
      if (exhaustive && count <= DoubleBracketTable<S>::cache_limit) {
        table->cache.resize(count);
        parallel_for(count, jobs, [&](std::uint64_t idx) {
          auto t = decode(idx, table->n, 5);
          table->cache[idx] = table->compute(t[0], t[1], t[2], t[3], t[4]);
        });
      }
    };
    const std::size_t dim = algebra.dim();
    law.residual = [table, dim](const std::array<std::size_t, 5> &t) {
      return ga_residual_indices<S>(*table, dim, t);
    };
    return law;
  };
  GeneralResidual general = [&](const std::vector<Element> &t) {
    auto b = [&](const Element &x, const Element &y, const Element &z) { return bracket(algebra, br, x, y, z); };
    return ga15_residual<Element>(b, t[0], t[1], t[2], t[3], t[4]);
  };
  return dispatch("ga15-identity[" + br.name + "]", algebra, 5, build, general, opts);
}

namespace {

/// E(a,b,c,x,y)^p = sum_m C^m_{abc} C^p_{mxy}, by explicit index loops.
template <class S> struct ConstantTable
{
  std::size_t n = 0;
  std::shared_ptr<Tensor4<S>> c;
  std::vector<SparseVec<S>> columns;
  std::vector<SparseVec<S>> cache;

  SparseVec<S> compute(std::size_t a, std::size_t b, std::size_t cc, std::size_t x, std::size_t y) const
  {
    Vector<S> out(n, S{});
    for (const auto &[m, val] : columns[(a * n + b) * n + cc])
      for (std::size_t p = 0; p < n; ++p) {
        const S &inner = c->at(p, m, x, y);
        if (!is_zero(inner))
          out[p] += val * inner;
      }
    return sparsify(out);
  }

  void add(Vector<S> &acc, std::size_t a, std::size_t b, std::size_t cc, std::size_t x, std::size_t y) const
  {
    if (!cache.empty())
      add_sparse(acc, cache[(((a * n + b) * n + cc) * n + x) * n + y]);
    else
      add_sparse(acc, compute(a, b, cc, x, y));
  }
};

} // namespace

LawReport check_ga15_system(const StructureTensor &c, const CheckOptions &opts, const std::vector<std::string> &labels)
{
  const std::size_t n = c.dim();
  std::vector<std::string> names = labels;
  if (names.empty())
    for (std::size_t t = 0; t < n; ++t)
      names.push_back(std::to_string(t + 1));
  auto build = [&](auto tag) {
    using S = decltype(tag);
    TupleLaw<S> law;
    law.base = n;
    law.arity = 5;
    auto table = std::make_shared<ConstantTable<S>>();
    law.prepare = [table, &c, n, &opts](bool exhaustive) {
      table->n = n;
      if constexpr (std::is_same_v<S, CycNum>)
        table->c = std::make_shared<Tensor4<S>>(c);
      else
        table->c = std::make_shared<Tensor4<S>>(to_float(c));
      table->columns.resize(n * n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t cc = 0; cc < n; ++cc)
            table->columns[(a * n + b) * n + cc] = sparsify(table->c->column(a, b, cc));
      const std::uint64_t count = ipow(n, 5);
      if (exhaustive && count <= DoubleBracketTable<S>::cache_limit) {
        table->cache.resize(count);
        parallel_for(count, resolve_jobs(opts.jobs), [&](std::uint64_t idx) {
          auto t = decode(idx, n, 5);
          table->cache[idx] = table->compute(t[0], t[1], t[2], t[3], t[4]);
        });
      }
    };
    law.residual = [table, n](const std::array<std::size_t, 5> &t) { return ga_residual_indices<S>(*table, n, t); };
    return law;
  };
  if (opts.mode == Mode::Float)
    return run_tuple_law<FloatC>("ga15-system", "exhaustive-indices", build(FloatC{}), names, opts);
  return run_tuple_law<CycNum>("ga15-system", "exhaustive-indices", build(CycNum{}), names, opts);
}

} // namespace ternalg
