#pragma once

// Exhaustive and sampled verification of the defining identities of ternary
// algebras and ternary omega-Lie algebras.
//
// Multilinear identities are checked on all tuples drawn from the argument
// basis (see argument_basis), which is sufficient for trilinear products and
// for conjugate-mid products once the basis is realified. Tuples are visited
// in lexicographic order; the reported counterexample is always the first
// failing tuple in that order, regardless of the number of worker threads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ternalg/algebra.hpp"

namespace ternalg {

enum class Mode
{
  Exact,
  Float
};

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct CheckOptions
{
  Mode mode = Mode::Exact;
  /// Float-mode threshold on the largest residual coordinate.
  double tol = 1e-9;
  /// Worker threads; 0 selects TERNALG_JOBS or the hardware concurrency.
  unsigned jobs = 0;
  /// Visit only the first `limit` tuples (the report is then non-certifying).
  std::optional<std::uint64_t> limit;
  /// Exact random tuples used when an exact exhaustive pass is too large.
  std::size_t exact_samples = 256;
  std::uint64_t seed = 1;
  /// Largest realified tuple space that is still checked exactly and
  /// exhaustively for conjugate-mid algebras.
  std::uint64_t exact_exhaustive_max = 1u << 15;
};

/// Resolve the effective worker count for `requested` (0 = automatic).
unsigned resolve_jobs(unsigned requested);

struct Counterexample
{
  std::vector<std::string> args;
  std::vector<std::string> residual;
  double residual_norm = 0.0;
};

struct LawReport
{
  std::string law;
  bool holds = true;
  Mode mode = Mode::Exact;
  std::string regime;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_total = 0;
  /// False when the tuple space was truncated by a limit.
  bool certifying = true;
  std::optional<Counterexample> counterexample;
  /// Argument-basis indices of the counterexample tuple.
  std::vector<std::size_t> failing_tuple;

  std::string verdict() const { return holds ? "holds" : "fails"; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Associativity of the first (kind 1) or second (kind 2) kind.
LawReport check_assoc(const TernaryAlgebra &algebra, int kind, const CheckOptions &opts = {});

/// Both omega- and omega-bar associators of the given kind vanish.
LawReport check_q_associators(const TernaryAlgebra &algebra, int kind, const CheckOptions &opts = {});

/// [u,v,w] = r [v,w,u] with r the bracket's symmetry root.
LawReport check_omega_symmetry(const TernaryAlgebra &algebra, const Bracket &br, const CheckOptions &opts = {});

/// The GA(1,5)-identity evaluated through the algebra's product.
LawReport check_ga15_identity(const TernaryAlgebra &algebra, const Bracket &br, const CheckOptions &opts = {});

/// The GA(1,5)-system on structure constants, evaluated by index loops.
LawReport check_ga15_system(const StructureTensor &c, const CheckOptions &opts = {},
                            const std::vector<std::string> &labels = {});

/// Generic GA(1,5) residual of five arguments for any bracket callable.
template <class Elem, class F>
Elem ga15_residual(F &&br, const Elem &u, const Elem &v, const Elem &w, const Elem &x, const Elem &y);

} // namespace ternalg

#include "ternalg/perms.hpp"

namespace ternalg {

template <class Elem, class F>
Elem ga15_residual(F &&br, const Elem &u, const Elem &v, const Elem &w, const Elem &x, const Elem &y)
{
  auto four = [&](const Elem &a, const Elem &b, const Elem &c, const Elem &d, const Elem &e) {
    return br(br(a, b, c), d, e) + br(br(a, d, b), e, c) + br(br(a, e, d), c, b) + br(br(a, c, e), b, d);
  };
  return cyclic_sum<Elem>(four, std::array<Elem, 5>{u, v, w, x, y});
}

} // namespace ternalg
