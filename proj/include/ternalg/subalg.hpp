#pragma once

// Subspaces of a ternary algebra: closure under a bracket, ideals, abelian
// subspaces, induced structure constants, the classification of
// 2-dimensional ternary omega-Lie algebras and direct-sum reports.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternalg/algebra.hpp"

namespace ternalg {

/// A subspace of an ambient algebra, which must outlive it.
class Subspace
{
public:
  /// Spanned by the given coordinate vectors; throws ShapeError on a length
  /// mismatch. The basis is the linearly independent prefix of `spanning`.
  Subspace(const TernaryAlgebra &ambient, std::vector<Element> spanning);

  static Subspace full(const TernaryAlgebra &ambient);
  /// Span of the listed coordinate basis vectors (0-based).
  static Subspace coordinate_span(const TernaryAlgebra &ambient, const std::vector<std::size_t> &indices);

  const TernaryAlgebra &ambient() const { return *m_ambient; }
  const std::vector<Element> &spanning() const { return m_spanning; }
  const std::vector<Element> &basis() const { return m_basis; }
  std::size_t dim() const { return m_basis.size(); }

  bool contains(const Element &v) const;
  /// Coordinates of v relative to basis(), nullopt when v is not in the span.
  std::optional<Element> coordinates(const Element &v) const;
  /// Elements over which brackets are enumerated: basis(), plus i*b for
  /// every basis vector when the ambient product is conjugate-mid.
  std::vector<Element> argument_set() const;

private:
  const TernaryAlgebra *m_ambient;
  std::vector<Element> m_spanning;
  std::vector<Element> m_basis;
  Echelon m_echelon;
};

struct ClosureReport
{
  bool holds = true;
  std::uint64_t triples_checked = 0;
  /// Indices into the enumerated argument sets of the first failing triple.
  std::optional<std::array<std::size_t, 3>> failing;
  /// The bracket value that escaped (or failed to vanish).
  std::optional<Element> value;
};

/// bracket(b1, b2, b3) lies in S for all triples from S's argument set.
ClosureReport is_subalgebra(const Subspace &s, const Bracket &br);

struct IdealReport
{
  /// [a, x, y] in S for a in S, x, y in the ambient algebra.
  ClosureReport first_slot;
  /// Additionally [x, a, y] and [x, y, a] in S.
  ClosureReport all_slots;
};

IdealReport is_ideal(const Subspace &s, const Bracket &br);

ClosureReport is_abelian(const Subspace &s, const Bracket &br);

/// Constants of the restricted bracket relative to s.basis() (realified
/// basis for conjugate-mid ambients). Throws ClosureError with the indices of
/// the first escaping basis triple.
StructureTensor induced_constants(const Subspace &s, const Bracket &br);

enum class TwoDimType
{
  I,
  II,
  III,
  IV,
  Unclassified
};

std::string to_string(TwoDimType type);

/// Canonical constants of types I-IV (throws Error for Unclassified).
StructureTensor canonical_2dim(TwoDimType type);

/// The omega-symmetric 2-dim constants with [e1,e2,e1] = a e1 + b e2 and
/// [e2,e1,e2] = c e1 + d e2.
StructureTensor fill_2dim(const CycNum &a, const CycNum &b, const CycNum &c, const CycNum &d);

struct TwoDimClassification
{
  TwoDimType type = TwoDimType::Unclassified;
  /// Columns are the new basis in the coordinates of the old one;
  /// transform_constants(constants, *witness) == canonical_2dim(type).
  std::optional<CycMatrix> witness;
  /// "zero", "identity", "diagonal", "swap-diagonal", "companion",
  /// or the reason for an unclassified answer.
  std::string method;
  StructureTensor constants;
};

/// Throws DimensionError unless c.dim() == 2.
TwoDimClassification classify_constants_2dim(const StructureTensor &c);

/// Throws DimensionError unless dim S = 2 over a trilinear ambient, and
/// ClosureError when S is not closed.
TwoDimClassification classify_2dim(const Subspace &s, const Bracket &br);

/// A monomial matrix (permutation times 24th roots of unity) carrying the
/// constants `from` to `to`, verified exactly; nullopt if none exists.
std::optional<CycMatrix> find_isomorphism(const StructureTensor &from, const StructureTensor &to);

struct CrossBracket
{
  /// Part indices of the three arguments.
  std::array<std::size_t, 3> parts;
  /// Parts in which some bracket value of this pattern has a nonzero
  /// component, sorted.
  std::vector<std::size_t> lands_in;
  /// Some value lies outside the sum of the parts.
  bool outside = false;
};

struct DirectSumReport
{
  std::vector<std::size_t> part_dims;
  std::size_t span_dim = 0;
  /// Dimensions add up, so the sum is direct.
  bool direct = false;
  std::vector<ClosureReport> closure;
  bool all_closed = false;
  /// Every mixed pattern of parts, in lexicographic order.
  std::vector<CrossBracket> cross;

  bool holds() const { return direct && all_closed; }
};

DirectSumReport direct_sum_report(const std::vector<Subspace> &parts, const Bracket &br);

} // namespace ternalg
