#pragma once

// Concrete ternary algebras: vector, rectangular-matrix and cubic-matrix
// algebras, the canonical G-basis of second-order cubic matrices, the
// module/form construction and the semiheap of binary relations.
//
// Cubic matrices of order n are stored as coordinate vectors of length n^3
// with X_{ijk} (1-based) at position ((i-1) n + (j-1)) n + (k-1), so the
// first index varies slowest.

#include <cstdint>
#include <string>
#include <vector>

#include "ternalg/algebra.hpp"
#include "ternalg/laws.hpp"

namespace ternalg {

enum class VectorForm
{
  Alpha,
  Hermitian
};

enum class RectForm
{
  Transpose,
  Dagger
};

enum class Pairing
{
  /// (X.Y.Z)_{ijk} = X_{ijp} Y_{rsp} Z_{srk}
  A,
  /// (X.Y.Z)_{ijk} = X_{ijp} Y_{rsp} Z_{rsk}
  B
};

enum class TracePair
{
  T12,
  T13,
  T23
};

TernaryAlgebra vector_algebra(std::size_t n, VectorForm form);
/// m x n matrices, basis E_{ab} at position a n + b.
TernaryAlgebra rect_algebra(std::size_t m, std::size_t n, RectForm form);
TernaryAlgebra cubic_algebra(std::size_t n, Pairing pairing, bool conj_mid);
/// X.Y.Z = X * sum_p Tr(Y_(p) Z_(p)), Y conjugated when conj_mid.
TernaryAlgebra cubic_scalar_trace_algebra(std::size_t n, bool conj_mid);
TernaryAlgebra zero_algebra(std::size_t dim);
/// Dense product tensor with integer entries in [-2, 2] drawn from mt19937_64.
TernaryAlgebra random_algebra(std::size_t dim, std::uint64_t seed);

std::size_t cubic_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k);
std::vector<std::string> cubic_labels(std::size_t n);

/// Partial trace of a cubic matrix over the given index pair.
Vector<CycNum> cubic_trace(const Element &x, std::size_t n, TracePair pair);

/// G_1..G_8 as coordinate vectors in the order-2 cubic basis.
std::vector<Element> canonical_G_basis();
std::vector<std::string> G_labels();

/// Order-2 cubic algebra re-expressed in the G-basis (labels G1..G8).
TernaryAlgebra cubic2_in_G_basis(Pairing pairing = Pairing::A, bool conj_mid = false);

// ---------------------------------------------------------------------------
// Module construction u.v.w = alpha(u,v) . w (left) or u . beta(v,w) (right)

enum class Side
{
  Left,
  Right
};

struct FormSpec
{
  std::string name;
  std::size_t module_dim = 0;
  std::size_t ring_dim = 0;
  /// ring_mult[a * ring_dim + b] = coordinates of r_a r_b.
  std::vector<Element> ring_mult;
  /// form[u * module_dim + v] = ring coordinates of the form on (e_u, e_v).
  std::vector<Element> form;
  /// action[a]: column w holds the image of e_w under r_a.
  std::vector<CycMatrix> action;
  Side side = Side::Left;
};

/// Structure constants of the algebra of r x r matrices (basis E_{ab} at a r + b).
std::vector<Element> matrix_ring(std::size_t r);

/// alpha(X,Y) = X Y^T on m x n matrices, left multiplication by m x m matrices.
FormSpec rect_form_spec(std::size_t m, std::size_t n);
/// beta(Y,Z)_{pk} = Tr(Y_(p) Z_(k)) on cubic matrices, right action X |> A.
FormSpec cubic_form_spec(std::size_t n);
/// beta(Y,Z) = Tr(Tr(Y Z)) with values in C acting by scalars.
FormSpec cubic_scalar_trace_form_spec(std::size_t n);
/// Form identically zero, ring of 1 x 1 matrices.
FormSpec zero_form_spec(std::size_t module_dim);
/// Random M_n-valued form on C^n with integer entries, left matrix action.
FormSpec random_form_spec(std::size_t n, std::uint64_t seed);

/// Builds the trilinear algebra; throws ConstructionError when the action is
/// not a representation of the ring.
TernaryAlgebra make_algebra_from_form(const FormSpec &spec);

/// The associativity conditions on the form for the given kind, on all
/// basis 4-tuples.
LawReport check_construction_conditions(const FormSpec &spec, int kind);

// ---------------------------------------------------------------------------
// Binary relations

class FiniteRelation
{
public:
  FiniteRelation(std::size_t from, std::size_t to, std::uint64_t bits = 0);

  static FiniteRelation identity(std::size_t n);

  std::size_t from() const { return m_from; }
  std::size_t to() const { return m_to; }
  std::uint64_t bits() const { return m_bits; }
  bool contains(std::size_t a, std::size_t b) const;
  void insert(std::size_t a, std::size_t b);

  friend bool operator==(const FiniteRelation &, const FiniteRelation &) = default;

private:
  std::size_t m_from;
  std::size_t m_to;
  std::uint64_t m_bits;
};

FiniteRelation compose(const FiniteRelation &r, const FiniteRelation &s);
FiniteRelation inverse(const FiniteRelation &r);
/// R o S^-1 o T; throws ShapeError unless all three lie in P(A, B).
FiniteRelation relation_ternary(const FiniteRelation &r, const FiniteRelation &s, const FiniteRelation &t);

struct SemiheapReport
{
  std::uint64_t tuples_checked = 0;
  bool holds = true;
  std::vector<std::uint64_t> counterexample;
};

/// (R.S.T).U.V = R.(U.T.S).V = R.S.(T.U.V) over all relation 5-tuples.
SemiheapReport check_semiheap(std::size_t a, std::size_t b);

} // namespace ternalg
