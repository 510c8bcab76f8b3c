#pragma once

// Finite-dimensional ternary algebras given by a product tensor, their
// brackets, associators and structure constants.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/linalg.hpp"
#include "ternalg/scalar.hpp"

namespace ternalg {

enum class Linearity
{
  Trilinear,
  /// Conjugate-linear in the middle argument, linear in the outer two.
  ConjugateMid
};

std::string to_string(Linearity mode);

/// A ternary algebra: P^m_{ijk} are the coordinates of e_i . e_j . e_k.
template <class S> class BasicTernaryAlgebra
{
public:
  struct Entry
  {
    std::uint32_t m;
    S value;
  };

  BasicTernaryAlgebra(Tensor4<S> product, Linearity mode, std::vector<std::string> labels = {});

  std::size_t dim() const { return m_product.dim(); }
  Linearity mode() const { return m_mode; }
  const std::vector<std::string> &labels() const { return m_labels; }
  const Tensor4<S> &product_tensor() const { return m_product; }

  /// Nonzero entries of e_i . e_j . e_k.
  const std::vector<Entry> &column(std::size_t i, std::size_t j, std::size_t k) const
  {
    return m_sparse[(i * dim() + j) * dim() + k];
  }

  Vector<S> product(const Vector<S> &x, const Vector<S> &y, const Vector<S> &z) const;

private:
  Tensor4<S> m_product;
  Linearity m_mode;
  std::vector<std::string> m_labels;
  std::vector<std::vector<Entry>> m_sparse;
};

using TernaryAlgebra = BasicTernaryAlgebra<CycNum>;
using FloatAlgebra = BasicTernaryAlgebra<FloatC>;

FloatAlgebra to_float(const TernaryAlgebra &algebra);

/// The six orderings suv, uvs, vsu, vus, usv, svu of a bracket [s,u,v].
enum class Ordering
{
  SUV,
  UVS,
  VSU,
  VUS,
  USV,
  SVU
};

/// A bracket given as a linear combination of the six ordered products.
struct Bracket
{
  std::string name;
  std::array<CycNum, 6> coeffs;
  /// The cube root r with [u,v,w] = r [v,w,u] expected of this bracket.
  CycNum symmetry_root;

  /// s.u.v + w u.v.s + wb v.s.u + v.u.s + wb u.s.v + w s.v.u
  static Bracket omega();
  /// omega() with w and wb exchanged.
  static Bracket conjugate();
  /// v.s.u + w s.u.v + wb u.v.s, for left-commutative products.
  static Bracket reduced();
  /// The bare product s.u.v.
  static Bracket product();
  /// "omega", "conjugate", "reduced" or "product"; throws ParseError.
  static Bracket parse(std::string_view name);
};

template <class S>
Vector<S> bracket(const BasicTernaryAlgebra<S> &algebra, const Bracket &br, const Vector<S> &s, const Vector<S> &u,
                  const Vector<S> &v);

template <class S>
Vector<S> omega_commutator(const BasicTernaryAlgebra<S> &algebra, const Vector<S> &s, const Vector<S> &u,
                           const Vector<S> &v)
{
  return bracket(algebra, Bracket::omega(), s, u, v);
}

template <class S>
Vector<S> conj_commutator(const BasicTernaryAlgebra<S> &algebra, const Vector<S> &s, const Vector<S> &u,
                          const Vector<S> &v)
{
  return bracket(algebra, Bracket::conjugate(), s, u, v);
}

template <class S>
Vector<S> reduced_commutator(const BasicTernaryAlgebra<S> &algebra, const Vector<S> &s, const Vector<S> &u,
                             const Vector<S> &v)
{
  return bracket(algebra, Bracket::reduced(), s, u, v);
}

enum class Root
{
  Omega,
  OmegaBar
};

/// Q^(kind)_root(s,u,v,x,y). Kind 1 uses s.(u.v.x).y in the middle,
/// kind 2 uses s.(x.v.u).y.
template <class S>
Vector<S> assoc_q(const BasicTernaryAlgebra<S> &algebra, int kind, Root root, const Vector<S> &s, const Vector<S> &u,
                  const Vector<S> &v, const Vector<S> &x, const Vector<S> &y);

/// t_1 = (s.u.v).x.y - s.(u.v.x).y, t_2 = s.(u.v.x).y - s.u.(v.x.y).
template <class S>
Vector<S> assoc_t(const BasicTernaryAlgebra<S> &algebra, int which, const Vector<S> &s, const Vector<S> &u,
                  const Vector<S> &v, const Vector<S> &x, const Vector<S> &y);

enum class CommutativityType
{
  Commutative,
  LeftCommutative,
  CyclicCommutative,
  None
};

std::string to_string(CommutativityType type);

/// Exhaustive check of s.u.v = u.s.v and s.u.v = u.v.s on the argument basis.
CommutativityType commutativity_type(const TernaryAlgebra &algebra);

/// Elements over which multilinear identities are checked: the coordinate
/// basis, or {e_1..e_n, i e_1..i e_n} for conjugate-mid algebras.
std::vector<Element> argument_basis(const TernaryAlgebra &algebra);
std::vector<std::string> argument_labels(const TernaryAlgebra &algebra);

/// Structure constants of `br` relative to `basis` (default: coordinate
/// basis). Conjugate-mid algebras yield real constants relative to the
/// realified basis. Throws BasisError for a dependent or mis-sized basis.
StructureTensor structure_constants(const TernaryAlgebra &algebra, const Bracket &br,
                                    const std::optional<std::vector<Element>> &basis = std::nullopt);

/// sum x_i y_j z_k C^m_{ijk}
template <class S>
Vector<S> contract(const Tensor4<S> &c, const Vector<S> &x, const Vector<S> &y, const Vector<S> &z);

/// Constants relative to the basis e'_i = sum_p A^p_i e_p (columns of A).
/// Throws SingularError.
StructureTensor transform_constants(const StructureTensor &c, const CycMatrix &a);

/// The same algebra with its product re-expressed in a new basis.
TernaryAlgebra change_basis(const TernaryAlgebra &algebra, const std::vector<Element> &basis,
                            std::vector<std::string> labels = {});

/// Trilinear algebra whose product tensor is the given constants.
TernaryAlgebra algebra_from_constants(const StructureTensor &c, std::vector<std::string> labels = {});

/// Coordinates of v in the given basis, or nullopt when v is outside its span.
std::optional<Element> coordinates_in(const std::vector<Element> &basis, const Element &v);

} // namespace ternalg
