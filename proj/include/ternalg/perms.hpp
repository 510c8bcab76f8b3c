#pragma once

// Permutations of {1,...,5}, the affine group GA(1,5) and the cyclic-sum
// operator used by the GA(1,5)-identity.
//
// Products are read left to right: compose(p, q) first applies p, then q.
// This is the convention under which tau sigma tau^-1 = sigma^2 holds for
// sigma = (1 2 3 4 5) and tau = (2 4 5 3).

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ternalg {

class Perm5
{
public:
  Perm5();
  /// images[i-1] is the image of i; must be a bijection of {1..5}.
  explicit Perm5(const std::array<int, 5> &images);

  /// Parse cycle notation such as "(1 2 3 4 5)(2 4)" or "id".
  static Perm5 parse(std::string_view text);

  int operator()(int point) const { return m_images[point - 1]; }
  const std::array<int, 5> &images() const { return m_images; }
  bool is_identity() const;
  int order() const;

  /// Disjoint cycle notation, fixed points omitted; "id" for the identity.
  std::string format() const;

  friend auto operator<=>(const Perm5 &, const Perm5 &) = default;

private:
  std::array<int, 5> m_images;
};

Perm5 compose(const Perm5 &p, const Perm5 &q);
Perm5 inverse(const Perm5 &p);
Perm5 power(const Perm5 &p, int k);

/// sigma = (1 2 3 4 5), tau = (2 4 5 3).
Perm5 ga_sigma();
Perm5 ga_tau();

/// Breadth-first closure of the generators; throws Error on an empty list.
std::set<Perm5> generate_subgroup(const std::vector<Perm5> &gens);

/// Coefficients (a, b) with p(x+1) = (a*x + b mod 5) + 1, if p is affine.
std::optional<std::pair<int, int>> affine_form(const Perm5 &p);

struct PresentationReport
{
  std::size_t group_order = 0;
  bool sigma_order_5 = false;
  bool tau_order_4 = false;
  bool conjugation = false;
  bool all_affine = false;
  /// Number of distinct (a, b) pairs matched by group elements.
  std::size_t affine_matches = 0;

  bool holds() const
  {
    return group_order == 20 && sigma_order_5 && tau_order_4 && conjugation && all_affine && affine_matches == 20;
  }
};

PresentationReport check_presentation();

/// Sum over k = 0..4 of f applied to the arguments permuted by sigma^k,
/// acting on positions: slot i of the k-th term receives args[sigma^k(i)].
template <class T, class F>
T cyclic_sum(F &&f, const std::array<T, 5> &args)
{
  const Perm5 sigma = ga_sigma();
  Perm5 shift;
  std::optional<T> acc;
  for (int k = 0; k < 5; ++k) {
    std::array<T, 5> permuted{args[shift(1) - 1], args[shift(2) - 1], args[shift(3) - 1], args[shift(4) - 1],
                              args[shift(5) - 1]};
    T term = f(permuted[0], permuted[1], permuted[2], permuted[3], permuted[4]);
    if (acc)
      *acc = *acc + term;
    else
      acc = std::move(term);
    shift = compose(shift, sigma);
  }
  return *acc;
}

} // namespace ternalg
