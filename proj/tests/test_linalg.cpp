#include <doctest.h>

#include <random>

#include "ternalg/error.hpp"
#include "ternalg/linalg.hpp"

using namespace ternalg;

namespace {

CycMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c)
{
  std::uniform_int_distribution<long> v(-3, 3);
  std::uniform_int_distribution<int> z(0, 23);
  CycMatrix m(r, c);
  for (auto &x : m.data)
    x = CycNum(v(rng)) * CycNum::zeta(z(rng)) + CycNum(v(rng));
  return m;
}

} // namespace

TEST_CASE("vector arithmetic checks shapes")
{
  Element a{CycNum(1), CycNum(2)}, b{CycNum(3)};
  CHECK_THROWS_AS(a += b, ShapeError);
  CHECK(a - a == zero_vector<CycNum>(2));
  CHECK(CycNum(2) * a == a + a);
  Element c = a;
  axpy(c, CycNum::i(), a);
  CHECK(c == (CycNum(1) + CycNum::i()) * a);
  CHECK(is_zero_vector(zero_vector<CycNum>(3)));
  CHECK(max_abs(to_float(Element{CycNum(-4), CycNum::i()})) == doctest::Approx(4.0));
}

TEST_CASE("inverse and determinant")
{
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    CycMatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    CHECK(det(a * b) == det(a) * det(b));
    if (!det(a).is_zero()) {
      CHECK(a * inverse(a) == CycMatrix::identity(3));
      CHECK(rank(a) == 3);
    }
  }
  CycMatrix singular(2, 2);
  singular(0, 0) = CycNum(1);
  singular(0, 1) = CycNum::omega();
  singular(1, 0) = CycNum::omega_bar();
  singular(1, 1) = CycNum(1);
  CHECK(det(singular).is_zero());
  CHECK(rank(singular) == 1);
  CHECK_THROWS_AS(inverse(singular), SingularError);
}

TEST_CASE("solve and nullspace")
{
  std::mt19937_64 rng(8);
  CycMatrix a = random_matrix(rng, 2, 4);
  auto kernel = nullspace(a);
  CHECK(kernel.size() == 4 - rank(a));
  for (const auto &v : kernel)
    CHECK(is_zero_vector(a * v));
  Vector<CycNum> x{CycNum(1), CycNum::i(), CycNum(-2), CycNum::omega()};
  auto sol = solve(a, a * x);
  REQUIRE(sol.has_value());
  CHECK(a * *sol == a * x);

  CycMatrix z(2, 1);
  z(0, 0) = CycNum(1);
  z(1, 0) = CycNum(1);
  CHECK_FALSE(solve(z, Vector<CycNum>{CycNum(1), CycNum(2)}).has_value());
}

TEST_CASE("rref is reduced")
{
  std::mt19937_64 rng(13);
  CycMatrix a = random_matrix(rng, 3, 5);
  Echelon e = rref(a);
  CHECK(e.rank() == rank(a));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    std::size_t p = e.pivot_cols[r];
    for (std::size_t q = 0; q < e.reduced.rows; ++q)
      CHECK(e.reduced(q, p) == CycNum(q == r ? 1 : 0));
  }
}
