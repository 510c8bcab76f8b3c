#include <doctest.h>

#include <random>

#include "ternalg/error.hpp"
#include "ternalg/laws.hpp"
#include "ternalg/zoo.hpp"

using namespace ternalg;

namespace {

Element unit(std::size_t n, std::size_t i) { return unit_vector<CycNum>(n, i); }

bool all_zero(const Vector<CycNum> &v) { return is_zero_vector(v); }

} // namespace

TEST_CASE("vector algebras")
{
  TernaryAlgebra a = vector_algebra(2, VectorForm::Alpha);
  CHECK(all_zero(a.product(unit(2, 0), unit(2, 1), unit(2, 0))));
  CHECK(a.product(unit(2, 0), unit(2, 0), unit(2, 1)) == unit(2, 1));
  CHECK(a.labels() == std::vector<std::string>{"e1", "e2"});
  CHECK(vector_algebra(2, VectorForm::Hermitian).mode() == Linearity::ConjugateMid);
}

TEST_CASE("rectangular algebras")
{
  TernaryAlgebra a = rect_algebra(2, 2, RectForm::Transpose);
  // positions: E11 = 0, E12 = 1
  CHECK(a.product(unit(4, 0), unit(4, 0), unit(4, 1)) == unit(4, 1));
  CHECK(all_zero(a.product(zero_vector<CycNum>(4), unit(4, 0), unit(4, 1))));
  CHECK(rect_algebra(2, 3, RectForm::Transpose).dim() == 6);
  CHECK(rect_algebra(2, 2, RectForm::Dagger).mode() == Linearity::ConjugateMid);
}

TEST_CASE("cubic algebras")
{
  auto g = canonical_G_basis();
  REQUIRE(g.size() == 8);
  CHECK(g[6] == unit(8, cubic_index(2, 0, 0, 0)));
  CHECK(cubic_algebra(2, Pairing::A, false).product(g[6], g[6], g[6]) == g[6]);
  CHECK(cubic_scalar_trace_algebra(2, false).product(g[6], g[6], g[6]) == g[6]);
  CHECK(cubic_labels(2).front() == "X111");
  CHECK(cubic_labels(2).back() == "X222");
  CHECK(cubic_index(2, 1, 0, 1) == 5);

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> v(-3, 3);
  Element y(8), z(8);
  for (auto &x : y)
    x = CycNum(v(rng));
  for (auto &x : z)
    x = CycNum(v(rng));
  TernaryAlgebra a = cubic_algebra(2, Pairing::B, false);
  CHECK(all_zero(a.product(zero_vector<CycNum>(8), y, z)));

  Matrix<CycNum> basis = Matrix<CycNum>::from_columns(g);
  CHECK(rank(basis) == 8);
  CHECK(cubic2_in_G_basis().labels() == G_labels());
}

TEST_CASE("scalar trace algebra annihilates orthogonal pairs")
{
  TernaryAlgebra a = cubic_scalar_trace_algebra(2, false);
  // X121 pairs only with X211
  Element x121 = unit(8, cubic_index(2, 0, 1, 0));
  Element x111 = unit(8, cubic_index(2, 0, 0, 0));
  CHECK(all_zero(a.product(x111, x121, x121)));
}

TEST_CASE("partial traces")
{
  auto g = canonical_G_basis();
  Element id(8);
  id[cubic_index(2, 0, 0, 0)] = CycNum(1);
  id[cubic_index(2, 1, 1, 0)] = CycNum(1);
  CHECK(cubic_trace(id, 2, TracePair::T12) == Vector<CycNum>{CycNum(2), CycNum(0)});

  CHECK(cubic_trace(g[2], 2, TracePair::T13) == Vector<CycNum>{CycNum(0), -CycNum::i()});
  for (std::size_t k : {0u, 1u})
    for (TracePair p : {TracePair::T12, TracePair::T13, TracePair::T23})
      CHECK(all_zero(cubic_trace(g[k], 2, p)));
  for (std::size_t k : {2u, 3u, 4u, 5u}) {
    CAPTURE(k);
    CHECK(all_zero(cubic_trace(g[k], 2, TracePair::T12)));
    CHECK_FALSE((all_zero(cubic_trace(g[k], 2, TracePair::T13)) && all_zero(cubic_trace(g[k], 2, TracePair::T23))));
  }
}

TEST_CASE("form construction reproduces the direct algebras")
{
  CHECK(make_algebra_from_form(rect_form_spec(2, 2)).product_tensor() ==
        rect_algebra(2, 2, RectForm::Transpose).product_tensor());
  CHECK(make_algebra_from_form(rect_form_spec(2, 3)).product_tensor() ==
        rect_algebra(2, 3, RectForm::Transpose).product_tensor());
  CHECK(make_algebra_from_form(cubic_form_spec(2)).product_tensor() ==
        cubic_algebra(2, Pairing::A, false).product_tensor());
  CHECK(make_algebra_from_form(cubic_scalar_trace_form_spec(2)).product_tensor() ==
        cubic_scalar_trace_algebra(2, false).product_tensor());
  CHECK(make_algebra_from_form(zero_form_spec(3)).product_tensor().is_zero_tensor());
}

TEST_CASE("a non-representation action is rejected")
{
  FormSpec spec = rect_form_spec(2, 2);
  std::swap(spec.action[1], spec.action[2]);
  CHECK_THROWS_AS(make_algebra_from_form(spec), ConstructionError);
}

TEST_CASE("binary relations")
{
  FiniteRelation r(2, 3), t(2, 3);
  r.insert(0, 1);
  r.insert(1, 2);
  t.insert(1, 0);
  CHECK(r.contains(0, 1));
  CHECK_FALSE(r.contains(1, 1));

  FiniteRelation rt = inverse(r);
  CHECK(rt.from() == 3);
  CHECK(rt.contains(1, 0));
  CHECK(inverse(rt) == r);

  // with S the identity on A = B the ternary product is plain composition
  FiniteRelation a(3, 3), b(3, 3);
  a.insert(0, 1);
  a.insert(2, 2);
  b.insert(1, 0);
  b.insert(2, 1);
  CHECK(relation_ternary(a, FiniteRelation::identity(3), b) == compose(a, b));
  CHECK(compose(a, b).contains(0, 0));
  CHECK(compose(a, b).contains(2, 1));

  CHECK(relation_ternary(r, r, t).from() == 2);
  CHECK_THROWS_AS(relation_ternary(r, inverse(r), t), ShapeError);
}

TEST_CASE("relations form a semiheap")
{
  SemiheapReport r = check_semiheap(2, 2);
  CHECK(r.holds);
  CHECK(r.tuples_checked == 16ull * 16 * 16 * 16 * 16);
  CHECK(r.counterexample.empty());
  CHECK(check_semiheap(1, 3).holds);
  CHECK_THROWS_AS(check_semiheap(3, 3), ShapeError);
}

TEST_CASE("random algebras are reproducible")
{
  CHECK(random_algebra(3, 5).product_tensor() == random_algebra(3, 5).product_tensor());
  CHECK_FALSE(random_algebra(3, 5).product_tensor() == random_algebra(3, 6).product_tensor());
  CHECK(zero_algebra(4).product_tensor().is_zero_tensor());
}
