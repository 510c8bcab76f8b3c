#include <doctest.h>

#include <random>

#include "ternalg/descriptor.hpp"
#include "ternalg/error.hpp"
#include "ternalg/laws.hpp"
#include "ternalg/subalg.hpp"
#include "ternalg/zoo.hpp"

using namespace ternalg;

namespace {

const TernaryAlgebra &mc2()
{
  static const TernaryAlgebra g = cubic2_in_G_basis();
  return g;
}

Subspace span_of(std::initializer_list<std::size_t> one_based)
{
  std::vector<std::size_t> idx;
  for (std::size_t k : one_based)
    idx.push_back(k - 1);
  return Subspace::coordinate_span(mc2(), idx);
}

CycMatrix random_invertible(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<long> v(-3, 3);
  std::uniform_int_distribution<int> z(0, 23);
  CycMatrix m(2, 2);
  do
    for (auto &x : m.data)
      x = CycNum(v(rng)) * CycNum::zeta(z(rng)) + CycNum(v(rng));
  while (det(m).is_zero());
  return m;
}

} // namespace

TEST_CASE("subspace basics")
{
  TernaryAlgebra v = vector_algebra(3, VectorForm::Alpha);
  Element e1 = unit_vector<CycNum>(3, 0), e2 = unit_vector<CycNum>(3, 1);
  Subspace s(v, {e1, e1 + e2, e2});
  CHECK(s.dim() == 2);
  CHECK(s.basis().size() == 2);
  CHECK(s.contains(CycNum::omega() * e2 - e1));
  CHECK_FALSE(s.contains(unit_vector<CycNum>(3, 2)));
  CHECK(s.coordinates(e2).value() == Element{CycNum(-1), CycNum(1)});
  CHECK(Subspace::full(v).dim() == 3);
  CHECK_THROWS_AS(Subspace(v, {Element(2)}), ShapeError);
}

TEST_CASE("subalgebras")
{
  CHECK(is_subalgebra(span_of({3, 4}), Bracket::omega()).holds);
  CHECK(is_subalgebra(Subspace::full(mc2()), Bracket::omega()).holds);
  TernaryAlgebra v = vector_algebra(4, VectorForm::Alpha);
  CHECK(is_subalgebra(Subspace::coordinate_span(v, {0, 1}), Bracket::reduced()).holds);
  CHECK(is_subalgebra(Subspace::coordinate_span(v, {1, 3}), Bracket::reduced()).holds);

  ClosureReport bad = is_subalgebra(span_of({2, 5}), Bracket::omega());
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.failing.has_value());
  REQUIRE(bad.value.has_value());
  CHECK_FALSE(span_of({2, 5}).contains(*bad.value));
}

TEST_CASE("abelian subalgebras")
{
  CHECK(is_abelian(span_of({7, 8}), Bracket::omega()).holds);
  CHECK_FALSE(is_abelian(span_of({3, 4}), Bracket::omega()).holds);
  CHECK(is_abelian(Subspace(mc2(), {}), Bracket::omega()).holds);
}

TEST_CASE("ideals")
{
  IdealReport zero = is_ideal(Subspace(mc2(), {}), Bracket::omega());
  CHECK(zero.first_slot.holds);
  CHECK(zero.all_slots.holds);
  CHECK(is_ideal(Subspace::full(mc2()), Bracket::omega()).all_slots.holds);

  // <G7, G8> is not an ideal: [G7, G1, G1] leaves it
  IdealReport g78 = is_ideal(span_of({7, 8}), Bracket::omega());
  CHECK_FALSE(g78.first_slot.holds);
  CHECK_FALSE(g78.all_slots.holds);
  CHECK(g78.first_slot.failing == std::array<std::size_t, 3>{0, 0, 0});
  CHECK(format_element(*g78.first_slot.value, mc2().labels()) ==
        "(-1/4*z^1+1/4*z^7)*G1 + (-3/16*z^2+3/16*z^6)*G5 + 1/16*z^4*G6 - 1/4*z^4*G7");

  // <e1> in the 2-dim vector algebra: [e1, e1, e2] = w e2
  TernaryAlgebra v = vector_algebra(2, VectorForm::Alpha);
  IdealReport e1 = is_ideal(Subspace::coordinate_span(v, {0}), Bracket::reduced());
  CHECK_FALSE(e1.first_slot.holds);
  CHECK(e1.first_slot.failing == std::array<std::size_t, 3>{0, 0, 1});
  CHECK(*e1.first_slot.value == CycNum::omega() * unit_vector<CycNum>(2, 1));
}

TEST_CASE("induced constants")
{
  StructureTensor c = induced_constants(span_of({3, 4}), Bracket::omega());
  CHECK(c == fill_2dim(0, 1, 1, 0));
  CHECK(induced_constants(span_of({7, 8}), Bracket::omega()).is_zero_tensor());

  StructureTensor t = induced_constants(span_of({2, 3, 4}), Bracket::omega());
  // [G2, G4, G2] = 3i/32 G3 + 9/32 G4 in the basis (G2, G3, G4)
  CHECK(t.at(0, 0, 2, 0).is_zero());
  CHECK(t.at(1, 0, 2, 0) == parse_cyc("3/32*i"));
  CHECK(t.at(2, 0, 2, 0) == CycNum(Rat(9, 32)));
  CHECK(t.at(1, 0, 1, 0) == CycNum(Rat(-1, 32)));
  CHECK(t.at(2, 0, 1, 0) == parse_cyc("3/32*i"));

  CHECK_THROWS_AS(induced_constants(span_of({2, 5}), Bracket::omega()), ClosureError);
}

TEST_CASE("two-dimensional classification")
{
  TwoDimClassification i = classify_2dim(span_of({7, 8}), Bracket::omega());
  CHECK(i.type == TwoDimType::I);

  TwoDimClassification ii = classify_2dim(span_of({3, 4}), Bracket::omega());
  CHECK(ii.type == TwoDimType::II);
  REQUIRE(ii.witness.has_value());
  CHECK(*ii.witness == CycMatrix::identity(2));

  TwoDimClassification iv = classify_constants_2dim(canonical_2dim(TwoDimType::IV));
  CHECK(iv.type == TwoDimType::IV);
  CHECK(*iv.witness == CycMatrix::identity(2));

  CHECK_THROWS_AS(classify_2dim(span_of({2, 3, 4}), Bracket::omega()), DimensionError);
  CHECK_THROWS_AS(classify_constants_2dim(StructureTensor(3)), DimensionError);
  CHECK(to_string(TwoDimType::III) == "III");
}

TEST_CASE("classification does not depend on the basis")
{
  std::mt19937_64 rng(77);
  for (TwoDimType t : {TwoDimType::I, TwoDimType::II, TwoDimType::III, TwoDimType::IV}) {
    for (int trial = 0; trial < 20; ++trial) {
      CAPTURE(to_string(t));
      StructureTensor moved = transform_constants(canonical_2dim(t), random_invertible(rng));
      TwoDimClassification r = classify_constants_2dim(moved);
      CHECK(r.type == t);
      REQUIRE(r.witness.has_value());
      CHECK(transform_constants(moved, *r.witness) == canonical_2dim(t));
    }
  }
}

TEST_CASE("omega-Lie constants outside the four types")
{
  // K = diag(1, 2): satisfies the GA(1,5)-system but matches no table row
  const CycNum k = CycNum(1) - CycNum::omega();
  StructureTensor c = fill_2dim(k, 0, 0, -CycNum(2) * k);
  CHECK(check_ga15_system(c).holds);
  TwoDimClassification r = classify_constants_2dim(c);
  CHECK(r.type == TwoDimType::Unclassified);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("isomorphisms between subalgebras")
{
  StructureTensor a = induced_constants(span_of({1, 5, 6}), Bracket::omega());
  StructureTensor b = induced_constants(span_of({2, 3, 4}), Bracket::omega());
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(transform_constants(a, *iso) == b);
  CHECK_FALSE(find_isomorphism(canonical_2dim(TwoDimType::I), canonical_2dim(TwoDimType::II)).has_value());
}

TEST_CASE("direct sums")
{
  DirectSumReport t0 = direct_sum_report({span_of({2, 3, 4}), span_of({1, 5, 6})}, Bracket::omega());
  CHECK(t0.holds());
  CHECK(t0.span_dim == 6);

  DirectSumReport four =
      direct_sum_report({span_of({1, 2}), span_of({3, 4}), span_of({5, 6}), span_of({7, 8})}, Bracket::omega());
  CHECK(four.holds());
  CHECK(four.span_dim == 8);

  DirectSumReport single = direct_sum_report({Subspace::full(mc2())}, Bracket::omega());
  CHECK(single.holds());

  DirectSumReport overlap = direct_sum_report({span_of({1, 2}), span_of({2, 3})}, Bracket::omega());
  CHECK_FALSE(overlap.direct);
}

TEST_CASE("conjugate-mid subspaces are realified")
{
  TernaryAlgebra h = vector_algebra(2, VectorForm::Hermitian);
  Subspace s = Subspace::coordinate_span(h, {0});
  CHECK(s.argument_set().size() == 2);
  CHECK_THROWS_AS(classify_2dim(Subspace::full(h), Bracket::omega()), DimensionError);
}
