#include <doctest.h>

#include "ternalg/laws.hpp"
#include "ternalg/subalg.hpp"
#include "ternalg/zoo.hpp"

using namespace ternalg;

namespace {

// [e1,e2,e1] = e2 and [e2,e1,e2] = e1, filled out by omega symmetry
StructureTensor type2_constants()
{
  return fill_2dim(0, 1, 1, 0);
}

Bracket broken_bracket()
{
  Bracket b = Bracket::omega();
  b.name = "broken";
  b.coeffs[3] = CycNum(2);
  return b;
}

} // namespace

TEST_CASE("associativity of the second kind")
{
  CHECK(check_assoc(cubic_algebra(2, Pairing::A, false), 2).holds);
  CHECK(check_assoc(rect_algebra(2, 2, RectForm::Transpose), 2).holds);
  CHECK(check_assoc(zero_algebra(2), 1).holds);
  CHECK(check_q_associators(cubic_algebra(2, Pairing::A, false), 2).holds);
}

TEST_CASE("associativity of the first kind fails on cubic matrices")
{
  LawReport r = check_assoc(cubic_algebra(2, Pairing::A, false), 1);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->args == std::vector<std::string>{"X111", "X111", "X111", "X121", "X211"});
  CHECK(r.failing_tuple == std::vector<std::size_t>{0, 0, 0, 2, 4});
  CHECK(r.counterexample->residual_norm > 0);
  CHECK(r.verdict() == "fails");
}

TEST_CASE("omega symmetry")
{
  TernaryAlgebra a = random_algebra(3, 21);
  CHECK(check_omega_symmetry(a, Bracket::omega()).holds);
  CHECK(check_omega_symmetry(a, Bracket::conjugate()).holds);
  CHECK(check_omega_symmetry(cubic_algebra(2, Pairing::A, false), Bracket::omega()).holds);
  LawReport broken = check_omega_symmetry(a, broken_bracket());
  CHECK_FALSE(broken.holds);
  CHECK(broken.counterexample.has_value());
}

TEST_CASE("GA(1,5)-identity")
{
  LawReport r = check_ga15_identity(cubic2_in_G_basis(), Bracket::omega());
  CHECK(r.holds);
  CHECK(r.tuples_checked == 32768);
  CHECK(check_ga15_identity(vector_algebra(3, VectorForm::Alpha), Bracket::omega()).holds);

  LawReport bad = check_ga15_identity(random_algebra(3, 7), Bracket::omega());
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->args == std::vector<std::string>{"e1", "e1", "e2", "e2", "e3"});
  CHECK(bad.counterexample->residual == std::vector<std::string>{"3*z^4", "-2*z^4", "-42*z^4"});
}

TEST_CASE("GA(1,5)-system on constants")
{
  CHECK(check_ga15_system(type2_constants()).holds);
  CHECK(check_ga15_system(StructureTensor(3)).holds);
  for (TwoDimType t : {TwoDimType::I, TwoDimType::II, TwoDimType::III, TwoDimType::IV})
    CHECK(check_ga15_system(canonical_2dim(t)).holds);

  for (const TernaryAlgebra &a : {cubic2_in_G_basis(), random_algebra(3, 7), random_algebra(2, 31)}) {
    bool system = check_ga15_system(structure_constants(a, Bracket::omega())).holds;
    CHECK(system == check_ga15_identity(a, Bracket::omega()).holds);
  }
}

TEST_CASE("reports are deterministic across worker counts")
{
  TernaryAlgebra a = random_algebra(3, 7);
  CheckOptions one, many;
  one.jobs = 1;
  many.jobs = 4;
  LawReport r1 = check_ga15_identity(a, Bracket::omega(), one);
  LawReport r4 = check_ga15_identity(a, Bracket::omega(), many);
  CHECK(r1.to_json() == r4.to_json());
  CHECK(r1.failing_tuple == r4.failing_tuple);
  CHECK(check_ga15_identity(a, Bracket::omega(), one).to_json() == r1.to_json());
}

TEST_CASE("float mode and tuple limits")
{
  CheckOptions f;
  f.mode = Mode::Float;
  LawReport r = check_assoc(cubic_algebra(2, Pairing::A, false), 2, f);
  CHECK(r.holds);
  CHECK(r.mode == Mode::Float);
  CHECK_FALSE(check_assoc(cubic_algebra(2, Pairing::A, false), 1, f).holds);

  CheckOptions limited;
  limited.limit = 10;
  LawReport l = check_assoc(cubic_algebra(2, Pairing::A, false), 2, limited);
  CHECK(l.tuples_checked == 10);
  CHECK_FALSE(l.certifying);
  CHECK(parse_mode("float") == Mode::Float);
  CHECK_THROWS(parse_mode("fuzzy"));
}

TEST_CASE("conjugate-mid algebras are checked on the realified basis")
{
  LawReport r = check_assoc(vector_algebra(2, VectorForm::Hermitian), 2);
  CHECK(r.holds);
  CHECK(r.tuples_checked == 1024);
}

TEST_CASE("report serialization")
{
  LawReport r = check_assoc(cubic_algebra(2, Pairing::A, false), 1);
  auto j = r.to_json();
  CHECK(j["verdict"] == "fails");
  CHECK(j["mode"] == "exact");
  CHECK(j.contains("tuples_checked"));
  CHECK(j["counterexample"]["args"].size() == 5);
  CHECK(j["counterexample"]["residual"].size() == 8);
  CHECK_FALSE(check_assoc(zero_algebra(1), 2).to_json().contains("counterexample"));
  CHECK(r.to_text().find("fails") != std::string::npos);
}

TEST_CASE("construction conditions")
{
  CHECK(check_construction_conditions(cubic_form_spec(2), 2).holds);
  CHECK_FALSE(check_construction_conditions(cubic_form_spec(2), 1).holds);
  CHECK(check_construction_conditions(rect_form_spec(2, 2), 2).holds);
  CHECK(check_construction_conditions(zero_form_spec(3), 1).holds);
  CHECK_FALSE(check_construction_conditions(random_form_spec(2, 5), 2).holds);
}
