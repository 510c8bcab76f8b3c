#include <doctest.h>

#include "ternalg/descriptor.hpp"
#include "ternalg/error.hpp"
#include "ternalg/laws.hpp"
#include "ternalg/zoo.hpp"

using namespace ternalg;

TEST_CASE("descriptor strings")
{
  auto j = parse_descriptor("cubic:n=2,pairing=A,conj_mid=false");
  CHECK(j["kind"] == "cubic");
  CHECK(j["n"] == 2);
  CHECK(j["conj_mid"] == false);
  CHECK(parse_descriptor("zero:dim=3")["dim"] == 3);
  CHECK(parse_descriptor("vector")["kind"] == "vector");
}

TEST_CASE("descriptors build the zoo")
{
  CHECK(algebra_from_descriptor("cubic:n=2,pairing=A").product_tensor() ==
        cubic_algebra(2, Pairing::A, false).product_tensor());
  CHECK(algebra_from_descriptor("cubic:n=2,basis=G").labels() == G_labels());
  CHECK(algebra_from_descriptor("cubic:n=2,conj_mid=true").mode() == Linearity::ConjugateMid);
  CHECK(algebra_from_descriptor("vector:n=3").product_tensor() == vector_algebra(3, VectorForm::Alpha).product_tensor());
  CHECK(algebra_from_descriptor("vector:n=2,form=hermitian").mode() == Linearity::ConjugateMid);
  CHECK(algebra_from_descriptor("rect:m=2,n=3").dim() == 6);
  CHECK(algebra_from_descriptor("zero:dim=4").product_tensor().is_zero_tensor());
  CHECK(algebra_from_descriptor("custom:random-seed=7").product_tensor() == random_algebra(3, 7).product_tensor());
  CHECK(algebra_from_descriptor("cubic:n=2,variant=scalar-trace").product_tensor() ==
        cubic_scalar_trace_algebra(2, false).product_tensor());
}

TEST_CASE("malformed descriptors")
{
  for (const char *bad : {"", "cubic:n", "cubic:n=2,,", "blob:n=2", "cubic:n=2,colour=red", "vector:n=zero",
                          "rect:m=2,n=2,form=sideways", "cubic:n=2,pairing=C", "zero:dim=2,dim=3"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(algebra_from_descriptor(bad), ParseError);
  }
}

TEST_CASE("custom JSON algebras")
{
  nlohmann::json spec = {{"kind", "custom"},
                         {"dim", 2},
                         {"labels", {"a", "b"}},
                         {"product", {{{"m", 2}, {"i", 1}, {"j", 1}, {"k", 2}, {"value", "w"}}}}};
  TernaryAlgebra a = algebra_from_json(spec);
  CHECK(a.labels() == std::vector<std::string>{"a", "b"});
  CHECK(a.product_tensor().at(1, 0, 0, 1) == CycNum::omega());
  CHECK(a.product_tensor().at(0, 0, 0, 1).is_zero());

  spec["product"][0]["m"] = 3;
  CHECK_THROWS_AS(algebra_from_json(spec), ParseError);
}

TEST_CASE("constant dumps round-trip with identical verdicts")
{
  for (const TernaryAlgebra &a : {cubic_algebra(2, Pairing::A, false), random_algebra(3, 7),
                                   vector_algebra(2, VectorForm::Hermitian), cubic2_in_G_basis()}) {
    nlohmann::json dumped = algebra_to_json(a);
    TernaryAlgebra b = algebra_from_json(nlohmann::json::parse(dumped.dump()));
    CHECK(b.product_tensor() == a.product_tensor());
    CHECK(b.labels() == a.labels());
    CHECK(b.mode() == a.mode());
    CHECK(check_assoc(b, 1).to_json() == check_assoc(a, 1).to_json());
    CHECK(check_omega_symmetry(b, Bracket::omega()).to_json() == check_omega_symmetry(a, Bracket::omega()).to_json());
  }
}

TEST_CASE("elements")
{
  TernaryAlgebra g = cubic2_in_G_basis();
  Element x = parse_element("G3 - i*G4", g);
  CHECK(x[2] == CycNum(1));
  CHECK(x[3] == -CycNum::i());
  CHECK(format_element(x, g.labels()) == "G3 - z^6*G4");
  CHECK(parse_element(format_element(x, g.labels()), g) == x);

  TernaryAlgebra c = cubic_algebra(2, Pairing::A, false);
  Element y = parse_element("(1/2+w)*X111 + X222", c);
  CHECK(y[0] == CycNum(Rat(1, 2)) + CycNum::omega());
  CHECK(y[7] == CycNum(1));
  CHECK(format_element(zero_vector<CycNum>(8), c.labels()) == "0");

  auto list = parse_elements(nlohmann::json::array({"G1", nlohmann::json::array({"0", "1", "0", "0", "0", "0", "0", "i"})}), g);
  REQUIRE(list.size() == 2);
  CHECK(list[1][7] == CycNum::i());

  CHECK_THROWS_AS(parse_element("G9", g), ParseError);
  CHECK_THROWS_AS(parse_element("G1 +", g), ParseError);
  CHECK_THROWS_AS(parse_elements(nlohmann::json::array({nlohmann::json::array({"1"})}), g), Error);
}
