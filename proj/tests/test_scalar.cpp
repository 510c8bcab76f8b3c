#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "ternalg/error.hpp"
#include "ternalg/scalar.hpp"

using namespace ternalg;

namespace {

CycNum random_cyc(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<long> num(-7, 7), den(1, 6);
  std::array<Rat, CycNum::degree> c;
  for (auto &x : c)
    x = Rat(num(rng), den(rng));
  for (auto &x : c)
    x.canonicalize();
  return CycNum::from_coeffs(c);
}

bool close(FloatC a, FloatC b, double tol = 1e-12)
{
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

} // namespace

TEST_CASE("roots of unity and named constants")
{
  const CycNum w = CycNum::omega(), wb = CycNum::omega_bar(), i = CycNum::i();
  CHECK(w * wb == CycNum(1));
  CHECK((CycNum(1) + w + wb).is_zero());
  CHECK(CycNum::sqrt2() * CycNum::sqrt2() == CycNum(2));
  CHECK(CycNum::sqrt3() * CycNum::sqrt3() == CycNum(3));
  CHECK(w * w * w == CycNum(1));
  CHECK(!(w == CycNum(1)));
  CHECK(i * i == CycNum(-1));
  CHECK(CycNum::zeta(24) == CycNum(1));
  CHECK(CycNum::zeta(-1) == CycNum::zeta(23));
  CHECK(CycNum::zeta(12) == CycNum(-1));
}

TEST_CASE("conjugation")
{
  CHECK(CycNum::i().conj() == -CycNum::i());
  CHECK(CycNum::omega().conj() == CycNum::omega_bar());
  CHECK(CycNum::sqrt2().conj() == CycNum::sqrt2());
  CHECK(CycNum::sqrt2().is_real());
  CHECK(!CycNum::i().is_real());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    CycNum a = random_cyc(rng), b = random_cyc(rng);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("embedding")
{
  FloatC w = CycNum::omega().embed();
  CHECK(w.real() == doctest::Approx(-0.5));
  CHECK(w.imag() == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(CycNum().embed() == FloatC(0, 0));
  CHECK(CycNum::sqrt2().embed().real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(CycNum::sqrt2().embed().imag() == doctest::Approx(0.0));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    CycNum a = random_cyc(rng), b = random_cyc(rng);
    REQUIRE(close((a * b).embed(), a.embed() * b.embed(), 1e-10));
    REQUIRE(close((a + b).embed(), a.embed() + b.embed(), 1e-10));
    REQUIRE(close(a.conj().embed(), std::conj(a.embed()), 1e-10));
  }
}

TEST_CASE("field axioms on random elements")
{
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycNum(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("inverse of zero throws")
{
  CHECK_THROWS_AS(CycNum().inverse(), DivisionByZero);
  CHECK_THROWS_AS(CycNum(1) / CycNum(), DivisionByZero);
}

TEST_CASE("canonical representation")
{
  CycNum a = parse_cyc("2/4*z^3");
  CycNum b = parse_cyc("1/2*z^3");
  CHECK(a == b);
  CHECK(a.coeffs() == b.coeffs());
  // z^8 = z^4 - 1
  CHECK(CycNum::zeta(8) == CycNum::zeta(4) - CycNum(1));
  CHECK(CycNum::zeta(8).format() == "-1+z^4");
}

TEST_CASE("literal parsing")
{
  CycNum x = parse_cyc("3/32*i");
  CHECK(x.coeff(6) == Rat(3, 32));
  CHECK(x.support() == 1);
  CHECK(parse_cyc("-1/4*r2*i") == -(CycNum::sqrt2() * CycNum::i() * CycNum(Rat(1, 4))));
  CHECK(parse_cyc("w") == CycNum::omega());
  CHECK(parse_cyc("wb") == CycNum::omega_bar());
  CHECK(parse_cyc("z^-1") == CycNum::zeta(23));
  CHECK(parse_cyc("1 + w + wb").is_zero());
  CHECK(parse_cyc("0") == CycNum());
}

TEST_CASE("format round-trips through the parser")
{
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    CycNum a = random_cyc(rng);
    CHECK(parse_cyc(a.format()) == a);
  }
  CHECK(CycNum().format() == "0");
  CHECK(CycNum::i().format() == "z^6");
  CHECK(CycNum(Rat(-3, 4)).format() == "-3/4");
}

TEST_CASE("malformed literals report a position")
{
  for (const char *bad : {"", "1/", "1/0", "q", "2**i", "z^", "(1"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(parse_cyc(bad), ParseError);
  }
  try {
    parse_cyc("1+x");
    FAIL("expected a ParseError");
  } catch (const ParseError &e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("galois automorphisms")
{
  std::mt19937_64 rng(23);
  CycNum a = random_cyc(rng), b = random_cyc(rng);
  for (int j : {1, 5, 7, 11, 13, 17, 19, 23}) {
    CHECK((a * b).galois(j) == a.galois(j) * b.galois(j));
    CHECK(close(a.galois(j).embed(), a.embed(j), 1e-10));
  }
  CHECK_THROWS_AS(a.galois(2), Error);
  CHECK(a.galois(23) == a.conj());
}

TEST_CASE("exact square roots")
{
  for (const char *lit : {"4", "-1", "w", "2", "3", "-1/3*wb", "1/2*i", "9/4"}) {
    CAPTURE(std::string(lit));
    CycNum v = parse_cyc(lit);
    auto r = exact_sqrt(v);
    REQUIRE(r.has_value());
    CHECK(*r * *r == v);
  }
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    CycNum a = random_cyc(rng);
    auto r = exact_sqrt(a * a);
    REQUIRE(r.has_value());
    CHECK(*r * *r == a * a);
    if (!a.is_zero()) {
      CycNum inv_sq = (a * a).inverse();
      auto q = exact_sqrt(inv_sq);
      REQUIRE(q.has_value());
      CHECK(*q * *q == inv_sq);
    }
  }
  CHECK(exact_sqrt(CycNum()).value().is_zero());
  CHECK_FALSE(exact_sqrt(parse_cyc("1/2*i*r2")).has_value());
}

TEST_CASE("rationalize")
{
  CHECK(rationalize(0.75, 100) == Rat(3, 4));
  CHECK(rationalize(-1.0 / 3.0, 100) == Rat(-1, 3));
}
