#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_24) and a complex
// floating-point adapter.
//
// Every element is a polynomial c_0 + c_1 z + ... + c_7 z^7 in z = zeta_24,
// reduced modulo Phi_24(x) = x^8 - x^4 + 1. The field contains
// i = z^6, w = z^8 (a primitive cube root of unity), wb = z^16 and
// sqrt(2) = z^3 + z^21, sqrt(3) = z^2 + z^22.
//
// Internally the coefficients are stored as integer numerators over one
// positive common denominator with gcd(den, num_0, ..., num_7) = 1, which
// makes the representation canonical: two elements are equal iff their
// stored data are equal.

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ternalg {

using Rat = mpq_class;
using FloatC = std::complex<double>;

class CycNum
{
public:
  static constexpr int degree = 8;
  static constexpr int order = 24;

  CycNum() = default;
  CycNum(long value);
  CycNum(const Rat &value);

  /// z^k for any integer k (reduced; negative k allowed).
  static CycNum zeta(long k);
  static CycNum i() { return zeta(6); }
  static CycNum omega() { return zeta(8); }
  static CycNum omega_bar() { return zeta(16); }
  static CycNum sqrt2();
  static CycNum sqrt3();
  static CycNum from_coeffs(const std::array<Rat, degree> &coeffs);

  /// Coefficient of z^k, 0 <= k < 8.
  Rat coeff(int k) const;
  std::array<Rat, degree> coeffs() const;

  bool is_zero() const;
  bool is_one() const;
  /// Fixed by complex conjugation, i.e. lies in the real subfield.
  bool is_real() const;
  /// Lies in Q.
  bool is_rational() const;
  /// Number of nonzero coefficients.
  int support() const;

  CycNum operator-() const;
  CycNum &operator+=(const CycNum &rhs);
  CycNum &operator-=(const CycNum &rhs);
  CycNum &operator*=(const CycNum &rhs);
  CycNum &operator/=(const CycNum &rhs);

  friend CycNum operator+(CycNum lhs, const CycNum &rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum &rhs) { return lhs -= rhs; }
  friend CycNum operator*(const CycNum &lhs, const CycNum &rhs);
  friend CycNum operator/(CycNum lhs, const CycNum &rhs) { return lhs /= rhs; }
  friend bool operator==(const CycNum &lhs, const CycNum &rhs);

  /// Multiplicative inverse; throws DivisionByZero on zero.
  CycNum inverse() const;
  /// Complex conjugation z -> z^23.
  CycNum conj() const;
  /// Field automorphism z -> z^j, gcd(j, 24) = 1.
  CycNum galois(int j) const;
  /// Embedding into C with z = exp(i pi / 12).
  FloatC embed() const;
  /// Embedding under the automorphism z -> z^j.
  FloatC embed(int j) const;

  /// Canonical literal: sum of c_k*z^k terms, k ascending.
  std::string format() const;

  /// Lexicographic order on (den, num) for use in ordered containers.
  friend bool operator<(const CycNum &lhs, const CycNum &rhs);

private:
  void normalize();
  static const std::array<std::array<long, degree>, 2 * order> &power_table();

  std::array<mpz_class, degree> m_num{};
  mpz_class m_den{1};
};

std::ostream &operator<<(std::ostream &os, const CycNum &value);

/// Parse a scalar literal: signed sums of products of a rational and the
/// tokens i, w, wb, r2, z, z^k. Throws ParseError.
CycNum parse_cyc(std::string_view text);

/// Exact square root in Q(zeta_24) if one exists with moderately sized
/// coefficients. The candidate is recovered from the eight complex
/// embeddings and always verified exactly; std::nullopt means no root was
/// found (either none exists in the field or its height is out of reach).
std::optional<CycNum> exact_sqrt(const CycNum &value);

/// Best rational approximation p/q of x with q <= max_den (continued fractions).
Rat rationalize(double x, long max_den);

// Scalar adapter used by the templated kernels.

inline bool is_zero(const CycNum &value) { return value.is_zero(); }
inline bool is_zero(const FloatC &value) { return value == FloatC{}; }
inline CycNum conj(const CycNum &value) { return value.conj(); }
inline FloatC conj(const FloatC &value) { return std::conj(value); }
inline double magnitude(const FloatC &value) { return std::abs(value); }
inline double magnitude(const CycNum &value) { return std::abs(value.embed()); }

template <class S> S scalar_cast(const CycNum &value);
template <> inline CycNum scalar_cast<CycNum>(const CycNum &value) { return value; }
template <> inline FloatC scalar_cast<FloatC>(const CycNum &value) { return value.embed(); }

/// Decimal text of a float scalar, e.g. "0.5-0.866025*i".
std::string format_float(const FloatC &value);

inline std::string format_scalar(const CycNum &value) { return value.format(); }
inline std::string format_scalar(const FloatC &value) { return format_float(value); }

} // namespace ternalg
