#include "ternalg/scalar.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "ternalg/error.hpp"

namespace ternalg {

namespace {

constexpr std::array<int, 8> kUnits = {1, 5, 7, 11, 13, 17, 19, 23};

int mod24(long k)
{
  long r = k % CycNum::order;
  return static_cast<int>(r < 0 ? r + CycNum::order : r);
}

} // namespace

const std::array<std::array<long, CycNum::degree>, 2 * CycNum::order> &CycNum::power_table()
{
  // Row k holds the reduced coefficients of z^k, using z^8 = z^4 - 1.
  static const auto table = [] {
    std::array<std::array<long, degree>, 2 * order> t{};
    t[0][0] = 1;
    for (int k = 1; k < 2 * order; ++k) {
      const auto &prev = t[k - 1];
      auto &row = t[k];
      for (int j = 0; j + 1 < degree; ++j)
        row[j + 1] = prev[j];
      long top = prev[degree - 1];
      row[4] += top;
      row[0] -= top;
    }
    return t;
  }();
  return table;
}

CycNum::CycNum(long value)
{
  m_num[0] = value;
}

CycNum::CycNum(const Rat &value)
{
  m_num[0] = value.get_num();
  m_den = value.get_den();
}

CycNum CycNum::zeta(long k)
{
  CycNum out;
  const auto &row = power_table()[mod24(k)];
  for (int j = 0; j < degree; ++j)
    out.m_num[j] = row[j];
  return out;
}

CycNum CycNum::sqrt2()
{
  return zeta(3) + zeta(21);
}

CycNum CycNum::sqrt3()
{
  return zeta(2) + zeta(22);
}

CycNum CycNum::from_coeffs(const std::array<Rat, degree> &coeffs)
{
  CycNum out;
  mpz_class den = 1;
  for (const auto &c : coeffs)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (int k = 0; k < degree; ++k)
    out.m_num[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
  out.m_den = den;
  out.normalize();
  return out;
}

Rat CycNum::coeff(int k) const
{
  Rat r(m_num.at(k), m_den);
  r.canonicalize();
  return r;
}

std::array<Rat, CycNum::degree> CycNum::coeffs() const
{
  std::array<Rat, degree> out;
  for (int k = 0; k < degree; ++k)
    out[k] = coeff(k);
  return out;
}

bool CycNum::is_zero() const
{
  for (const auto &n : m_num)
    if (sgn(n) != 0)
      return false;
  return true;
}

bool CycNum::is_one() const
{
  if (m_den != 1 || m_num[0] != 1)
    return false;
  for (int k = 1; k < degree; ++k)
    if (sgn(m_num[k]) != 0)
      return false;
  return true;
}

bool CycNum::is_real() const
{
  return conj() == *this;
}

bool CycNum::is_rational() const
{
  for (int k = 1; k < degree; ++k)
    if (sgn(m_num[k]) != 0)
      return false;
  return true;
}

int CycNum::support() const
{
  int count = 0;
  for (const auto &n : m_num)
    count += sgn(n) != 0;
  return count;
}

void CycNum::normalize()
{
  if (m_den == 1)
    return;
  mpz_class g = m_den;
  for (const auto &n : m_num) {
    if (sgn(n) == 0)
      continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1)
      return;
  }
  if (is_zero()) {
    m_den = 1;
    return;
  }
  for (auto &n : m_num)
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(m_den.get_mpz_t(), m_den.get_mpz_t(), g.get_mpz_t());
}

CycNum CycNum::operator-() const
{
  CycNum out = *this;
  for (auto &n : out.m_num)
    mpz_neg(n.get_mpz_t(), n.get_mpz_t());
  return out;
}

CycNum &CycNum::operator+=(const CycNum &rhs)
{
  if (rhs.is_zero())
    return *this;
  if (m_den == rhs.m_den) {
    for (int k = 0; k < degree; ++k)
      m_num[k] += rhs.m_num[k];
  } else {
    for (int k = 0; k < degree; ++k) {
      m_num[k] *= rhs.m_den;
      mpz_addmul(m_num[k].get_mpz_t(), rhs.m_num[k].get_mpz_t(), m_den.get_mpz_t());
    }
    m_den *= rhs.m_den;
  }
  normalize();
  return *this;
}

CycNum &CycNum::operator-=(const CycNum &rhs)
{
  if (rhs.is_zero())
    return *this;
  if (m_den == rhs.m_den) {
    for (int k = 0; k < degree; ++k)
      m_num[k] -= rhs.m_num[k];
  } else {
    for (int k = 0; k < degree; ++k) {
      m_num[k] *= rhs.m_den;
      mpz_submul(m_num[k].get_mpz_t(), rhs.m_num[k].get_mpz_t(), m_den.get_mpz_t());
    }
    m_den *= rhs.m_den;
  }
  normalize();
  return *this;
}

CycNum operator*(const CycNum &lhs, const CycNum &rhs)
{
  CycNum out;
  if (lhs.is_zero() || rhs.is_zero())
    return out;
  std::array<mpz_class, 2 * CycNum::degree - 1> prod;
  for (int a = 0; a < CycNum::degree; ++a) {
    if (sgn(lhs.m_num[a]) == 0)
      continue;
    for (int b = 0; b < CycNum::degree; ++b) {
      if (sgn(rhs.m_num[b]) == 0)
        continue;
      mpz_addmul(prod[a + b].get_mpz_t(), lhs.m_num[a].get_mpz_t(), rhs.m_num[b].get_mpz_t());
    }
  }
  // z^k = z^(k-4) - z^(k-8) for k >= 8
  for (int k = 2 * CycNum::degree - 2; k >= CycNum::degree; --k) {
    if (sgn(prod[k]) == 0)
      continue;
    prod[k - 4] += prod[k];
    prod[k - 8] -= prod[k];
  }
  for (int k = 0; k < CycNum::degree; ++k)
    out.m_num[k].swap(prod[k]);
  out.m_den = lhs.m_den * rhs.m_den;
  out.normalize();
  return out;
}

CycNum &CycNum::operator*=(const CycNum &rhs)
{
  *this = *this * rhs;
  return *this;
}

CycNum &CycNum::operator/=(const CycNum &rhs)
{
  *this = *this * rhs.inverse();
  return *this;
}

bool operator==(const CycNum &lhs, const CycNum &rhs)
{
  return lhs.m_den == rhs.m_den && lhs.m_num == rhs.m_num;
}

bool operator<(const CycNum &lhs, const CycNum &rhs)
{
  if (int c = cmp(lhs.m_den, rhs.m_den); c != 0)
    return c < 0;
  for (int k = 0; k < CycNum::degree; ++k)
    if (int c = cmp(lhs.m_num[k], rhs.m_num[k]); c != 0)
      return c < 0;
  return false;
}

CycNum CycNum::galois(int j) const
{
  if (std::gcd(j, order) != 1)
    throw Error("galois: exponent must be a unit mod 24");
  const auto &table = power_table();
  CycNum out;
  for (int k = 0; k < degree; ++k) {
    if (sgn(m_num[k]) == 0)
      continue;
    const auto &row = table[mod24(static_cast<long>(j) * k)];
    for (int t = 0; t < degree; ++t)
      if (row[t] != 0)
        out.m_num[t] += row[t] * m_num[k];
  }
  out.m_den = m_den;
  out.normalize();
  return out;
}

CycNum CycNum::conj() const
{
  return galois(order - 1);
}

CycNum CycNum::inverse() const
{
  if (is_zero())
    throw DivisionByZero();
  if (is_rational()) {
    Rat r = coeff(0);
    return CycNum(Rat(1) / r);
  }
  // The product of all non-trivial conjugates times this element is the
  // field norm, a rational number.
  CycNum cofactor(1);
  for (int j : kUnits)
    if (j != 1)
      cofactor *= galois(j);
  CycNum norm = *this * cofactor;
  Rat n = norm.coeff(0);
  return cofactor * CycNum(Rat(1) / n);
}

FloatC CycNum::embed(int j) const
{
  FloatC acc{};
  double den = m_den.get_d();
  for (int k = 0; k < degree; ++k) {
    if (sgn(m_num[k]) == 0)
      continue;
    double angle = std::numbers::pi * static_cast<double>(mod24(static_cast<long>(j) * k)) / 12.0;
    acc += (m_num[k].get_d() / den) * FloatC(std::cos(angle), std::sin(angle));
  }
  return acc;
}

FloatC CycNum::embed() const
{
  return embed(1);
}

std::string CycNum::format() const
{
  if (is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k < degree; ++k) {
    Rat c = coeff(k);
    if (sgn(c) == 0)
      continue;
    bool negative = sgn(c) < 0;
    Rat mag = abs(c);
    std::string body;
    if (k == 0)
      body = mag.get_str();
    else if (mag == 1)
      body = "z^" + std::to_string(k);
    else
      body = mag.get_str() + "*z^" + std::to_string(k);
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? "-" : "+") + body;
    first = false;
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const CycNum &value)
{
  return os << value.format();
}

std::string format_float(const FloatC &value)
{
  std::ostringstream os;
  os.precision(17);
  os << value.real();
  if (value.imag() != 0.0) {
    if (value.imag() >= 0 || std::isnan(value.imag()))
      os << '+';
    os << value.imag() << "*i";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Literal parser

namespace {

class LiteralParser
{
public:
  explicit LiteralParser(std::string_view text) : m_text(text) {}

  CycNum parse()
  {
    skip_ws();
    if (at_end())
      throw ParseError("empty scalar literal", m_pos);
    CycNum total;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++m_pos;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", m_pos);
      }
      CycNum term = parse_term();
      if (sign < 0)
        total -= term;
      else
        total += term;
      first = false;
      skip_ws();
      if (at_end())
        break;
    }
    return total;
  }

private:
  CycNum parse_term()
  {
    CycNum term = parse_factor();
    while (true) {
      skip_ws();
      if (peek() != '*')
        break;
      ++m_pos;
      skip_ws();
      term *= parse_factor();
    }
    return term;
  }

  CycNum parse_factor()
  {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return CycNum(parse_rational());
    if (c == 'i') {
      ++m_pos;
      return CycNum::i();
    }
    if (c == 'w') {
      ++m_pos;
      if (peek() == 'b') {
        ++m_pos;
        return CycNum::omega_bar();
      }
      return CycNum::omega();
    }
    if (c == 'r') {
      std::size_t start = m_pos;
      ++m_pos;
      if (peek() == '2') {
        ++m_pos;
        return CycNum::sqrt2();
      }
      throw ParseError("unknown token (expected r2)", start);
    }
    if (c == 'z') {
      ++m_pos;
      skip_ws();
      if (peek() != '^')
        return CycNum::zeta(1);
      ++m_pos;
      skip_ws();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++m_pos;
      }
      std::size_t start = m_pos;
      long k = parse_integer();
      if (m_pos == start)
        throw ParseError("expected exponent", start);
      return CycNum::zeta(negative ? -k : k);
    }
    throw ParseError(at_end() ? "unexpected end of literal" : std::string("unexpected character '") + c + "'", m_pos);
  }

  long parse_integer()
  {
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++m_pos;
    }
    return value;
  }

  Rat parse_rational()
  {
    std::size_t start = m_pos;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++m_pos;
    std::string num(m_text.substr(start, m_pos - start));
    std::string den = "1";
    if (peek() == '/') {
      ++m_pos;
      std::size_t dstart = m_pos;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++m_pos;
      if (m_pos == dstart)
        throw ParseError("expected denominator", dstart);
      den = std::string(m_text.substr(dstart, m_pos - dstart));
      if (mpz_class(den) == 0)
        throw ParseError("zero denominator", dstart);
    }
    Rat r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
  }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos])))
      ++m_pos;
  }

  char peek() const { return at_end() ? '\0' : m_text[m_pos]; }
  bool at_end() const { return m_pos >= m_text.size(); }

  std::string_view m_text;
  std::size_t m_pos = 0;
};

} // namespace

CycNum parse_cyc(std::string_view text)
{
  return LiteralParser(text).parse();
}

// ---------------------------------------------------------------------------
// Square roots

Rat rationalize(double x, long max_den)
{
  // Continued-fraction convergents h/k of x.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int step = 0; step < 64; ++step) {
    if (std::abs(frac) < 1e-15)
      break;
    double inv = 1.0 / frac;
    long a = static_cast<long>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den)
      break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    Rat approx(h, k);
    if (std::abs(approx.get_d() - x) < 1e-13 * std::max(1.0, std::abs(x)))
      break;
  }
  Rat out(h, k);
  out.canonicalize();
  return out;
}

namespace {

std::optional<CycNum> sqrt_by_embeddings(const CycNum &value)
{
  using Mat8 = Eigen::Matrix<std::complex<double>, 8, 8>;
  using Vec8 = Eigen::Matrix<std::complex<double>, 8, 1>;
  static const Mat8 inverse_vandermonde = [] {
    Mat8 v;
    for (int r = 0; r < 8; ++r)
      for (int k = 0; k < 8; ++k) {
        double angle = std::numbers::pi * static_cast<double>((kUnits[r] * k) % 24) / 12.0;
        v(r, k) = std::complex<double>(std::cos(angle), std::sin(angle));
      }
    return Mat8(v.inverse());
  }();

  std::array<std::complex<double>, 8> roots;
  for (int r = 0; r < 8; ++r)
    roots[r] = std::sqrt(value.embed(kUnits[r]));

  // One of the two roots has positive sign under the identity embedding;
  // the remaining seven signs are searched exhaustively.
  for (unsigned mask = 0; mask < (1u << 7); ++mask) {
    Vec8 images;
    images(0) = roots[0];
    for (int r = 1; r < 8; ++r)
      images(r) = (mask >> (r - 1) & 1u) ? -roots[r] : roots[r];
    Vec8 coeffs = inverse_vandermonde * images;
    bool real = true;
    for (int k = 0; k < 8; ++k)
      if (std::abs(coeffs(k).imag()) > 1e-7 * std::max(1.0, std::abs(coeffs(k).real())))
        real = false;
    if (!real)
      continue;
    for (long bound : {1000L, 1000000L}) {
      std::array<Rat, 8> rats;
      for (int k = 0; k < 8; ++k)
        rats[k] = rationalize(coeffs(k).real(), bound);
      CycNum candidate = CycNum::from_coeffs(rats);
      if (candidate * candidate == value)
        return candidate;
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<CycNum> exact_sqrt(const CycNum &value)
{
  if (value.is_zero())
    return CycNum();
  if (auto root = sqrt_by_embeddings(value))
    return root;
  // A small root may have a large inverse (and vice versa).
  if (auto root = sqrt_by_embeddings(value.inverse()))
    return root->inverse();
  return std::nullopt;
}

} // namespace ternalg
