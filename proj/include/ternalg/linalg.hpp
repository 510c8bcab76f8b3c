#pragma once

// Dense vectors, matrices and rank-4 tensors over the scalar types, and exact
// Gaussian elimination over Q(zeta_24).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "ternalg/error.hpp"
#include "ternalg/scalar.hpp"

namespace ternalg {

template <class S> using Vector = std::vector<S>;

/// Coordinates of an algebra element with respect to its basis.
using Element = Vector<CycNum>;

template <class S> Vector<S> zero_vector(std::size_t n)
{
  return Vector<S>(n, S{});
}

template <class S> Vector<S> unit_vector(std::size_t n, std::size_t i)
{
  Vector<S> v(n, S{});
  v.at(i) = S(1);
  return v;
}

template <class S> Vector<S> &operator+=(Vector<S> &a, const Vector<S> &b)
{
  if (a.size() != b.size())
    throw ShapeError("vector length mismatch");
  for (std::size_t t = 0; t < a.size(); ++t)
    if (!is_zero(b[t]))
      a[t] += b[t];
  return a;
}

template <class S> Vector<S> &operator-=(Vector<S> &a, const Vector<S> &b)
{
  if (a.size() != b.size())
    throw ShapeError("vector length mismatch");
  for (std::size_t t = 0; t < a.size(); ++t)
    if (!is_zero(b[t]))
      a[t] -= b[t];
  return a;
}

template <class S> Vector<S> operator+(Vector<S> a, const Vector<S> &b)
{
  return a += b;
}

template <class S> Vector<S> operator-(Vector<S> a, const Vector<S> &b)
{
  return a -= b;
}

template <class S> Vector<S> operator-(Vector<S> a)
{
  for (auto &x : a)
    x = -x;
  return a;
}

template <class S> Vector<S> operator*(const S &c, Vector<S> a)
{
  if (is_zero(c))
    return Vector<S>(a.size(), S{});
  for (auto &x : a)
    if (!is_zero(x))
      x *= c;
  return a;
}

/// a += c * b
template <class S> void axpy(Vector<S> &a, const S &c, const Vector<S> &b)
{
  if (is_zero(c))
    return;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (!is_zero(b[t]))
      a[t] += c * b[t];
}

template <class S> bool is_zero_vector(const Vector<S> &v)
{
  return std::all_of(v.begin(), v.end(), [](const S &x) { return is_zero(x); });
}

/// Largest coordinate magnitude (the float residual norm).
template <class S> double max_abs(const Vector<S> &v)
{
  double m = 0.0;
  for (const auto &x : v)
    m = std::max(m, magnitude(x));
  return m;
}

inline Vector<FloatC> to_float(const Element &v)
{
  Vector<FloatC> out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.push_back(x.embed());
  return out;
}

inline Element conj(const Element &v)
{
  Element out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.push_back(x.conj());
  return out;
}

template <class S> struct Matrix
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<S> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, S{}) {}

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = S(1);
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector<S>> &columns)
  {
    if (columns.empty())
      return Matrix();
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != m.rows)
        throw ShapeError("column length mismatch");
      for (std::size_t r = 0; r < m.rows; ++r)
        m(r, c) = columns[c][r];
    }
    return m;
  }

  S &operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const S &operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  Vector<S> column(std::size_t c) const
  {
    Vector<S> v(rows);
    for (std::size_t r = 0; r < rows; ++r)
      v[r] = (*this)(r, c);
    return v;
  }

  friend bool operator==(const Matrix &a, const Matrix &b)
  {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

template <class S> Matrix<S> operator*(const Matrix<S> &a, const Matrix<S> &b)
{
  if (a.cols != b.rows)
    throw ShapeError("matrix product shape mismatch");
  Matrix<S> out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (is_zero(a(i, k)))
        continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (!is_zero(b(k, j)))
          out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class S> Vector<S> operator*(const Matrix<S> &a, const Vector<S> &v)
{
  if (a.cols != v.size())
    throw ShapeError("matrix-vector shape mismatch");
  Vector<S> out(a.rows, S{});
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (!is_zero(a(i, k)) && !is_zero(v[k]))
        out[i] += a(i, k) * v[k];
  return out;
}

using CycMatrix = Matrix<CycNum>;

struct Echelon
{
  CycMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form, first-nonzero pivoting.
Echelon rref(CycMatrix m);
std::size_t rank(const CycMatrix &m);
CycNum det(const CycMatrix &m);
/// Throws SingularError.
CycMatrix inverse(const CycMatrix &m);
/// Some solution x of m x = b, or nullopt if inconsistent.
std::optional<Vector<CycNum>> solve(const CycMatrix &m, const Vector<CycNum> &b);
/// Basis of the kernel of m.
std::vector<Vector<CycNum>> nullspace(const CycMatrix &m);

/// Rank-4 array indexed (m; i, j, k), stored so that the m-column of each
/// (i, j, k) is contiguous.
template <class S> class Tensor4
{
public:
  Tensor4() = default;
  explicit Tensor4(std::size_t dim) : m_dim(dim), m_data(dim * dim * dim * dim, S{}) {}

  std::size_t dim() const { return m_dim; }

  S &at(std::size_t m, std::size_t i, std::size_t j, std::size_t k) { return m_data[offset(i, j, k) + m]; }
  const S &at(std::size_t m, std::size_t i, std::size_t j, std::size_t k) const
  {
    return m_data[offset(i, j, k) + m];
  }

  Vector<S> column(std::size_t i, std::size_t j, std::size_t k) const
  {
    auto first = m_data.begin() + static_cast<std::ptrdiff_t>(offset(i, j, k));
    return Vector<S>(first, first + static_cast<std::ptrdiff_t>(m_dim));
  }

  void set_column(std::size_t i, std::size_t j, std::size_t k, const Vector<S> &v)
  {
    if (v.size() != m_dim)
      throw ShapeError("tensor column length mismatch");
    std::copy(v.begin(), v.end(), m_data.begin() + static_cast<std::ptrdiff_t>(offset(i, j, k)));
  }

  bool is_zero_tensor() const
  {
    return std::all_of(m_data.begin(), m_data.end(), [](const S &x) { return is_zero(x); });
  }

  const std::vector<S> &raw() const { return m_data; }

  friend bool operator==(const Tensor4 &a, const Tensor4 &b) { return a.m_dim == b.m_dim && a.m_data == b.m_data; }

private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const { return ((i * m_dim + j) * m_dim + k) * m_dim; }

  std::size_t m_dim = 0;
  std::vector<S> m_data;
};

/// Structure constants C^m_{ijk}.
using StructureTensor = Tensor4<CycNum>;

inline Tensor4<FloatC> to_float(const StructureTensor &c)
{
  Tensor4<FloatC> out(c.dim());
  const std::size_t d = c.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m)
          out.at(m, i, j, k) = c.at(m, i, j, k).embed();
  return out;
}

} // namespace ternalg
