#include "ternalg/linalg.hpp"

namespace ternalg {

Echelon rref(CycMatrix m)
{
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col).is_zero())
      ++pivot;
    if (pivot == m.rows)
      continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols; ++c)
        std::swap(m(pivot, c), m(row, c));
    CycNum inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols; ++c)
      if (!m(row, c).is_zero())
        m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      CycNum factor = m(r, col);
      for (std::size_t c = col; c < m.cols; ++c)
        if (!m(row, c).is_zero())
          m(r, c) -= factor * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const CycMatrix &m)
{
  return rref(m).rank();
}

CycNum det(const CycMatrix &input)
{
  if (input.rows != input.cols)
    throw ShapeError("det: matrix is not square");
  CycMatrix m = input;
  const std::size_t n = m.rows;
  CycNum result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      return CycNum();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m(pivot, c), m(col, c));
      result = -result;
    }
    result *= m(col, col);
    CycNum inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero())
        continue;
      CycNum factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!m(col, c).is_zero())
          m(r, c) -= factor * m(col, c);
    }
  }
  return result;
}

CycMatrix inverse(const CycMatrix &m)
{
  if (m.rows != m.cols)
    throw ShapeError("inverse: matrix is not square");
  const std::size_t n = m.rows;
  CycMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = m(r, c);
    aug(r, n + r) = CycNum(1);
  }
  Echelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1)
    throw SingularError("matrix is singular");
  CycMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = e.reduced(r, n + c);
  return out;
}

std::optional<Vector<CycNum>> solve(const CycMatrix &m, const Vector<CycNum> &b)
{
  if (b.size() != m.rows)
    throw ShapeError("solve: right-hand side length mismatch");
  CycMatrix aug(m.rows, m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c)
      aug(r, c) = m(r, c);
    aug(r, m.cols) = b[r];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols)
    return std::nullopt;
  Vector<CycNum> x(m.cols);
  for (std::size_t r = 0; r < e.rank(); ++r)
    x[e.pivot_cols[r]] = e.reduced(r, m.cols);
  return x;
}

std::vector<Vector<CycNum>> nullspace(const CycMatrix &m)
{
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : e.pivot_cols)
    is_pivot[c] = true;
  std::vector<Vector<CycNum>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free])
      continue;
    Vector<CycNum> v(m.cols);
    v[free] = CycNum(1);
    for (std::size_t r = 0; r < e.rank(); ++r)
      v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace ternalg
