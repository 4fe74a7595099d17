#include "linklab/int_matrix.hpp"

namespace linklab {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::plus(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  IntMatrix s(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s.at(i, j) = at(i, j) + other.at(i, j);
  return s;
}

std::int64_t IntMatrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;  // empty product

  // Bareiss: every intermediate entry is itself a minor of the input, so the
  // divisions below are exact.
  std::vector<__int128> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = at(i, j);

  auto e = [&](int i, int j) -> __int128& { return a[static_cast<size_t>(i) * n + j]; };

  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (e(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (e(i, k) != 0) { pivot = i; break; }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(e(k, j), e(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
    prev = e(k, k);
  }
  return sign * static_cast<std::int64_t>(e(n - 1, n - 1));
}

}  // namespace linklab
