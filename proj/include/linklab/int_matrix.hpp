#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace linklab {

// Dense matrix of exact 64-bit integers, row-major.  All arithmetic is
// integral; the determinant uses fraction-free (Bareiss) elimination with
// 128-bit intermediates, so there is no rounding anywhere.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
  }
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix transposed() const;
  IntMatrix plus(const IntMatrix& other) const;

  // Exact determinant; throws on non-square input.
  std::int64_t determinant() const;

  bool operator==(const IntMatrix& other) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> entries_;
};

}  // namespace linklab
