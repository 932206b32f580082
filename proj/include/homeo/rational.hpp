#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace homeo {

using Rational = mpq_class;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] RationalMatrix without(std::size_t row, std::size_t col) const;
  [[nodiscard]] static RationalMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant. Rows are scaled to integers and reduced with
/// fraction-free (Bareiss) elimination over GMP integers.
/// Throws NetworkError for non-square input. The empty matrix has det 1.
[[nodiscard]] Rational det_exact(const RationalMatrix& m);

/// Exact solution of A x = b by Gaussian elimination, or nullopt if A is
/// singular. Throws NetworkError on shape mismatch.
[[nodiscard]] std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                               const std::vector<Rational>& b);

}  // namespace homeo
