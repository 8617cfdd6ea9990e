#ifndef FOURSYM_MATRIX_HPP
#define FOURSYM_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "foursym/rational.hpp"

namespace foursym {

/// Dense matrix over exact rationals, row-major. Value type: every
/// operation returns a fresh matrix and never mutates its inputs.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Rat& c) const;
  Mat transposed() const;

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Entries of the matrix read row by row, as a coordinate vector.
  const std::vector<Rat>& flat() const { return a_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// [a, b] = ab - ba. Both arguments must be square of equal size.
Mat bracket(const Mat& a, const Mat& b);

/// Exact sum of the diagonal entries of a square matrix.
Rat trace(const Mat& a);

}  // namespace foursym

#endif
