#ifndef FOURSYM_LINALG_HPP
#define FOURSYM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "foursym/matrix.hpp"

namespace foursym {

/// Rank of the matrix whose columns are the flattened input matrices.
/// All inputs must share one shape; an empty list has span 0.
std::size_t span_dim(const std::vector<Mat>& vectors);

/// Repeated exact coordinatization against a fixed independent basis.
/// Construction performs one elimination; each solve is a matrix-vector
/// product plus a membership residual check.
class CoordSolver {
 public:
  /// Throws if the basis is linearly dependent or shapes differ.
  explicit CoordSolver(const std::vector<Mat>& basis);

  std::size_t dim() const { return dim_; }

  /// Exact coordinates of v in the basis, or nullopt if v is outside the span.
  std::optional<std::vector<Rat>> coords(const Mat& v) const;

  /// Like coords() but treats non-membership as an error.
  std::vector<Rat> coords_or_throw(const Mat& v) const;

  bool contains(const Mat& v) const { return coords(v).has_value(); }

 private:
  std::size_t dim_;
  std::size_t rows_, cols_;           // shape of the basis matrices
  std::vector<std::size_t> pivot_;    // dim_ pivot positions in the flattened vector
  Mat inv_;                           // inverse of the pivot-row submatrix
  // nonzero entries of each basis element, for the residual check
  std::vector<std::vector<std::pair<std::size_t, Rat>>> sparse_;
};

/// One-shot version of CoordSolver::coords.
std::optional<std::vector<Rat>> coordinates_in_basis(const Mat& v,
                                                     const std::vector<Mat>& basis);

/// Null space of the linear map vec(X) -> rows, where each row is a linear
/// functional on the entries of an r x c matrix. The returned basis is the
/// canonical (RREF) kernel basis, ordered by free entry in row-major order,
/// so it is identical across runs.
std::vector<Mat> kernel_basis(const std::vector<std::vector<Rat>>& constraint_rows,
                              std::size_t rows, std::size_t cols);

std::size_t rank(Mat a);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Sylvester signature of a symmetric matrix via exact symmetric congruence
/// reduction. Throws on asymmetric input.
Signature symmetric_signature(const Mat& g);

enum class FormKind { symmetric, antisymmetric };

/// Bilinear form on a fixed basis, stored as its Gram matrix.
struct GramForm {
  Mat matrix;
  FormKind kind = FormKind::symmetric;

  GramForm() = default;
  /// Verifies the declared (anti)symmetry exactly.
  GramForm(Mat m, FormKind k);

  std::size_t dim() const { return matrix.rows(); }
  bool nondegenerate() const;
  Signature signature() const { return symmetric_signature(matrix); }
};

}  // namespace foursym

#endif
