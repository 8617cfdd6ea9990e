#include "foursym/linalg.hpp"

#include <algorithm>

namespace foursym {

namespace {

/// In-place row reduction to reduced row echelon form.
/// Returns the pivot column of each pivot row, in order.
std::vector<std::size_t> rref(Mat& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    const Rat inv = Rat(1) / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Mat inverse(const Mat& a) {
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n) throw Error("inverse: singular matrix");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace

std::size_t rank(Mat a) { return rref(a).size(); }

std::size_t span_dim(const std::vector<Mat>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().flat().size();
  Mat stacked(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Mat& v = vectors[i];
    if (v.rows() != vectors.front().rows() || v.cols() != vectors.front().cols())
      throw Error("span_dim: shape mismatch");
    for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = v.flat()[j];
  }
  return rank(std::move(stacked));
}

CoordSolver::CoordSolver(const std::vector<Mat>& basis) {
  dim_ = basis.size();
  if (dim_ == 0) {
    rows_ = cols_ = 0;
    return;
  }
  rows_ = basis.front().rows();
  cols_ = basis.front().cols();
  const std::size_t n = rows_ * cols_;
  // Columns are the flattened basis elements; pivot rows of the transposed
  // RREF give an invertible dim x dim submatrix.
  Mat rowsmat(dim_, n);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (basis[i].rows() != rows_ || basis[i].cols() != cols_)
      throw Error("CoordSolver: shape mismatch in basis");
    for (std::size_t j = 0; j < n; ++j) rowsmat.at(i, j) = basis[i].flat()[j];
  }
  pivot_ = rref(rowsmat);
  if (pivot_.size() != dim_) throw Error("CoordSolver: basis is linearly dependent");
  sparse_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (basis[i].flat()[j] != 0) sparse_[i].emplace_back(j, basis[i].flat()[j]);
  Mat sub(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) sub.at(i, j) = basis[j].flat()[pivot_[i]];
  inv_ = inverse(sub);
}

std::optional<std::vector<Rat>> CoordSolver::coords(const Mat& v) const {
  if (dim_ == 0) {
    if (v.is_zero()) return std::vector<Rat>{};
    return std::nullopt;
  }
  if (v.rows() != rows_ || v.cols() != cols_)
    throw Error("CoordSolver: shape mismatch in query");
  std::vector<Rat> x(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Rat& c = inv_.at(i, j);
      if (c != 0) s += c * v.flat()[pivot_[j]];
    }
    x[i] = s;
  }
  // Membership: the candidate coordinates must reproduce every entry.
  std::vector<Rat> recon(rows_ * cols_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [pos, val] : sparse_[j]) recon[pos] += x[j] * val;
  }
  if (recon != v.flat()) return std::nullopt;
  return x;
}

std::vector<Rat> CoordSolver::coords_or_throw(const Mat& v) const {
  auto c = coords(v);
  if (!c) throw Error("coordinates: vector outside the span of the basis");
  return *std::move(c);
}

std::optional<std::vector<Rat>> coordinates_in_basis(const Mat& v,
                                                     const std::vector<Mat>& basis) {
  return CoordSolver(basis).coords(v);
}

std::vector<Mat> kernel_basis(const std::vector<std::vector<Rat>>& constraint_rows,
                              std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  Mat a(constraint_rows.size(), n);
  for (std::size_t i = 0; i < constraint_rows.size(); ++i) {
    if (constraint_rows[i].size() != n) throw Error("kernel_basis: bad row length");
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = constraint_rows[i][j];
  }
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Mat> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Mat v(rows, cols);
    v.at(f / cols, f % cols) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Rat& c = a.at(r, f);
      if (c != 0) v.at(pivots[r] / cols, pivots[r] % cols) = -c;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Signature symmetric_signature(const Mat& g) {
  if (!g.is_square()) throw Error("symmetric_signature: non-square matrix");
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.at(i, j) != g.at(j, i)) throw Error("symmetric_signature: asymmetric input");
  Mat a = g;
  Signature sig;
  auto swap_rc = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
  };
  auto add_rc = [&](std::size_t i, std::size_t j, const Rat& f) {
    // row_i += f * row_j, then the same on columns: a congruence step.
    for (std::size_t c = 0; c < n; ++c) a.at(i, c) += f * a.at(j, c);
    for (std::size_t r = 0; r < n; ++r) a.at(r, i) += f * a.at(r, j);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i, i) == 0) {
      std::size_t d = i + 1;
      while (d < n && a.at(d, d) == 0) ++d;
      if (d < n) {
        swap_rc(i, d);
      } else {
        // All remaining diagonal entries vanish; pull a nonzero
        // off-diagonal entry onto the diagonal (2x2 congruence split).
        std::size_t j = i + 1;
        while (j < n && a.at(i, j) == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        add_rc(i, j, 1);  // new a(i,i) = 2 a(i,j) != 0
      }
    }
    const Rat piv = a.at(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.at(j, i) == 0) continue;
      add_rc(j, i, -a.at(j, i) / piv);
    }
    if (piv > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

GramForm::GramForm(Mat m, FormKind k) : matrix(std::move(m)), kind(k) {
  if (!matrix.is_square()) throw Error("GramForm: non-square Gram matrix");
  const Mat t = matrix.transposed();
  if (kind == FormKind::symmetric && t != matrix)
    throw Error("GramForm: matrix is not symmetric");
  if (kind == FormKind::antisymmetric && t != -matrix)
    throw Error("GramForm: matrix is not antisymmetric");
}

bool GramForm::nondegenerate() const { return rank(matrix) == matrix.rows(); }

}  // namespace foursym
