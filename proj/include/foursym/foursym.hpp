#ifndef FOURSYM_FOURSYM_HPP
#define FOURSYM_FOURSYM_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "foursym/families.hpp"
#include "foursym/linalg.hpp"
#include "foursym/matrix.hpp"

namespace foursym {

/// Sign selecting one of the twin structures: j+ / g+ versus j- / g-.
enum class Sign { plus, minus };

/// A family instance together with its order-4 eigenspace splitting
///   g = g^sigma (+) g^sigma_{-1} (+) p,     m = g^sigma_{-1} (+) p.
/// Sub-bases are obtained by running the exact eigenprojectors over the
/// algebra basis and keeping a maximal independent subset, so they are
/// deterministic. Construction verifies the splitting invariants and
/// throws Error if any fails.
class FourSym {
 public:
  explicit FourSym(AlgebraBasis alg);

  const AlgebraBasis& algebra() const { return alg_; }
  const FamilySpec& spec() const { return alg_.spec; }
  const Mat& rho() const { return alg_.rho; }

  const std::vector<Mat>& gsigma_basis() const { return gsigma_; }
  const std::vector<Mat>& v_basis() const { return v_; }   // g^sigma_{-1}
  const std::vector<Mat>& p_basis() const { return p_; }
  /// Basis of m, the v basis followed by the p basis.
  const std::vector<Mat>& m_basis() const { return m_; }

  std::size_t dim_gsigma() const { return gsigma_.size(); }
  std::size_t dim_v() const { return v_.size(); }
  std::size_t dim_p() const { return p_.size(); }
  std::size_t dim_m() const { return m_.size(); }

  /// True when g^sigma_{-1} = 0, i.e. sigma^2 = id and the twin structures
  /// coincide.
  bool symmetric_mode() const { return v_.empty(); }

  const CoordSolver& m_solver() const { return m_solver_; }
  const CoordSolver& v_solver() const { return v_solver_; }
  const CoordSolver& p_solver() const { return p_solver_; }
  const CoordSolver& gsigma_solver() const { return gsigma_solver_; }

  Mat sigma(const Mat& x) const;

  // Eigenprojectors, written as polynomials in sigma.
  Mat proj_gsigma(const Mat& x) const;   // eigenvalue +1
  Mat proj_v(const Mat& x) const;        // eigenvalue -1
  Mat proj_p(const Mat& x) const;        // eigenvalues +-i (real form)
  Mat proj_m(const Mat& x) const { return proj_v(x) + proj_p(x); }

  /// The twin almost complex structure applied to an element of m.
  /// Acts as sigma on p and as (+-1/2) ad(rho) on g^sigma_{-1}.
  Mat j_apply(Sign s, const Mat& x) const;

  /// omega(x, y) = Tr(rho [x, y]).
  Rat omega(const Mat& x, const Mat& y) const;

  /// G_s(x, y) = omega(x, j_s y).
  Rat metric(Sign s, const Mat& x, const Mat& y) const;

 private:
  AlgebraBasis alg_;
  Mat r_, rinv_;
  // R and R^{-1} are signed permutations; conjugation only shuffles entries
  std::vector<std::size_t> qrow_, qcol_;
  std::vector<int> srow_, scol_;
  std::vector<Mat> gsigma_, v_, p_, m_;
  CoordSolver gsigma_solver_, v_solver_, p_solver_, m_solver_;

  void verify_splitting() const;
};

/// Matrix of j_s in the m basis (columns are coordinates of j_s e_i).
Mat j_matrix(const FourSym& fs, Sign s);

/// Gram matrix of omega on the m basis, verified antisymmetric.
GramForm omega_gram(const FourSym& fs);
/// Restriction of omega to g^sigma_{-1} (its own basis).
GramForm omega_v_gram(const FourSym& fs);
/// Restriction of omega to p.
GramForm omega_p_gram(const FourSym& fs);

/// Gram matrix of G_s on the m basis, verified symmetric.
GramForm metric_gram(const FourSym& fs, Sign s);

/// Gram of the ambient trace form Tr(XY) restricted to a list of matrices.
GramForm trace_form_gram(const std::vector<Mat>& basis);

/// Ranks of omega and of the trace-form restrictions that control its
/// nondegeneracy.
struct NondegeneracyReport {
  std::size_t dim_m = 0, dim_v = 0, dim_p = 0;
  std::size_t rank_omega = 0;
  std::size_t rank_trace_p = 0;   // g' = Tr(XY) on p
  std::size_t rank_trace_v = 0;   // beta^v = Tr(XY) on g^sigma_{-1}
  bool omega_nondegenerate() const { return rank_omega == dim_m; }
  bool blocks_nondegenerate() const {
    return rank_trace_p == dim_p && rank_trace_v == dim_v;
  }
};

NondegeneracyReport nondegeneracy_report(const FourSym& fs);

/// Checks omega(J e_i, J e_j) == omega(e_i, e_j) for an arbitrary
/// endomorphism J of m given by its matrix in the m basis. Returns the
/// first failing index pair, or nullopt on success.
std::optional<std::pair<std::size_t, std::size_t>> compatibility_witness(
    const FourSym& fs, const Mat& j);

/// Evaluates the Chevalley-Eilenberg differential of omega on all basis
/// triples i < j < k, using proj_m of the bracket and the supplied Gram
/// matrix of the 2-form (defaults to omega). Returns the first triple
/// where the cyclic sum is nonzero, or nullopt if the form is closed.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> closedness_witness(
    const FourSym& fs, const std::optional<Mat>& gram = std::nullopt);

}  // namespace foursym

#endif
