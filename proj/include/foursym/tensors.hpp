#ifndef FOURSYM_TENSORS_HPP
#define FOURSYM_TENSORS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "foursym/foursym.hpp"

namespace foursym {

/// Optional extension of the canonical lift of an almost complex structure:
/// maps algebra elements into g^sigma and is added to J o proj_m.
using Lift = std::function<Mat(const Mat&)>;

/// Nijenhuis torsion N(x, y) = [Jx, Jy] - J[Jx, y] - J[x, Jy] + J(J[x, y])
/// of the lift of j_s, projected back to m. The default lift vanishes on
/// g^sigma; the result is independent of the choice (tested, not assumed).
Mat nijenhuis(const FourSym& fs, Sign s, const Mat& x, const Mat& y,
              const Lift& extra = {});

struct NijenhuisImage {
  std::size_t dim = 0;
  std::vector<Mat> basis;
  // structural spans: proj [p, v] inside p, and proj_v [p, p] inside v
  std::size_t dim_pv = 0;
  std::size_t dim_pp_v = 0;
  bool structural_match = false;  // torsion image == sum of the two spans
  bool maximal = false;           // image fills m
};

/// Span of all pairwise torsion values of j_s over the m basis, cross-checked
/// against the structural description [p, g^sigma_{-1}] + ([p, p] cap
/// g^sigma_{-1}) when s is minus (for s plus the image is expected empty).
NijenhuisImage nijenhuis_image(const FourSym& fs, Sign s);

enum class Metric { gplus, gminus };
enum class Conn { lc_gplus, lc_gminus, chern_minus };

Sign metric_sign(Metric g);

/// Levi-Civita value nabla_{a*} b*(p_0) on representatives, projected to m.
/// Only the m parts of the arguments enter; g^sigma components are ignored.
Mat lc_nabla(const FourSym& fs, Metric g, const Mat& a, const Mat& b);

/// Chern connection for j-: nabla_{a*} b*(p_0) = proj_m [a, b].
Mat chern_nabla(const FourSym& fs, const Mat& a, const Mat& b);

/// Chern connection recomputed from lc_nabla(g-) and J- via the defining
/// formula nabla - (1/2) j (nabla j); agrees with chern_nabla identically.
Mat chern_nabla_route2(const FourSym& fs, const Mat& a, const Mat& b);

/// Curvature values R(e_i, e_j) e_k in m coordinates, stored for i < j; the
/// i > j values follow by antisymmetry and the diagonal vanishes.
struct CurvatureTable {
  std::size_t dim = 0;
  std::vector<std::vector<Rat>> entries;

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    return (i * (2 * dim - i - 1)) / 2 + (j - i - 1);
  }
  const std::vector<Rat>& stored(std::size_t i, std::size_t j, std::size_t k) const {
    return entries[pair_index(i, j) * dim + k];
  }
  /// Signed copy; requires i != j.
  std::vector<Rat> value(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Table built from the ten specialized per-block formulas.
CurvatureTable curvature(const FourSym& fs, Conn c);

/// Table built only from the connection and brackets via the generic
/// homogeneous curvature formula (torsion-free for Levi-Civita, the
/// torsionful variant for Chern).
CurvatureTable curvature_oracle(const FourSym& fs, Conn c);

struct TableComparison {
  bool match = true;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> witness;
};

TableComparison compare_tables(const CurvatureTable& a, const CurvatureTable& b);

/// Bilinear form computed along two independent routes.
struct DualRouteGram {
  GramForm gram;  // the route-(a) value, from the curvature table
  bool routes_agree = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Ricci tensor of the Levi-Civita connection: (a) trace of the curvature
/// table, (b) the closed-form partial traces; exact agreement recorded.
DualRouteGram ricci_gram(const FourSym& fs, Metric g, const CurvatureTable& table);

/// Chern-Ricci 2-form. For j-: (a) Tr(J- o R^{C-}(.,.)) from the table,
/// (b) the closed-form partial traces; for j+: 2 Ric^{g+}(., J+ .), in which
/// case the table argument must be the g+ Levi-Civita table.
DualRouteGram chern_ricci_gram(const FourSym& fs, Sign s, const CurvatureTable& table);

/// First pair where Ric(J e_i, J e_j) != Ric(e_i, e_j), or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> hermitian_witness(
    const FourSym& fs, Sign s, const Mat& ric, const Mat& j);

/// Tests lhs == c * rhs entrywise, with c taken from the first nonzero rhs
/// entry in row-major order (c = 0 when rhs vanishes identically).
struct Proportionality {
  bool proportional = false;
  Rat constant = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

Proportionality proportionality_check(const Mat& lhs, const Mat& rhs);

enum class Subspace { v, p };

/// Exact trace of op restricted to the chosen eigenspace, by coordinate
/// expansion; throws Error if op carries the subspace outside itself.
Rat block_trace(const FourSym& fs, const std::function<Mat(const Mat&)>& op,
                Subspace sub);

}  // namespace foursym

#endif
