#ifndef FOURSYM_FAMILIES_HPP
#define FOURSYM_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "foursym/linalg.hpp"
#include "foursym/matrix.hpp"

namespace foursym {

enum class Family { gl, sl, so_compact, so_split, u_compact, u_split, sp };

bool family_uses_kprime(Family f);
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
const std::vector<Family>& all_families();

/// Parameters of one matrix Lie algebra instance. For the u and sp families
/// k = 2 k' is forced even and k' is the primitive parameter.
struct FamilySpec {
  Family family = Family::gl;
  std::size_t k = 0;       // size of the upper-left block, always k = ambient - 2n
  std::size_t n = 0;
  std::size_t kprime = 0;  // nonzero exactly for the u and sp families

  /// Validates and normalizes; throws Error on k = 0, n = 0 or an odd k
  /// requested for a u/sp family.
  static FamilySpec make(Family f, std::size_t k_or_kprime, std::size_t n);

  bool operator==(const FamilySpec&) const = default;

  std::size_t ambient() const { return k + 2 * n; }
  std::size_t expected_dim() const;
  std::string to_string() const;
};

/// J_{2n} = [[0, -Id_n], [Id_n, 0]].
Mat j_block(std::size_t n);
/// rho = diag(0_k, J_{2n}).
Mat rho_matrix(std::size_t k, std::size_t n);
/// R = diag(Id_k, J_{2n}); conjugation by R is the order-4 automorphism.
Mat r_matrix(std::size_t k, std::size_t n);

/// Ordered basis of one family instance together with a coordinate solver.
struct AlgebraBasis {
  FamilySpec spec;
  std::vector<Mat> basis;
  Mat rho;
  CoordSolver solver;

  AlgebraBasis(FamilySpec s, std::vector<Mat> b, Mat r);

  std::size_t dim() const { return basis.size(); }
  std::size_t ambient() const { return spec.ambient(); }
  bool contains(const Mat& x) const { return solver.contains(x); }
};

/// Deterministic canonical basis: the RREF kernel basis of the family's
/// defining linear constraints, scanned in row-major entry order.
AlgebraBasis build_family(const FamilySpec& spec);

struct ClosureReport {
  bool pass = true;
  // Witness for a failing pairwise bracket; first == dim() encodes rho.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Checks that all pairwise brackets and all bracket(rho, X_i) stay in the
/// span of the basis.
ClosureReport closure_report(const AlgebraBasis& alg);

/// Gram matrix of the trace form beta(X, Y) = Tr(XY) on the algebra basis.
GramForm beta_gram(const AlgebraBasis& alg);

}  // namespace foursym

#endif
