#include "foursym/families.hpp"

#include <functional>
#include <utility>

namespace foursym {

bool family_uses_kprime(Family f) {
  return f == Family::u_compact || f == Family::u_split || f == Family::sp;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::so_compact: return "so-compact";
    case Family::so_split: return "so-split";
    case Family::u_compact: return "u-compact";
    case Family::u_split: return "u-split";
    case Family::sp: return "sp";
  }
  throw Error("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = {
      Family::gl,        Family::sl,      Family::so_compact, Family::so_split,
      Family::u_compact, Family::u_split, Family::sp};
  return fams;
}

FamilySpec FamilySpec::make(Family f, std::size_t k_or_kprime, std::size_t n) {
  if (k_or_kprime == 0 || n == 0)
    throw Error("FamilySpec: k and n must be positive");
  FamilySpec s;
  s.family = f;
  s.n = n;
  if (family_uses_kprime(f)) {
    s.kprime = k_or_kprime;
    s.k = 2 * k_or_kprime;
  } else {
    s.k = k_or_kprime;
  }
  return s;
}

std::size_t FamilySpec::expected_dim() const {
  const std::size_t m = ambient();
  switch (family) {
    case Family::gl: return m * m;
    case Family::sl: return m * m - 1;
    case Family::so_compact:
    case Family::so_split: return m * (m - 1) / 2;
    case Family::u_compact:
    case Family::u_split: return (kprime + n) * (kprime + n);
    case Family::sp: return m * (m + 1) / 2;
  }
  throw Error("unknown family");
}

std::string FamilySpec::to_string() const {
  std::string s = family_name(family);
  if (family_uses_kprime(family))
    s += "(k'=" + std::to_string(kprime) + ", n=" + std::to_string(n) + ")";
  else
    s += "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
  return s;
}

Mat j_block(std::size_t n) {
  Mat j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.at(i, n + i) = -1;
    j.at(n + i, i) = 1;
  }
  return j;
}

namespace {

/// diag(a, b) for square blocks.
Mat block_diag(const Mat& a, const Mat& b) {
  Mat d(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) d.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return d;
}

/// Rows of the linear system f(X) = 0 on the entries of an m x m matrix.
std::vector<std::vector<Rat>> constraint_rows(
    std::size_t m, const std::function<Mat(const Mat&)>& f) {
  // Column (i, j) of the system is f(E_ij), flattened.
  std::vector<std::vector<Rat>> rows;
  std::vector<Mat> images;
  images.reserve(m * m);
  std::size_t out_size = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Mat e(m, m);
      e.at(i, j) = 1;
      Mat img = f(e);
      out_size = img.flat().size();
      images.push_back(std::move(img));
    }
  rows.assign(out_size, std::vector<Rat>(m * m));
  for (std::size_t c = 0; c < m * m; ++c)
    for (std::size_t r = 0; r < out_size; ++r) rows[r][c] = images[c].flat()[r];
  return rows;
}

void append(std::vector<std::vector<Rat>>& dst, std::vector<std::vector<Rat>> src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

}  // namespace

Mat rho_matrix(std::size_t k, std::size_t n) {
  return block_diag(Mat::zero(k, k), j_block(n));
}

Mat r_matrix(std::size_t k, std::size_t n) {
  return block_diag(Mat::identity(k), j_block(n));
}

AlgebraBasis::AlgebraBasis(FamilySpec s, std::vector<Mat> b, Mat r)
    : spec(s), basis(std::move(b)), rho(std::move(r)), solver(basis) {}

AlgebraBasis build_family(const FamilySpec& spec) {
  const std::size_t m = spec.ambient();
  const std::size_t k = spec.k;
  const std::size_t n = spec.n;
  std::vector<std::vector<Rat>> rows;

  const Mat s_form = block_diag(Mat::identity(k), -Mat::identity(2 * n));
  switch (spec.family) {
    case Family::gl:
      break;
    case Family::sl: {
      std::vector<Rat> tr(m * m);
      for (std::size_t i = 0; i < m; ++i) tr[i * m + i] = 1;
      rows.push_back(std::move(tr));
      break;
    }
    case Family::so_compact:
      append(rows, constraint_rows(m, [](const Mat& x) { return x + x.transposed(); }));
      break;
    case Family::so_split:
      append(rows, constraint_rows(m, [&](const Mat& x) {
               return x.transposed() * s_form + s_form * x;
             }));
      break;
    case Family::u_compact:
    case Family::u_split: {
      const Mat kmat = block_diag(j_block(spec.kprime), j_block(n));
      if (spec.family == Family::u_compact)
        append(rows, constraint_rows(m, [](const Mat& x) { return x + x.transposed(); }));
      else
        append(rows, constraint_rows(m, [&](const Mat& x) {
                 return x.transposed() * s_form + s_form * x;
               }));
      append(rows, constraint_rows(m, [&](const Mat& x) { return x * kmat - kmat * x; }));
      break;
    }
    case Family::sp: {
      const Mat omega = block_diag(-j_block(spec.kprime), -j_block(n));
      append(rows, constraint_rows(m, [&](const Mat& x) {
               return x.transposed() * omega + omega * x;
             }));
      break;
    }
  }

  std::vector<Mat> basis = kernel_basis(rows, m, m);
  if (basis.size() != spec.expected_dim())
    throw Error("build_family: unexpected dimension for " + spec.to_string());
  AlgebraBasis alg(spec, std::move(basis), rho_matrix(k, n));
  if (!alg.contains(alg.rho))
    throw Error("build_family: rho escapes the algebra for " + spec.to_string());
  return alg;
}

ClosureReport closure_report(const AlgebraBasis& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!alg.contains(bracket(alg.basis[i], alg.basis[j])))
        return {false, std::make_pair(i, j)};
  for (std::size_t i = 0; i < d; ++i)
    if (!alg.contains(bracket(alg.rho, alg.basis[i])))
      return {false, std::make_pair(d, i)};
  return {};
}

GramForm beta_gram(const AlgebraBasis& alg) {
  const std::size_t d = alg.dim();
  Mat g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      g.at(i, j) = trace(alg.basis[i] * alg.basis[j]);
      g.at(j, i) = g.at(i, j);
    }
  return GramForm(std::move(g), FormKind::symmetric);
}

}  // namespace foursym
