#include "foursym/foursym.hpp"

namespace foursym {

namespace {

/// Maximal independent subset, kept in input order.
std::vector<Mat> collect_independent(const std::vector<Mat>& cands) {
  std::vector<Mat> out;
  for (const Mat& c : cands) {
    if (c.is_zero()) continue;
    std::vector<Mat> probe = out;
    probe.push_back(c);
    if (span_dim(probe) > out.size()) out.push_back(c);
  }
  return out;
}

}  // namespace

FourSym::FourSym(AlgebraBasis alg)
    : alg_(std::move(alg)),
      r_(r_matrix(alg_.spec.k, alg_.spec.n)),
      gsigma_solver_({}),
      v_solver_({}),
      p_solver_({}),
      m_solver_({}) {
  const std::size_t m = alg_.ambient();
  rinv_ = Mat::identity(m);
  for (std::size_t i = alg_.spec.k; i < m; ++i)
    for (std::size_t j = alg_.spec.k; j < m; ++j) rinv_.at(i, j) = -r_.at(i, j);
  if (r_ * rinv_ != Mat::identity(m)) throw Error("FourSym: bad R inverse");

  qrow_.resize(m);
  srow_.resize(m);
  qcol_.resize(m);
  scol_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t hits = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (r_.at(a, c) == 0) continue;
      if (r_.at(a, c) != 1 && r_.at(a, c) != -1)
        throw Error("FourSym: R is not a signed permutation");
      qrow_[a] = c;
      srow_[a] = r_.at(a, c) == 1 ? 1 : -1;
      ++hits;
    }
    if (hits != 1) throw Error("FourSym: R is not a signed permutation");
  }
  for (std::size_t b = 0; b < m; ++b) {
    std::size_t hits = 0;
    for (std::size_t d = 0; d < m; ++d) {
      if (rinv_.at(d, b) == 0) continue;
      qcol_[b] = d;
      scol_[b] = rinv_.at(d, b) == 1 ? 1 : -1;
      ++hits;
    }
    if (hits != 1) throw Error("FourSym: R inverse is not a signed permutation");
  }

  std::vector<Mat> gs, vs, ps;
  for (const Mat& b : alg_.basis) {
    if (!alg_.contains(sigma(b)))
      throw Error("FourSym: sigma does not preserve the algebra");
    gs.push_back(proj_gsigma(b));
    vs.push_back(proj_v(b));
    ps.push_back(proj_p(b));
  }
  gsigma_ = collect_independent(gs);
  v_ = collect_independent(vs);
  p_ = collect_independent(ps);
  m_ = v_;
  m_.insert(m_.end(), p_.begin(), p_.end());

  gsigma_solver_ = CoordSolver(gsigma_);
  v_solver_ = CoordSolver(v_);
  p_solver_ = CoordSolver(p_);
  m_solver_ = CoordSolver(m_);

  verify_splitting();
}

Mat FourSym::sigma(const Mat& x) const {
  const std::size_t m = r_.rows();
  if (x.rows() != m || x.cols() != m) throw Error("sigma: wrong matrix size");
  Mat y(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Rat& e = x.at(qrow_[a], qcol_[b]);
      y.at(a, b) = srow_[a] * scol_[b] < 0 ? Rat(-e) : e;
    }
  return y;
}

Mat FourSym::proj_gsigma(const Mat& x) const {
  const Mat s1 = sigma(x), s2 = sigma(s1), s3 = sigma(s2);
  return (x + s1 + s2 + s3).scaled(Rat(1, 4));
}

Mat FourSym::proj_v(const Mat& x) const {
  const Mat s1 = sigma(x), s2 = sigma(s1), s3 = sigma(s2);
  return (x - s1 + s2 - s3).scaled(Rat(1, 4));
}

Mat FourSym::proj_p(const Mat& x) const {
  return (x - sigma(sigma(x))).scaled(Rat(1, 2));
}

void FourSym::verify_splitting() const {
  if (gsigma_.size() + v_.size() + p_.size() != alg_.dim())
    throw Error("FourSym: eigenspace dimensions do not sum to dim g");
  std::vector<Mat> all = gsigma_;
  all.insert(all.end(), m_.begin(), m_.end());
  if (span_dim(all) != alg_.dim())
    throw Error("FourSym: eigenspaces do not form a direct sum");
  for (const Mat& x : gsigma_)
    if (sigma(x) != x) throw Error("FourSym: sigma not the identity on g^sigma");
  for (const Mat& x : v_)
    if (sigma(x) != -x) throw Error("FourSym: sigma not -id on g^sigma_{-1}");
  for (const Mat& x : p_)
    if (sigma(sigma(x)) != -x) throw Error("FourSym: sigma^2 not -id on p");
  for (const Mat& b : alg_.basis) {
    if (sigma(b) != r_ * b * rinv_)
      throw Error("FourSym: permutation form of sigma disagrees with R b R^{-1}");
    if (sigma(sigma(sigma(sigma(b)))) != b) throw Error("FourSym: sigma^4 != id");
    if (proj_gsigma(b) + proj_v(b) + proj_p(b) != b)
      throw Error("FourSym: eigenprojectors do not sum to the identity");
  }
  for (std::size_t i = 0; i < alg_.dim(); ++i)
    for (std::size_t j = i + 1; j < alg_.dim(); ++j) {
      const Mat lhs = sigma(bracket(alg_.basis[i], alg_.basis[j]));
      if (lhs != bracket(sigma(alg_.basis[i]), sigma(alg_.basis[j])))
        throw Error("FourSym: sigma is not an automorphism");
    }
  if (sigma(alg_.rho) != alg_.rho) throw Error("FourSym: rho not fixed by sigma");
}

Mat FourSym::j_apply(Sign s, const Mat& x) const {
  const Mat on_p = sigma(proj_p(x));
  Mat on_v = bracket(alg_.rho, proj_v(x)).scaled(Rat(1, 2));
  if (s == Sign::minus) on_v = -on_v;
  return on_p + on_v;
}

Rat FourSym::omega(const Mat& x, const Mat& y) const {
  return trace(alg_.rho * bracket(x, y));
}

Rat FourSym::metric(Sign s, const Mat& x, const Mat& y) const {
  return omega(x, j_apply(s, y));
}

Mat j_matrix(const FourSym& fs, Sign s) {
  const std::size_t d = fs.dim_m();
  Mat j(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto col = fs.m_solver().coords_or_throw(fs.j_apply(s, fs.m_basis()[i]));
    for (std::size_t r = 0; r < d; ++r) j.at(r, i) = col[r];
  }
  return j;
}

namespace {

Mat omega_matrix_on(const FourSym& fs, const std::vector<Mat>& basis) {
  const std::size_t d = basis.size();
  Mat g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      g.at(i, j) = fs.omega(basis[i], basis[j]);
      g.at(j, i) = -g.at(i, j);
    }
  return g;
}

}  // namespace

GramForm omega_gram(const FourSym& fs) {
  return GramForm(omega_matrix_on(fs, fs.m_basis()), FormKind::antisymmetric);
}

GramForm omega_v_gram(const FourSym& fs) {
  return GramForm(omega_matrix_on(fs, fs.v_basis()), FormKind::antisymmetric);
}

GramForm omega_p_gram(const FourSym& fs) {
  return GramForm(omega_matrix_on(fs, fs.p_basis()), FormKind::antisymmetric);
}

GramForm metric_gram(const FourSym& fs, Sign s) {
  const std::size_t d = fs.dim_m();
  Mat g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      g.at(i, j) = fs.metric(s, fs.m_basis()[i], fs.m_basis()[j]);
  return GramForm(std::move(g), FormKind::symmetric);
}

GramForm trace_form_gram(const std::vector<Mat>& basis) {
  const std::size_t d = basis.size();
  Mat g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      g.at(i, j) = trace(basis[i] * basis[j]);
      g.at(j, i) = g.at(i, j);
    }
  return GramForm(std::move(g), FormKind::symmetric);
}

NondegeneracyReport nondegeneracy_report(const FourSym& fs) {
  NondegeneracyReport rep;
  rep.dim_m = fs.dim_m();
  rep.dim_v = fs.dim_v();
  rep.dim_p = fs.dim_p();
  rep.rank_omega = rank(omega_gram(fs).matrix);
  rep.rank_trace_p = rank(trace_form_gram(fs.p_basis()).matrix);
  rep.rank_trace_v = rank(trace_form_gram(fs.v_basis()).matrix);
  return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> compatibility_witness(
    const FourSym& fs, const Mat& j) {
  const Mat omega = omega_gram(fs).matrix;
  const Mat pulled = j.transposed() * omega * j;
  for (std::size_t a = 0; a < omega.rows(); ++a)
    for (std::size_t b = 0; b < omega.cols(); ++b)
      if (pulled.at(a, b) != omega.at(a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> closedness_witness(
    const FourSym& fs, const std::optional<Mat>& gram) {
  const std::size_t d = fs.dim_m();
  const Mat omega = gram ? *gram : omega_gram(fs).matrix;
  if (omega.rows() != d || omega.cols() != d)
    throw Error("closedness_witness: Gram matrix has the wrong size");
  // coordinates of proj_m [e_i, e_j] for i < j
  std::vector<std::vector<std::vector<Rat>>> pb(d);
  for (std::size_t i = 0; i < d; ++i) {
    pb[i].resize(d);
    for (std::size_t j = i + 1; j < d; ++j)
      pb[i][j] = fs.m_solver().coords_or_throw(
          fs.proj_m(bracket(fs.m_basis()[i], fs.m_basis()[j])));
  }
  auto pair_term = [&](std::size_t i, std::size_t j, std::size_t k) {
    // omega(proj [e_i, e_j], e_k), with antisymmetry in (i, j)
    const bool flip = i > j;
    const auto& c = flip ? pb[j][i] : pb[i][j];
    Rat s = 0;
    for (std::size_t l = 0; l < d; ++l)
      if (c[l] != 0) s += c[l] * omega.at(l, k);
    return flip ? Rat(-s) : s;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Rat total = pair_term(i, j, k) + pair_term(j, k, i) + pair_term(k, i, j);
        if (total != 0) return std::make_tuple(i, j, k);
      }
  return std::nullopt;
}

}  // namespace foursym
