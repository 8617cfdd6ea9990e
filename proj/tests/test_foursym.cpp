#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foursym/foursym.hpp"

using namespace foursym;

namespace {

FourSym make(Family f, std::size_t a, std::size_t n) {
  return FourSym(build_family(FamilySpec::make(f, a, n)));
}

Mat random_combination(std::mt19937_64& rng, const std::vector<Mat>& basis) {
  std::uniform_int_distribution<int> coef(-4, 4);
  Mat x = Mat::zero(basis.front().rows(), basis.front().cols());
  for (const Mat& b : basis) x = x + b.scaled(coef(rng));
  return x;
}

Mat upper_right_block(const Mat& x, std::size_t k) {
  Mat b(k, x.cols() - k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k; j < x.cols(); ++j) b.at(i, j - k) = x.at(i, j);
  return b;
}

Mat lower_left_block(const Mat& x, std::size_t k) {
  Mat b(x.rows() - k, k);
  for (std::size_t i = k; i < x.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i - k, j) = x.at(i, j);
  return b;
}

Mat lower_right_block(const Mat& x, std::size_t k) {
  Mat b(x.rows() - k, x.cols() - k);
  for (std::size_t i = k; i < x.rows(); ++i)
    for (std::size_t j = k; j < x.cols(); ++j) b.at(i - k, j - k) = x.at(i, j);
  return b;
}

}  // namespace

TEST_CASE("eigenspace dimensions") {
  const FourSym sl11 = make(Family::sl, 1, 1);
  CHECK(sl11.dim_gsigma() == 2);
  CHECK(sl11.dim_v() == 2);
  CHECK(sl11.dim_p() == 4);
  CHECK(sl11.dim_m() == 6);

  const FourSym u11 = make(Family::u_compact, 1, 1);
  CHECK(u11.dim_v() == 0);
  CHECK(u11.symmetric_mode());

  const FourSym so12 = make(Family::so_compact, 1, 2);
  CHECK(so12.dim_v() == 2);
  CHECK(so12.dim_p() == 4);
  CHECK(!so12.symmetric_mode());
}

TEST_CASE("eigenprojectors are idempotent and mutually annihilating") {
  std::mt19937_64 rng(23);
  const FourSym fs = make(Family::sp, 1, 1);
  for (int iter = 0; iter < 10; ++iter) {
    const Mat x = random_combination(rng, fs.algebra().basis);
    CHECK(fs.proj_gsigma(fs.proj_gsigma(x)) == fs.proj_gsigma(x));
    CHECK(fs.proj_v(fs.proj_v(x)) == fs.proj_v(x));
    CHECK(fs.proj_p(fs.proj_p(x)) == fs.proj_p(x));
    CHECK(fs.proj_v(fs.proj_gsigma(x)).is_zero());
    CHECK(fs.proj_p(fs.proj_v(x)).is_zero());
    CHECK(fs.proj_gsigma(fs.proj_p(x)).is_zero());
    CHECK(fs.proj_gsigma(x) + fs.proj_v(x) + fs.proj_p(x) == x);
    CHECK(fs.proj_m(fs.proj_m(x)) == fs.proj_m(x));
  }
}

TEST_CASE("block shapes of the eigenspaces") {
  const FourSym fs = make(Family::so_compact, 1, 2);
  const std::size_t k = fs.spec().k;
  const Mat j = j_block(fs.spec().n);
  for (const Mat& x : fs.gsigma_basis()) {
    CHECK(upper_right_block(x, k).is_zero());
    CHECK(lower_left_block(x, k).is_zero());
    CHECK(bracket(lower_right_block(x, k), j).is_zero());
  }
  for (const Mat& x : fs.v_basis()) {
    CHECK(upper_right_block(x, k).is_zero());
    CHECK(lower_left_block(x, k).is_zero());
    const Mat c = lower_right_block(x, k);
    CHECK((c * j + j * c).is_zero());
    // vanishing upper-left block
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t jj = 0; jj < k; ++jj) CHECK(x.at(i, jj) == 0);
  }
  for (const Mat& x : fs.p_basis()) {
    CHECK(lower_right_block(x, k).is_zero());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t jj = 0; jj < k; ++jj) CHECK(x.at(i, jj) == 0);
  }
}

TEST_CASE("graded bracket inclusions") {
  for (auto [f, a, n] : {std::tuple<Family, std::size_t, std::size_t>{Family::sl, 1, 1},
                         {Family::so_split, 2, 1},
                         {Family::sp, 1, 1},
                         {Family::u_split, 1, 1}}) {
    CAPTURE(family_name(f));
    const FourSym fs = make(f, a, n);
    auto in_gs_plus_v = [&](const Mat& x) {
      return fs.gsigma_solver().contains(fs.proj_gsigma(x)) &&
             fs.v_solver().contains(fs.proj_v(x)) && fs.proj_p(x).is_zero();
    };
    for (const Mat& g1 : fs.gsigma_basis()) {
      for (const Mat& g2 : fs.gsigma_basis())
        CHECK(fs.gsigma_solver().contains(bracket(g1, g2)));
      for (const Mat& v : fs.v_basis()) CHECK(fs.v_solver().contains(bracket(g1, v)));
      for (const Mat& p : fs.p_basis()) CHECK(fs.p_solver().contains(bracket(g1, p)));
    }
    for (const Mat& v1 : fs.v_basis())
      for (const Mat& v2 : fs.v_basis())
        CHECK(fs.gsigma_solver().contains(bracket(v1, v2)));
    for (const Mat& v : fs.v_basis())
      for (const Mat& p : fs.p_basis()) CHECK(fs.p_solver().contains(bracket(v, p)));
    for (const Mat& p1 : fs.p_basis())
      for (const Mat& p2 : fs.p_basis()) CHECK(in_gs_plus_v(bracket(p1, p2)));
  }
}

TEST_CASE("twin structures square to minus the identity") {
  for (auto [f, a, n] : {std::tuple<Family, std::size_t, std::size_t>{Family::sl, 1, 1},
                         {Family::so_compact, 1, 2},
                         {Family::u_compact, 1, 1},
                         {Family::sp, 1, 1},
                         {Family::gl, 1, 1}}) {
    CAPTURE(family_name(f));
    const FourSym fs = make(f, a, n);
    const Mat jp = j_matrix(fs, Sign::plus);
    const Mat jm = j_matrix(fs, Sign::minus);
    const Mat neg_id = -Mat::identity(fs.dim_m());
    CHECK(jp * jp == neg_id);
    CHECK(jm * jm == neg_id);
    if (fs.symmetric_mode())
      CHECK(jp == jm);
    else
      CHECK(jp != jm);
  }
}

TEST_CASE("j acts as sigma on p and as multiplication by J on v") {
  const FourSym fs = make(Family::so_compact, 1, 2);
  const std::size_t k = fs.spec().k;
  const Mat j = j_block(fs.spec().n);
  for (const Mat& p : fs.p_basis()) {
    CHECK(fs.j_apply(Sign::plus, p) == fs.sigma(p));
    CHECK(fs.j_apply(Sign::minus, p) == fs.sigma(p));
  }
  for (const Mat& v : fs.v_basis()) {
    const Mat c = lower_right_block(v, k);
    CHECK(lower_right_block(fs.j_apply(Sign::plus, v), k) == j * c);
    CHECK(lower_right_block(fs.j_apply(Sign::minus, v), k) == -(j * c));
  }
}

TEST_CASE("omega: antisymmetry, sigma invariance and block structure") {
  std::mt19937_64 rng(29);
  const FourSym fs = make(Family::sl, 1, 2);
  const GramForm omega = omega_gram(fs);  // ctor verifies antisymmetry
  CHECK(omega.kind == FormKind::antisymmetric);
  for (int iter = 0; iter < 10; ++iter) {
    const Mat x = random_combination(rng, fs.m_basis());
    const Mat y = random_combination(rng, fs.m_basis());
    CHECK(fs.omega(fs.sigma(x), fs.sigma(y)) == fs.omega(x, y));
  }
  // v and p are omega-orthogonal
  for (const Mat& v : fs.v_basis())
    for (const Mat& p : fs.p_basis()) CHECK(fs.omega(v, p) == 0);
}

TEST_CASE("omega restrictions match their closed forms") {
  const FourSym fs = make(Family::sl, 1, 2);
  const std::size_t k = fs.spec().k;
  const Mat j = j_block(fs.spec().n);
  for (const Mat& v1 : fs.v_basis())
    for (const Mat& v2 : fs.v_basis()) {
      const Mat c1 = lower_right_block(v1, k), c2 = lower_right_block(v2, k);
      CHECK(fs.omega(v1, v2) == 2 * trace(j * c1 * c2));
    }
  for (const Mat& y1 : fs.p_basis())
    for (const Mat& y2 : fs.p_basis()) {
      const Mat b1 = upper_right_block(y1, k), bp1 = lower_left_block(y1, k);
      const Mat b2 = upper_right_block(y2, k), bp2 = lower_left_block(y2, k);
      CHECK(fs.omega(y1, y2) == trace(j * (bp1 * b2 - bp2 * b1)));
    }
}

TEST_CASE("metrics match their closed forms and are symmetric") {
  const FourSym fs = make(Family::sl, 1, 1);
  const std::size_t k = fs.spec().k;
  for (Sign s : {Sign::plus, Sign::minus}) {
    const GramForm g = metric_gram(fs, s);  // ctor verifies symmetry
    CHECK(g.kind == FormKind::symmetric);
  }
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 10; ++iter) {
    const Mat x1 = random_combination(rng, fs.m_basis());
    const Mat x2 = random_combination(rng, fs.m_basis());
    const Mat b1 = upper_right_block(x1, k), bp1 = lower_left_block(x1, k);
    const Mat b2 = upper_right_block(x2, k), bp2 = lower_left_block(x2, k);
    const Mat c1 = lower_right_block(fs.proj_v(x1), k);
    const Mat c2 = lower_right_block(fs.proj_v(x2), k);
    const Rat mixed = trace(bp1 * b2 + bp2 * b1);
    CHECK(fs.metric(Sign::plus, x1, x2) == mixed + 2 * trace(c1 * c2));
    CHECK(fs.metric(Sign::minus, x1, x2) == mixed - 2 * trace(c1 * c2));
  }
}

TEST_CASE("nondegeneracy of omega is equivalent to nondegeneracy of the blocks") {
  for (auto [f, a, n] : {std::tuple<Family, std::size_t, std::size_t>{Family::sl, 1, 1},
                         {Family::so_compact, 1, 2},
                         {Family::so_split, 2, 2},
                         {Family::u_compact, 1, 2},
                         {Family::sp, 1, 1},
                         {Family::gl, 1, 1}}) {
    CAPTURE(family_name(f));
    const NondegeneracyReport rep = nondegeneracy_report(make(f, a, n));
    CHECK(rep.omega_nondegenerate() == rep.blocks_nondegenerate());
    CHECK(rep.omega_nondegenerate());
  }
}

TEST_CASE("g+ is negative definite for so-compact(1,2)") {
  const FourSym fs = make(Family::so_compact, 1, 2);
  CHECK(fs.dim_m() == 6);
  CHECK(metric_gram(fs, Sign::plus).signature() == Signature{0, 6, 0});
}

TEST_CASE("compatibility of omega with the twin structures") {
  const FourSym fs = make(Family::so_split, 1, 2);
  CHECK(!compatibility_witness(fs, j_matrix(fs, Sign::plus)).has_value());
  CHECK(!compatibility_witness(fs, j_matrix(fs, Sign::minus)).has_value());
  // negative control: a non-symplectic rescaling
  Mat bad = Mat::identity(fs.dim_m());
  bad.at(0, 0) = 2;
  CHECK(compatibility_witness(fs, bad).has_value());
}

TEST_CASE("omega is closed") {
  for (auto [f, a, n] : {std::tuple<Family, std::size_t, std::size_t>{Family::sl, 1, 1},
                         {Family::so_compact, 1, 2},
                         {Family::sp, 1, 1},
                         {Family::u_split, 1, 1}}) {
    CAPTURE(family_name(f));
    const FourSym fs = make(f, a, n);
    CHECK(!closedness_witness(fs).has_value());
  }
  // negative control: one perturbed antisymmetric entry pair
  const FourSym fs = make(Family::sl, 1, 1);
  Mat perturbed = omega_gram(fs).matrix;
  perturbed.at(0, 1) += 1;
  perturbed.at(1, 0) -= 1;
  CHECK(closedness_witness(fs, perturbed).has_value());
}
