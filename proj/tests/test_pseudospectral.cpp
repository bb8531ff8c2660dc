#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stosc/eigensolver.hpp"
#include "stosc/pseudospectral.hpp"

using namespace stosc;
using cd = std::complex<double>;

namespace {
constexpr double kTable00 = 1.4177754838502863327;
}

TEST_CASE("second derivative matrix closed form") {
  // h = 1: N+1 = 2L with L = (N+1)/2
  Grid2D g{5.0, 9};  // h = 1
  CHECK(g.spacing() == doctest::Approx(1.0));
  const Eigen::MatrixXd d = second_derivative_matrix(g);
  CHECK(d(3, 3) == doctest::Approx(-std::numbers::pi * std::numbers::pi / 3.0));
  CHECK(d(3, 4) == doctest::Approx(2.0));
  CHECK(d(2, 4) == doctest::Approx(-0.5));

  Grid2D gh{2.5, 9};  // h = 0.5
  const Eigen::MatrixXd dh = second_derivative_matrix(gh);
  CHECK(dh(1, 3) == doctest::Approx(-2.0));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(second_derivative_matrix(Grid2D{-1.0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(second_derivative_matrix(Grid2D{1.0, 2}), std::invalid_argument);
  CHECK_THROWS_AS((Grid2D{6.0, 600}.validate()), std::runtime_error);
}

TEST_CASE("grid Hamiltonian structure") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  p.perturbation = Perturbation::XY;

  SUBCASE("lambda=0 is real symmetric") {
    p.lambda = 0.0;
    const Grid2D g{4.0, 11};
    const Eigen::MatrixXcd h = build_h_grid(p, g);
    CHECK(h.imag().cwiseAbs().maxCoeff() == 0.0);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("diagonal potential entry at a node") {
    p.lambda = 0.5;
    const Grid2D g{4.0, 7};  // h = 1: nodes -3..3, node (x=1,y=1) -> ix=iy=4
    const Eigen::MatrixXcd h = build_h_grid(p, g);
    const Eigen::MatrixXd k = -0.5 * 2.0 *
                              second_derivative_matrix(g).diagonal()(0) *
                              Eigen::MatrixXd::Identity(1, 1);
    const cd diag = h(4 * 7 + 4, 4 * 7 + 4) - k(0, 0);
    CHECK(std::abs(diag - cd(1.0 + std::sqrt(2.0), 0.5)) < 1e-12);
  }

  SUBCASE("complex symmetric for lambda > 0") {
    p.lambda = 0.3;
    const Grid2D g{4.0, 9};
    const Eigen::MatrixXcd h = build_h_grid(p, g);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("grid-parity commutation is exact") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  const Grid2D g{5.0, 12};
  const Eigen::MatrixXd h0 = build_h0_grid(p, g);
  const int n = g.points_per_axis;
  // reflection x -> -x: node ix -> n-1-ix
  Eigen::MatrixXd px = Eigen::MatrixXd::Zero(n * n, n * n);
  Eigen::MatrixXd pfull = Eigen::MatrixXd::Zero(n * n, n * n);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      px(iy * n + (n - 1 - ix), iy * n + ix) = 1.0;
      pfull((n - 1 - iy) * n + (n - 1 - ix), iy * n + ix) = 1.0;
    }
  // the node coordinates -L + (i+1)h are not exactly reflection-symmetric in
  // floating point, so the commutator vanishes only to rounding
  CHECK((px * h0 * px - h0).cwiseAbs().maxCoeff() < 1e-11);
  CHECK((pfull * h0 * pfull - h0).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("convergence toward the reference ground energy as N grows") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  double prev_err = 1e9;
  for (int n : {20, 30, 40}) {
    const Grid2D g{6.0, n};
    const Spectrum s = eig_symmetric(build_h0_grid(p, g));
    const double err = std::abs(s.eigenvalues[0].real() - kTable00);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-5);
}

TEST_CASE("spectrum conjugate closure on the grid") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  p.perturbation = Perturbation::X2Y_PLUS_XY2;
  p.lambda = 0.4;
  const Grid2D g{5.0, 14};
  const Spectrum s = eig_general(build_h_grid(p, g));
  // greedy nearest matching: sorting would misalign conjugate partners whose
  // real parts agree only to rounding
  std::vector<bool> used(s.eigenvalues.size(), false);
  double dist = 0.0;
  for (auto e : s.eigenvalues) {
    double best = 1e300;
    int bj = -1;
    for (size_t j = 0; j < s.eigenvalues.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(std::conj(e) - s.eigenvalues[j]);
      if (d < best) {
        best = d;
        bj = int(j);
      }
    }
    used[bj] = true;
    dist = std::max(dist, best);
  }
  CHECK(dist < 1e-8 * build_h_grid(p, g).norm());
}

TEST_CASE("cross_validate") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  p.perturbation = Perturbation::XY;

  SUBCASE("k=0 rejected") {
    CHECK_THROWS_AS(
        cross_validate(p, ProductBasis::tuned(10, 10, p.alpha_x, p.alpha_y),
                       Grid2D{6.0, 20}, 0, 1e-8),
        std::invalid_argument);
  }

  SUBCASE("under-resolved grid disagrees") {
    p.lambda = 0.0;
    CHECK_THROWS_AS(
        cross_validate(p, ProductBasis::tuned(20, 20, p.alpha_x, p.alpha_y),
                       Grid2D{6.0, 5}, 4, 1e-8),
        std::runtime_error);
  }

  SUBCASE("converged methods agree at lambda = 0 and 0.1") {
    const ProductBasis b = ProductBasis::tuned(30, 30, p.alpha_x, p.alpha_y);
    const Grid2D g{6.0, 44};
    for (double lambda : {0.0, 0.1}) {
      p.lambda = lambda;
      const CrossValidationReport rep = cross_validate(p, b, g, 8, 1e-6);
      CHECK(rep.pass);
      CHECK(rep.max_distance < 1e-6);
    }
  }
}
