#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stosc/eigensolver.hpp"
#include "stosc/symmetry.hpp"

using namespace stosc;
using cd = std::complex<double>;

namespace {

// (n_x, n_y, Ci, D2h) for the 23 reference rows.
struct RefRow {
  int nx, ny;
  const char* ci;
  const char* d2h;
};
const RefRow kRefRows[] = {
    {0, 0, "Ag", "Ag"}, {1, 0, "Au", "Bu"}, {0, 1, "Au", "Au"},
    {1, 1, "Ag", "Bg"}, {2, 0, "Ag", "Ag"}, {0, 2, "Ag", "Ag"},
    {2, 1, "Au", "Au"}, {1, 2, "Au", "Bu"}, {3, 0, "Au", "Bu"},
    {0, 3, "Au", "Au"}, {2, 2, "Ag", "Ag"}, {3, 1, "Ag", "Bg"},
    {1, 3, "Ag", "Bg"}, {4, 0, "Ag", "Ag"}, {0, 4, "Ag", "Ag"},
    {3, 2, "Au", "Bu"}, {2, 3, "Au", "Au"}, {4, 1, "Au", "Au"},
    {1, 4, "Au", "Bu"}, {5, 0, "Au", "Bu"}, {4, 2, "Ag", "Ag"},
    {3, 3, "Ag", "Bg"}, {0, 5, "Au", "Au"},
};

}  // namespace

TEST_CASE("basis_irrep reproduces both reference label columns") {
  for (const RefRow& r : kRefRows) {
    CHECK(basis_irrep({r.nx, r.ny}, Group::Ci).label == r.ci);
    CHECK(basis_irrep({r.nx, r.ny}, Group::D2h).label == r.d2h);
  }
  CHECK_THROWS_AS(basis_irrep({0, 0}, Group::C4v), std::invalid_argument);
}

TEST_CASE("state_irrep on pure basis vectors and H0 eigenvectors") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  const ProductBasis b = ProductBasis::tuned(10, 10, p.alpha_x, p.alpha_y);

  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(b.dim());
  e(b.index({1, 2})) = 1.0;
  const StateLabel sl = state_irrep(e, b, Group::D2h, 0.99);
  CHECK(sl.label.label == "Bu");
  CHECK(sl.purity == doctest::Approx(1.0));
  CHECK(sl.definite);

  const Spectrum s = eig_symmetric(build_h0(p, b));
  for (int i = 0; i < 10; ++i) {
    const StateLabel l = state_irrep(s.eigenvectors.col(i), b, Group::D2h, 0.99);
    CHECK(l.purity > 1.0 - 1e-10);
  }

  CHECK_THROWS_AS(state_irrep(e, b, Group::D2h, 0.3), std::invalid_argument);
}

TEST_CASE("XY perturbation: Ci purity survives, D2h mixes within coupled sets") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  p.perturbation = Perturbation::XY;
  p.lambda = 0.5;
  const ProductBasis b = ProductBasis::tuned(16, 16, p.alpha_x, p.alpha_y);
  const Spectrum s = eig_general(build_h(p, b));
  for (int i = 0; i < 8; ++i) {
    const StateLabel ci = state_irrep(s.eigenvectors.col(i), b, Group::Ci, 0.99);
    CHECK(ci.purity > 1.0 - 1e-10);
    // D2h classes present inside one Ci-pure state: {Ag, Bg} or {Au, Bu}.
    const StateLabel d2h = state_irrep(s.eigenvectors.col(i), b, Group::D2h, 0.99);
    const double ag = d2h.weights.count("Ag") ? d2h.weights.at("Ag") : 0.0;
    const double bg = d2h.weights.count("Bg") ? d2h.weights.at("Bg") : 0.0;
    const double au = d2h.weights.count("Au") ? d2h.weights.at("Au") : 0.0;
    const double bu = d2h.weights.count("Bu") ? d2h.weights.at("Bu") : 0.0;
    if (ci.label.label == "Ag") {
      CHECK(ag + bg > 1.0 - 1e-10);
    } else {
      CHECK(au + bu > 1.0 - 1e-10);
    }
  }
}

TEST_CASE("lambda>0 with fully broken symmetry gives mixed Ci states") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  p.perturbation = Perturbation::X2Y_PLUS_XY2;
  p.lambda = 0.5;
  const ProductBasis b = ProductBasis::tuned(14, 14, p.alpha_x, p.alpha_y);
  const Spectrum s = eig_general(build_h(p, b));
  const StateLabel ci = state_irrep(s.eigenvectors.col(0), b, Group::Ci, 0.999999);
  CHECK(ci.purity < 1.0 - 1e-6);
  CHECK_FALSE(ci.definite);
}

TEST_CASE("c4v_degenerate_pairs") {
  ModelParams p;

  SUBCASE("square case finds the E doublets") {
    p.alpha_y = p.alpha_x = 1.0;
    const ProductBasis b = ProductBasis::tuned(14, 14, 1.0, 1.0);
    const Spectrum s = eig_symmetric(build_h0(p, b));
    const auto pairs = c4v_degenerate_pairs(s, b, 1e-8);
    REQUIRE(pairs.size() >= 2);
    // lowest doublet is levels 1,2 (parents (1,0)/(0,1))
    CHECK(pairs[0].first == 1);
    CHECK(pairs[0].second == 2);
    // pairs are closed under coordinate swap of parents: check parity mix
    for (const auto& [i, j] : pairs) {
      CHECK(std::abs(s.eigenvalues[i] - s.eigenvalues[j]) < 1e-8);
    }
  }

  SUBCASE("anisotropic case finds none") {
    p.alpha_y = std::sqrt(2.0);
    const ProductBasis b = ProductBasis::tuned(14, 14, p.alpha_x, p.alpha_y);
    const Spectrum s = eig_symmetric(build_h0(p, b));
    CHECK(c4v_degenerate_pairs(s, b, 1e-6).empty());
  }
}

TEST_CASE("character weights: doublet states become B1/B2 under residual C2v") {
  ModelParams p;
  p.alpha_y = p.alpha_x = 1.0;
  p.perturbation = Perturbation::XY;
  p.lambda = 0.01;
  const ProductBasis b = ProductBasis::tuned(16, 16, 1.0, 1.0);
  const Spectrum s = eig_general(build_h(p, b));

  // levels 1,2 are the complex-conjugate pair born from the lowest doublet
  CHECK(std::abs(s.eigenvalues[1].imag()) > 1e-6);
  const auto w1 = character_weights(s.eigenvectors.col(1), b, Group::C2v);
  const auto w2 = character_weights(s.eigenvectors.col(2), b, Group::C2v);
  CHECK(w1.at("B1") + w1.at("B2") > 1.0 - 1e-8);
  CHECK(w2.at("B1") + w2.at("B2") > 1.0 - 1e-8);
  CHECK(std::abs(w1.at("B1") - w2.at("B2")) < 1e-8);

  // under C4v the same states are pure E
  const auto c1 = character_weights(s.eigenvectors.col(1), b, Group::C4v);
  CHECK(c1.at("E") > 1.0 - 1e-8);

  // ground state is totally symmetric
  const auto g = character_weights(s.eigenvectors.col(0), b, Group::C2v);
  CHECK(g.at("A1") > 1.0 - 1e-6);
}

TEST_CASE("character weights require a square basis") {
  const ProductBasis b{{4, 1.0}, {5, 1.0}};
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(b.dim());
  v(0) = 1.0;
  CHECK_THROWS_AS(character_weights(v, b, Group::C4v), std::invalid_argument);
}
