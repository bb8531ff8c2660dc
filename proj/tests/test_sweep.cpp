#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stosc/assignment.hpp"
#include "stosc/sweep.hpp"

using namespace stosc;
using cd = std::complex<double>;

namespace {

// [[1, i*lambda], [i*lambda, -1]]: eigenvalues +-sqrt(1 - lambda^2),
// exceptional point exactly at lambda = 1.
MatrixBuilder synthetic_family() {
  return [](double lambda) {
    Eigen::MatrixXcd m(2, 2);
    m << cd(1, 0), cd(0, lambda), cd(0, lambda), cd(-1, 0);
    return m;
  };
}

}  // namespace

TEST_CASE("max_assignment picks the global optimum") {
  Eigen::MatrixXd s(2, 2);
  // greedy row-by-row would take (0,0)=0.9 then (1,1)=0.1 (total 1.0);
  // the optimum is (0,1)+(1,0) = 0.8 + 0.85
  s << 0.9, 0.8, 0.85, 0.1;
  const auto a = max_assignment(s);
  CHECK(a[0] == 1);
  CHECK(a[1] == 0);

  Eigen::MatrixXd r(2, 4);
  r << 0.1, 0.2, 0.9, 0.3, 0.1, 0.2, 0.8, 0.3;
  const auto b = max_assignment(r);
  CHECK(b[0] == 2);
  CHECK(b[1] == 3);
}

TEST_CASE("max_assignment matches brute force on random instances") {
  std::srand(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Random(4, 5).cwiseAbs();
    const auto a = max_assignment(s);
    double got = 0.0;
    for (int i = 0; i < 4; ++i) got += s(i, a[i]);
    // brute force over all injections 4 -> 5
    double best = 0.0;
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::sort(perm.begin(), perm.end());
    do {
      double v = 0.0;
      for (int i = 0; i < 4; ++i) v += s(i, perm[i]);
      best = std::max(best, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(got == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("SweepConfig validation") {
  SweepConfig c;
  c.lambda_start = 0.0;
  c.lambda_end = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.lambda_end = 1.0;
  c.steps = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.steps = 11;
  c.tracked_levels = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("synthetic 2x2 family: EP located at lambda = 1") {
  const MatrixBuilder build = synthetic_family();
  const ExceptionalPoint ep =
      find_exceptional_point(build, cd(0, 0), 0.5, 1.5, 1e-10, 1e-8);
  CHECK(ep.lambda_low <= 1.0);
  CHECK(ep.lambda_high >= 1.0 - 1e-10);
  CHECK(ep.lambda_high - ep.lambda_low <= 1e-10);
  // bracket halves every iteration
  for (size_t i = 1; i < ep.bracket_widths.size(); ++i)
    CHECK(ep.bracket_widths[i] == doctest::Approx(ep.bracket_widths[i - 1] / 2.0));
}

TEST_CASE("invalid bracket rejected") {
  const MatrixBuilder build = synthetic_family();
  CHECK_THROWS_AS(find_exceptional_point(build, cd(0, 0), 0.1, 0.5, 1e-8, 1e-8),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_exceptional_point(build, cd(0, 0), 1.2, 1.5, 1e-8, 1e-8),
                  std::invalid_argument);
}

TEST_CASE("transition counting on the synthetic family") {
  const MatrixBuilder build = synthetic_family();
  SweepConfig cfg;
  cfg.lambda_start = 0.0;
  cfg.lambda_end = 2.0;
  cfg.steps = 41;
  cfg.tracked_levels = 2;

  SweepContext ctx;
  ctx.build = build;
  ctx.ancestry = [](const Eigen::VectorXcd&) {
    return Ancestry{{0, 0}, {Group::Ci, "Ag"}, {Group::D2h, "Ag"}};
  };
  ctx.ci_purity = [](const Eigen::VectorXcd&) { return 1.0; };

  const auto branches = run_sweep(cfg, ctx);
  REQUIRE(branches.size() == 2);
  const TransitionCount tc =
      count_phase_transitions(branches[0], branches[1], build, 1e-8, 1e-8);
  CHECK(tc.count == 1);
  REQUIRE(tc.transitions.size() == 1);
  CHECK(tc.transitions[0].lambda_low <= 1.0 + 1e-8);
  CHECK(tc.transitions[0].lambda_high >= 1.0 - 1e-8);

  const auto pairs = coalescing_pairs(branches, 1e-8);
  REQUIRE(pairs.size() == 1);
  CHECK((pairs[0] == std::pair<int, int>(0, 1)));
}

TEST_CASE("Hermitian family has zero transitions") {
  // lambda multiplying W Hermitianly keeps everything real
  const MatrixBuilder build = [](double lambda) {
    Eigen::MatrixXcd m(2, 2);
    m << cd(1, 0), cd(lambda, 0), cd(lambda, 0), cd(-1, 0);
    return m;
  };
  SweepConfig cfg;
  cfg.lambda_start = 0.0;
  cfg.lambda_end = 2.0;
  cfg.steps = 21;
  cfg.tracked_levels = 2;
  SweepContext ctx;
  ctx.build = build;
  ctx.ancestry = [](const Eigen::VectorXcd&) {
    return Ancestry{{0, 0}, {Group::Ci, "Ag"}, {Group::D2h, "Ag"}};
  };
  ctx.ci_purity = [](const Eigen::VectorXcd&) { return 1.0; };
  const auto branches = run_sweep(cfg, ctx);
  const TransitionCount tc =
      count_phase_transitions(branches[0], branches[1], build, 1e-8, 1e-8);
  CHECK(tc.count == 0);
  CHECK(coalescing_pairs(branches, 1e-8).empty());
}

TEST_CASE("sweep of the quartic model from lambda = 0") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  p.perturbation = Perturbation::XY;
  const ProductBasis b = ProductBasis::tuned(16, 16, p.alpha_x, p.alpha_y);
  const SweepContext ctx = make_context(p, Method::BASIS_DM, b, Grid2D{});

  SweepConfig cfg;
  cfg.lambda_start = 0.0;
  cfg.lambda_end = 0.1;
  cfg.steps = 5;
  cfg.tracked_levels = 4;
  const auto branches = run_sweep(cfg, ctx);
  REQUIRE(branches.size() == 4);

  // lambda=0 points match the reference energies and carry correct ancestry
  CHECK(branches[0].points[0].energy.real() ==
        doctest::Approx(1.4177754838502863).epsilon(1e-5));
  CHECK((branches[0].parent == BasisIndex{0, 0}));
  CHECK(branches[0].ancestry_ci.label == "Ag");
  CHECK((branches[1].parent == BasisIndex{1, 0}));
  CHECK(branches[1].ancestry_d2h.label == "Bu");
  CHECK((branches[2].parent == BasisIndex{0, 1}));

  for (const auto& br : branches) {
    // overlap continuity away from EPs
    for (size_t i = 1; i < br.points.size(); ++i)
      CHECK(br.points[i].overlap_with_prev >= 0.9);
    // XY keeps Ci purity
    for (const auto& pt : br.points) CHECK(pt.ci_purity > 1.0 - 1e-10);
  }
}

TEST_CASE("real-part continuity along branches") {
  ModelParams p;
  p.alpha_y = std::sqrt(2.0);
  p.perturbation = Perturbation::X2Y_PLUS_XY2;
  const ProductBasis b = ProductBasis::tuned(14, 14, p.alpha_x, p.alpha_y);
  const SweepContext ctx = make_context(p, Method::BASIS_DM, b, Grid2D{});
  SweepConfig cfg;
  cfg.lambda_start = 0.0;
  cfg.lambda_end = 1.0;
  cfg.steps = 21;
  cfg.tracked_levels = 6;
  const auto branches = run_sweep(cfg, ctx);
  for (const auto& br : branches) {
    double cmax = 0.0;
    const double dl = br.points[1].lambda - br.points[0].lambda;
    for (size_t i = 1; i < br.points.size(); ++i)
      cmax = std::max(cmax, std::abs(br.points[i].energy.real() -
                                     br.points[i - 1].energy.real()) / dl);
    for (size_t i = 1; i < br.points.size(); ++i)
      CHECK(std::abs(br.points[i].energy.real() - br.points[i - 1].energy.real()) <=
            10.0 * std::max(cmax, 1e-6) * dl);
  }
}
