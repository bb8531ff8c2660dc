#include "stosc/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "stosc/assignment.hpp"
#include "stosc/eigensolver.hpp"

namespace stosc {

void SweepConfig::validate() const {
  if (!std::isfinite(lambda_start) || !std::isfinite(lambda_end) ||
      !(lambda_start < lambda_end))
    throw std::invalid_argument("SweepConfig: need lambda_start < lambda_end");
  if (steps < 2) throw std::invalid_argument("SweepConfig: steps must be >= 2");
  if (tracked_levels < 1)
    throw std::invalid_argument("SweepConfig: tracked_levels must be >= 1");
  if (!(reality_eps > 0.0))
    throw std::invalid_argument("SweepConfig: reality_eps must be > 0");
}

namespace {

// Grid reflection parity weight: fraction of the state even under x -> -x
// (axis 0) or y -> -y (axis 1).  The symmetric grid maps node i to n-1-i.
double grid_even_weight(const Eigen::VectorXcd& v, int n, int axis) {
  Eigen::VectorXcd rv(v.size());
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const int jx = axis == 0 ? n - 1 - ix : ix;
      const int jy = axis == 1 ? n - 1 - iy : iy;
      rv(iy * n + ix) = v(jy * n + jx);
    }
  return 0.25 * (v + rv).squaredNorm();
}

}  // namespace

SweepContext make_context(const ModelParams& params, Method method,
                          const ProductBasis& basis, const Grid2D& grid) {
  SweepContext ctx;
  if (method == Method::BASIS_DM) {
    ctx.build = [params, basis](double lambda) {
      ModelParams p = params;
      p.lambda = lambda;
      return build_h(p, basis);
    };
    ctx.ancestry = [basis](const Eigen::VectorXcd& v) {
      int best = 0;
      double bw = 0.0;
      for (int i = 0; i < basis.dim(); ++i) {
        const double w = std::norm(v(i));
        if (w > bw) {
          bw = w;
          best = i;
        }
      }
      const BasisIndex p = basis.unindex(best);
      return Ancestry{p, basis_irrep(p, Group::Ci), basis_irrep(p, Group::D2h)};
    };
    ctx.ci_purity = [basis](const Eigen::VectorXcd& v) {
      return state_irrep(v, basis, Group::Ci, 0.51).purity;
    };
  } else {
    ctx.build = [params, grid](double lambda) {
      ModelParams p = params;
      p.lambda = lambda;
      return build_h_grid(p, grid);
    };
    const int n = grid.points_per_axis;
    ctx.ancestry = [n](const Eigen::VectorXcd& v) {
      const bool ex = grid_even_weight(v, n, 0) >= 0.5;
      const bool ey = grid_even_weight(v, n, 1) >= 0.5;
      // Parent quantum numbers are a basis-set notion; only the parity
      // labels are recoverable from the grid.
      Ancestry a;
      a.parent = {-1, -1};
      a.ci = {Group::Ci, ex == ey ? "Ag" : "Au"};
      a.d2h = {Group::D2h, ex && ey   ? "Ag"
                           : !ex && !ey ? "Bg"
                           : ex         ? "Au"
                                        : "Bu"};
      return a;
    };
    ctx.ci_purity = [n](const Eigen::VectorXcd& v) {
      Eigen::VectorXcd rv(v.size());
      for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
          rv(iy * n + ix) = v((n - 1 - iy) * n + (n - 1 - ix));
      const double even = 0.25 * (v + rv).squaredNorm();
      return std::max(even, 1.0 - even);
    };
  }
  return ctx;
}

std::vector<Branch> run_sweep(const SweepConfig& cfg, const SweepContext& ctx) {
  cfg.validate();
  const int k = cfg.tracked_levels;

  std::vector<Branch> branches(k);
  Eigen::MatrixXcd prev_vecs;
  std::vector<double> lambdas(cfg.steps);
  for (int s = 0; s < cfg.steps; ++s)
    lambdas[s] = cfg.lambda_start +
                 (cfg.lambda_end - cfg.lambda_start) * s / double(cfg.steps - 1);

  for (int s = 0; s < cfg.steps; ++s) {
    const double lambda = lambdas[s];
    const Spectrum spec = eig_general(ctx.build(lambda));
    const int dim = int(spec.eigenvalues.size());
    if (k > dim) throw std::invalid_argument("run_sweep: tracked_levels exceeds dimension");
    const int m = std::min(dim, 2 * k + 8);  // candidate pool, lowest Re first

    std::vector<int> chosen(k);
    if (s == 0) {
      for (int b = 0; b < k; ++b) chosen[b] = b;
    } else {
      Eigen::MatrixXd score(k, m);
      for (int b = 0; b < k; ++b)
        for (int j = 0; j < m; ++j)
          score(b, j) = std::abs(prev_vecs.col(b).dot(spec.eigenvectors.col(j)));
      chosen = max_assignment(score);
      for (int b = 0; b < k; ++b) {
        // Flag near-ties between the chosen overlap and the best competitor.
        double second = 0.0;
        for (int j = 0; j < m; ++j)
          if (j != chosen[b]) second = std::max(second, score(b, j));
        const double best = score(b, chosen[b]);
        if (second > 0.0 && best - second < 1e-3 && best < 0.999)
          branches[b].warnings.push_back(
              "ambiguous match at lambda=" + std::to_string(lambda));
      }
    }

    Eigen::MatrixXcd cur(spec.eigenvectors.rows(), k);
    for (int b = 0; b < k; ++b) {
      const int j = chosen[b];
      LabeledLevel pt;
      pt.lambda = lambda;
      pt.energy = spec.eigenvalues[j];
      pt.residual = spec.residuals[j];
      pt.overlap_with_prev =
          s == 0 ? 1.0 : std::abs(prev_vecs.col(b).dot(spec.eigenvectors.col(j)));
      pt.ci_purity = ctx.ci_purity(spec.eigenvectors.col(j));
      branches[b].points.push_back(pt);
      cur.col(b) = spec.eigenvectors.col(j);
      if (s == 0) {
        const Ancestry a = ctx.ancestry(spec.eigenvectors.col(j));
        branches[b].parent = a.parent;
        branches[b].ancestry_ci = a.ci;
        branches[b].ancestry_d2h = a.d2h;
      }
    }
    prev_vecs = std::move(cur);
  }
  return branches;
}

namespace {

struct PairState {
  std::complex<double> e1, e2;
  bool complex_pair;
};

PairState probe_pair(const MatrixBuilder& build, double lambda,
                     std::complex<double> ref, double eps) {
  const Spectrum spec = eig_general(build(lambda));
  int b1 = -1, b2 = -1;
  double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
  for (size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const double d = std::abs(spec.eigenvalues[i] - ref);
    if (d < d1) {
      d2 = d1; b2 = b1;
      d1 = d; b1 = int(i);
    } else if (d < d2) {
      d2 = d; b2 = int(i);
    }
  }
  PairState ps;
  ps.e1 = spec.eigenvalues[b1];
  ps.e2 = spec.eigenvalues[b2];
  const double s1 = eps * std::max(1.0, std::abs(ps.e1.real()));
  const double s2 = eps * std::max(1.0, std::abs(ps.e2.real()));
  ps.complex_pair = std::abs(ps.e1.imag()) > s1 && std::abs(ps.e2.imag()) > s2 &&
                    ps.e1.imag() * ps.e2.imag() < 0.0;
  return ps;
}

}  // namespace

ExceptionalPoint find_exceptional_point(const MatrixBuilder& build,
                                        std::complex<double> pair_ref,
                                        double lambda_low, double lambda_high,
                                        double tol, double reality_eps) {
  if (!(lambda_low < lambda_high))
    throw std::invalid_argument("find_exceptional_point: bad bracket");
  if (!(tol > 0.0)) throw std::invalid_argument("find_exceptional_point: tol must be > 0");

  std::complex<double> ref = pair_ref;
  PairState lo = probe_pair(build, lambda_low, ref, reality_eps);
  PairState hi = probe_pair(build, lambda_high, ref, reality_eps);
  if (lo.complex_pair == hi.complex_pair)
    throw std::invalid_argument(
        "find_exceptional_point: reality predicate equal at both bracket ends");

  ExceptionalPoint ep;
  ep.gap_at_bracket = std::min(std::abs(lo.e1 - lo.e2), std::abs(hi.e1 - hi.e2));
  double a = lambda_low, b = lambda_high;
  while (b - a > tol) {
    ep.bracket_widths.push_back(b - a);
    const double mid = 0.5 * (a + b);
    const PairState ms = probe_pair(build, mid, ref, reality_eps);
    ep.gap_at_bracket = std::min(ep.gap_at_bracket, std::abs(ms.e1 - ms.e2));
    if (ms.complex_pair == lo.complex_pair)
      a = mid;
    else
      b = mid;
    ref = 0.5 * (ms.e1 + ms.e2).real();
  }
  ep.bracket_widths.push_back(b - a);
  ep.lambda_low = a;
  ep.lambda_high = b;
  return ep;
}

TransitionCount count_phase_transitions(const Branch& a, const Branch& b,
                                        const MatrixBuilder& build, double tol,
                                        double reality_eps) {
  if (a.points.size() != b.points.size() || a.points.empty())
    throw std::invalid_argument("count_phase_transitions: branches mismatch");
  auto complex_at = [&](size_t i) {
    const auto ea = a.points[i].energy, eb = b.points[i].energy;
    const double sa = reality_eps * std::max(1.0, std::abs(ea.real()));
    const double sb = reality_eps * std::max(1.0, std::abs(eb.real()));
    return std::abs(ea.imag()) > sa && std::abs(eb.imag()) > sb &&
           ea.imag() * eb.imag() < 0.0;
  };
  TransitionCount tc;
  for (size_t i = 1; i < a.points.size(); ++i) {
    if (complex_at(i) == complex_at(i - 1)) continue;
    ++tc.count;
    const std::complex<double> ref =
        0.25 * (a.points[i - 1].energy + b.points[i - 1].energy +
                a.points[i].energy + b.points[i].energy);
    tc.transitions.push_back(find_exceptional_point(
        build, {ref.real(), 0.0}, a.points[i - 1].lambda, a.points[i].lambda, tol,
        reality_eps));
  }
  return tc;
}

std::vector<std::pair<int, int>> coalescing_pairs(const std::vector<Branch>& branches,
                                                  double reality_eps) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(branches.size(), false);
  for (size_t i = 0; i < branches.size(); ++i) {
    if (used[i] || branches[i].points.empty()) continue;
    const auto ei = branches[i].points.back().energy;
    if (std::abs(ei.imag()) <= reality_eps * std::max(1.0, std::abs(ei.real())))
      continue;
    for (size_t j = i + 1; j < branches.size(); ++j) {
      if (used[j]) continue;
      const auto ej = branches[j].points.back().energy;
      const double scale = std::max(1.0, std::abs(ei.real()));
      if (std::abs(ej - std::conj(ei)) <= 1e-6 * scale) {
        pairs.emplace_back(int(i), int(j));
        used[i] = used[j] = true;
        break;
      }
    }
  }
  return pairs;
}

}  // namespace stosc
