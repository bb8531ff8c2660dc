#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stosc/hamiltonian2d.hpp"
#include "stosc/pseudospectral.hpp"
#include "stosc/symmetry.hpp"

namespace stosc {

enum class Method { BASIS_DM, PSEUDOSPECTRAL };

struct SweepConfig {
  double lambda_start = 0.0;
  double lambda_end = 4.0;
  int steps = 201;
  int tracked_levels = 8;
  Method method = Method::BASIS_DM;
  double reality_eps = 1e-8;

  void validate() const;
};

struct LabeledLevel {
  double lambda = 0.0;
  std::complex<double> energy;
  double residual = 0.0;
  double overlap_with_prev = 1.0;  // |<v_prev | v_this>|
  double ci_purity = 1.0;
};

struct Branch {
  BasisIndex parent;        // lambda = 0 ancestry (dominant H0 basis index)
  IrrepLabel ancestry_ci;   // Ci label of the parent level
  IrrepLabel ancestry_d2h;
  std::vector<LabeledLevel> points;
  std::vector<std::string> warnings;  // ambiguous-matching records
};

struct ExceptionalPoint {
  double lambda_low = 0.0;
  double lambda_high = 0.0;
  int branch_a = -1;
  int branch_b = -1;
  double gap_at_bracket = 0.0;        // min |E_i - E_j| observed
  std::vector<double> bracket_widths; // per bisection iteration
};

// Builds the discretized H(lambda) for either method.
using MatrixBuilder = std::function<Eigen::MatrixXcd(double)>;

struct Ancestry {
  BasisIndex parent;
  IrrepLabel ci;
  IrrepLabel d2h;
};

// Discretization-specific pieces of a sweep: the matrix family, the
// lambda=0 ancestry of an eigenvector, and the Ci-purity of a state.
struct SweepContext {
  MatrixBuilder build;
  std::function<Ancestry(const Eigen::VectorXcd&)> ancestry;
  std::function<double(const Eigen::VectorXcd&)> ci_purity;
};

SweepContext make_context(const ModelParams& params, Method method,
                          const ProductBasis& basis, const Grid2D& grid);

// Continuation of the k lowest branches over a uniform lambda grid, linked
// by maximal eigenvector overlap with globally optimal assignment.
std::vector<Branch> run_sweep(const SweepConfig& cfg, const SweepContext& ctx);

// Bisection on the reality predicate of the eigenvalue pair nearest
// `pair_ref`.  The pair must be real-split at lambda_low and a conjugate
// pair at lambda_high.
ExceptionalPoint find_exceptional_point(const MatrixBuilder& build,
                                        std::complex<double> pair_ref,
                                        double lambda_low, double lambda_high,
                                        double tol, double reality_eps);

struct TransitionCount {
  int count = 0;
  std::vector<ExceptionalPoint> transitions;
};

// Sign changes of the pair-reality predicate along two tracked branches,
// each refined by find_exceptional_point.
TransitionCount count_phase_transitions(const Branch& a, const Branch& b,
                                        const MatrixBuilder& build, double tol,
                                        double reality_eps);

// Branch pairs that have turned into conjugate partners by the end of the
// sweep (|Im| beyond reality_eps, opposite signs, matching real parts).
std::vector<std::pair<int, int>> coalescing_pairs(const std::vector<Branch>& branches,
                                                  double reality_eps);

}  // namespace stosc
