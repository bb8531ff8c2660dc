#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "stosc/basis1d.hpp"

namespace stosc {

struct BasisIndex {
  int nx = 0;
  int ny = 0;
  bool operator==(const BasisIndex&) const = default;
};

enum class Perturbation { XY, X2Y, XY2, X2Y_PLUS_XY2 };

const char* perturbation_name(Perturbation kind);
Perturbation parse_perturbation(const std::string& name);

// H = H0 + i*lambda*W with H0 = -1/2 (dxx + dyy) + alpha_x x^4 + alpha_y y^4.
struct ModelParams {
  double alpha_x = 1.0;
  double alpha_y = 1.4142135623730951;  // sqrt(2)
  Perturbation perturbation = Perturbation::XY;
  double lambda = 0.0;

  void validate() const;
};

// Tensor-product basis |n_x> (x) |n_y>, flattened row-major in (n_x, n_y)
// with n_x fastest: linear index = n_y * x_size + n_x.
struct ProductBasis {
  Basis1D x;
  Basis1D y;

  int dim() const { return x.size * y.size; }
  int index(BasisIndex n) const { return n.ny * x.size + n.nx; }
  BasisIndex unindex(int i) const { return {i % x.size, i / x.size}; }
  void validate() const;

  // Per-axis tuned scales for the given quartic coefficients.
  static ProductBasis tuned(int x_size, int y_size, double alpha_x, double alpha_y);
};

// Hard cap on dense dimensions; exceeding it is a resource-limit error.
inline constexpr int kMaxDenseDim = 20000;

Eigen::MatrixXd build_h0(const ModelParams& params, const ProductBasis& basis);
Eigen::MatrixXd build_w(Perturbation kind, const ProductBasis& basis);
Eigen::MatrixXcd build_h(const ModelParams& params, const ProductBasis& basis);

// Point-group operations of Eq. {E, P, Px, Py} acting on (x, y).
enum class SymOp { E, P, Px, Py };

// The operations commuting with both H0 and W for the given perturbation.
std::vector<SymOp> residual_unitary_symmetries(Perturbation kind);

struct SymmetryBlock {
  Eigen::MatrixXcd matrix;
  std::vector<int> parity_signature;  // one +-1 per retained non-identity op
  std::vector<int> index_map;         // block row -> full-basis index
};

// Partition the basis by parity signature under the retained operations and
// restrict H to each class.  Throws if any off-block entry of H is nonzero.
std::vector<SymmetryBlock> symmetry_blocks(const Eigen::MatrixXcd& h,
                                           const ProductBasis& basis,
                                           const std::vector<SymOp>& ops);

// Ascending eigenvalues of H0, solved per parity block under the full
// {E, P, Px, Py} set.
std::vector<double> h0_spectrum_blocked(const ModelParams& params,
                                        const ProductBasis& basis);

}  // namespace stosc
