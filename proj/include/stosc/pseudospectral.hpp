#pragma once

#include <vector>

#include <Eigen/Dense>

#include "stosc/hamiltonian2d.hpp"

namespace stosc {

// Uniform sinc-DVR grid on [-L, L] per axis, interior points only:
// x_i = -L + (i+1)*h with h = 2L/(N+1).
struct Grid2D {
  double half_width = 6.0;
  int points_per_axis = 40;

  double spacing() const { return 2.0 * half_width / (points_per_axis + 1); }
  std::vector<double> nodes() const;
  void validate() const;
};

// 1D sinc-DVR second-derivative matrix: diagonal -pi^2/(3h^2),
// off-diagonal -2(-1)^(i-j) / (h^2 (i-j)^2).
Eigen::MatrixXd second_derivative_matrix(const Grid2D& grid);

// Real grid discretization of H0 (lambda ignored).
Eigen::MatrixXd build_h0_grid(const ModelParams& params, const Grid2D& grid);

// (N^2)x(N^2) complex-symmetric discretization of H = H0 + i*lambda*W,
// n_x fastest ordering as in ProductBasis.
Eigen::MatrixXcd build_h_grid(const ModelParams& params, const Grid2D& grid);

struct CrossValidationReport {
  int k = 0;
  double tol = 0.0;
  double max_distance = 0.0;
  std::vector<std::complex<double>> dm_values;
  std::vector<std::complex<double>> grid_values;  // matched to dm_values order
  bool pass = false;
};

// Computes the k lowest-Re eigenvalues with both discretizations, pairs them
// by nearest-neighbor matching in the complex plane and reports the maximum
// pairwise distance.  Throws if any matched pair is farther apart than 10*tol.
CrossValidationReport cross_validate(const ModelParams& params,
                                     const ProductBasis& dm_basis,
                                     const Grid2D& grid, int k, double tol);

}  // namespace stosc
