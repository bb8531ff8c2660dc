#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace stosc {

struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;  // sorted by (Re, Im)
  Eigen::MatrixXcd eigenvectors;                  // unit 2-norm columns
  std::vector<double> residuals;                  // ||A v - e v|| / ||A||
};

// Dense real-symmetric eigendecomposition.  Eigenvalues ascending,
// eigenvectors orthonormal.  Rejects input that is not symmetric within
// 1e-13 * ||A||.
Spectrum eig_symmetric(const Eigen::MatrixXd& a);

// Dense complex-general eigendecomposition with right eigenvectors,
// sorted by (Re, Im).
Spectrum eig_general(const Eigen::MatrixXcd& a);

struct RealityPartition {
  std::vector<int> real_levels;
  std::vector<std::pair<int, int>> conjugate_pairs;  // (index of +Im, index of -Im)
};

// Split a spectrum into real levels (|Im| <= eps * max(1, |Re|)) and
// conjugate pairs matched by nearest conjugate image.  Throws if a complex
// eigenvalue has no conjugate partner within 10*eps of its conjugate image.
RealityPartition classify_reality(const Spectrum& spec, double eps);

}  // namespace stosc
