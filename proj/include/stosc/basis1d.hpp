#pragma once

#include <Eigen/Dense>

namespace stosc {

// Truncated eigenbasis of the harmonic oscillator H_HO = p^2 + q^2, with
// functions phi_n(beta*x)*sqrt(beta).  Matrix elements below are exact
// ladder-operator expansions of the untruncated operators, restricted to
// the first `size` states.
struct Basis1D {
  int size = 1;
  double scale = 1.0;  // beta

  void validate() const;
};

// Recommended beta for the quartic Hamiltonian -1/2 d^2/dx^2 + alpha x^4:
// the stationary-variance choice (4*alpha)^(1/6).
double tuned_scale(double alpha);

// <m| q^power |n> in the scaled basis, power in 1..4.  Exactly symmetric,
// banded with bandwidth = power; entries with m+n+power odd are exactly zero.
Eigen::MatrixXd position_power_matrix(const Basis1D& basis, int power);

// <m| p^2/2 |n> in the scaled basis.  Nonzero only for |m-n| in {0,2}.
Eigen::MatrixXd kinetic_matrix(const Basis1D& basis);

}  // namespace stosc
