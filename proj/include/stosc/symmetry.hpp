#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stosc/eigensolver.hpp"
#include "stosc/hamiltonian2d.hpp"

namespace stosc {

enum class Group { Ci, D2h, C2v, C4v };

const char* group_name(Group g);

struct IrrepLabel {
  Group group;
  std::string label;
  bool operator==(const IrrepLabel&) const = default;
};

// Parity label of a product-basis state.  Ci: Ag/Au by total parity.
// D2h: (even,even)->Ag, (odd,odd)->Bg, (even,odd)->Au, (odd,even)->Bu.
IrrepLabel basis_irrep(BasisIndex n, Group group);

struct StateLabel {
  IrrepLabel label;
  double purity = 0.0;
  bool definite = false;                 // purity >= threshold
  std::map<std::string, double> weights; // full irrep weight vector
};

// Classifies an eigenvector by summing |component|^2 over the basis_irrep
// classes (groups Ci and D2h).  Mixed states (purity below threshold) come
// back flagged, not as an error.
StateLabel state_irrep(const Eigen::VectorXcd& v, const ProductBasis& basis,
                       Group group, double purity_threshold);

// Character-projection weights ||P_irrep v||^2 for the groups with
// off-diagonal operations: C4v (square symmetry, alpha_x == alpha_y) and
// C2v realized with the diagonal mirrors (the symmetry group of W = xy on
// the square).  Weights sum to 1 for a unit vector.
std::map<std::string, double> character_weights(const Eigen::VectorXcd& v,
                                                const ProductBasis& basis,
                                                Group group);

// Degenerate E-representation doublets of a (square-symmetric) H0 spectrum:
// pairs of eigenvalues equal within tol whose dominant basis components are
// a swap-image pair with one even and one odd index per axis.
std::vector<std::pair<int, int>> c4v_degenerate_pairs(const Spectrum& spec,
                                                      const ProductBasis& basis,
                                                      double tol);

}  // namespace stosc
