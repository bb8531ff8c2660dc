#include "stosc/basis1d.hpp"

#include <cmath>
#include <stdexcept>

namespace stosc {

void Basis1D::validate() const {
  if (size < 1) throw std::invalid_argument("Basis1D: size must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("Basis1D: scale must be positive and finite");
}

double tuned_scale(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("tuned_scale: alpha must be positive");
  return std::pow(4.0 * alpha, 1.0 / 6.0);
}

Eigen::MatrixXd position_power_matrix(const Basis1D& basis, int power) {
  basis.validate();
  if (power < 1 || power > 4)
    throw std::invalid_argument("position_power_matrix: power must be in 1..4");
  const int n = basis.size;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  auto set = [&m, n](int row, int col, double v) {
    if (row < n && col < n) {
      m(row, col) = v;
      m(col, row) = v;
    }
  };
  switch (power) {
    case 1:
      for (int k = 0; k + 1 < n; ++k) set(k + 1, k, std::sqrt((k + 1) / 2.0));
      break;
    case 2:
      for (int k = 0; k < n; ++k) m(k, k) = (2 * k + 1) / 2.0;
      for (int k = 0; k + 2 < n; ++k)
        set(k + 2, k, std::sqrt(double(k + 1) * (k + 2)) / 2.0);
      break;
    case 3:
      for (int k = 0; k + 1 < n; ++k)
        set(k + 1, k, 1.5 * (k + 1) * std::sqrt((k + 1) / 2.0));
      for (int k = 0; k + 3 < n; ++k)
        set(k + 3, k, std::sqrt(double(k + 1) * (k + 2) * (k + 3) / 8.0));
      break;
    case 4:
      for (int k = 0; k < n; ++k) m(k, k) = 3.0 * (2.0 * k * k + 2 * k + 1) / 4.0;
      for (int k = 0; k + 2 < n; ++k)
        set(k + 2, k, (2 * k + 3) * std::sqrt(double(k + 1) * (k + 2)) / 2.0);
      for (int k = 0; k + 4 < n; ++k)
        set(k + 4, k, std::sqrt(double(k + 1) * (k + 2) * (k + 3) * (k + 4)) / 4.0);
      break;
  }
  return m * std::pow(basis.scale, -power);
}

Eigen::MatrixXd kinetic_matrix(const Basis1D& basis) {
  basis.validate();
  const int n = basis.size;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = (2 * k + 1) / 4.0;
  for (int k = 0; k + 2 < n; ++k) {
    const double v = -std::sqrt(double(k + 1) * (k + 2)) / 4.0;
    m(k + 2, k) = v;
    m(k, k + 2) = v;
  }
  return m * (basis.scale * basis.scale);
}

}  // namespace stosc
