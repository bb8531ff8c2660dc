#include "stosc/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace stosc {

namespace {

void check_finite(const Eigen::MatrixXcd& a) {
  if (!a.allFinite()) throw std::invalid_argument("eigensolver: NaN/Inf input");
}

std::vector<int> sort_order(const std::vector<std::complex<double>>& ev) {
  std::vector<int> order(ev.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&ev](int i, int j) {
    if (ev[i].real() != ev[j].real()) return ev[i].real() < ev[j].real();
    return ev[i].imag() < ev[j].imag();
  });
  return order;
}

}  // namespace

Spectrum eig_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_symmetric: not square");
  if (!a.allFinite()) throw std::invalid_argument("eig_symmetric: NaN/Inf input");
  const double norm = a.norm();
  if ((a - a.transpose()).norm() > 1e-13 * std::max(1.0, norm))
    throw std::invalid_argument("eig_symmetric: matrix is not symmetric");

  const lapack_int n = lapack_int(a.rows());
  Eigen::MatrixXd v = a;  // column-major, overwritten with eigenvectors
  Eigen::VectorXd w(n);
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, v.data(), n, w.data());
  if (info != 0)
    throw std::runtime_error("eig_symmetric: dsyevd failed, info=" + std::to_string(info));

  Spectrum s;
  s.eigenvalues.reserve(n);
  for (lapack_int i = 0; i < n; ++i) s.eigenvalues.emplace_back(w(i), 0.0);
  s.eigenvectors = v.cast<std::complex<double>>();
  s.residuals.resize(n);
  const double scale = std::max(norm, 1e-300);
  for (lapack_int i = 0; i < n; ++i)
    s.residuals[i] = (a * v.col(i) - w(i) * v.col(i)).norm() / scale;
  return s;
}

Spectrum eig_general(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_general: not square");
  check_finite(a);
  const lapack_int n = lapack_int(a.rows());
  Eigen::MatrixXcd work = a;
  Eigen::VectorXcd w(n);
  Eigen::MatrixXcd vr(n, n);
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, work.data(), n, w.data(),
                    nullptr, 1, vr.data(), n);
  if (info != 0)
    throw std::runtime_error("eig_general: zgeev failed, info=" + std::to_string(info));

  std::vector<std::complex<double>> ev(w.data(), w.data() + n);
  const std::vector<int> order = sort_order(ev);

  Spectrum s;
  s.eigenvalues.reserve(n);
  s.eigenvectors.resize(n, n);
  s.residuals.resize(n);
  const double scale = std::max(a.norm(), 1e-300);
  for (lapack_int k = 0; k < n; ++k) {
    const int i = order[k];
    s.eigenvalues.push_back(ev[i]);
    Eigen::VectorXcd v = vr.col(i);
    v /= v.norm();
    s.eigenvectors.col(k) = v;
    s.residuals[k] = (a * v - ev[i] * v).norm() / scale;
  }
  return s;
}

RealityPartition classify_reality(const Spectrum& spec, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("classify_reality: eps must be > 0");
  RealityPartition part;
  std::vector<int> complex_idx;
  for (size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const auto e = spec.eigenvalues[i];
    if (std::abs(e.imag()) <= eps * std::max(1.0, std::abs(e.real())))
      part.real_levels.push_back(int(i));
    else
      complex_idx.push_back(int(i));
  }
  std::vector<bool> used(complex_idx.size(), false);
  for (size_t i = 0; i < complex_idx.size(); ++i) {
    if (used[i]) continue;
    const auto e = spec.eigenvalues[complex_idx[i]];
    double best = std::numeric_limits<double>::infinity();
    int best_j = -1;
    for (size_t j = 0; j < complex_idx.size(); ++j) {
      if (j == i || used[j]) continue;
      const double d = std::abs(spec.eigenvalues[complex_idx[j]] - std::conj(e));
      if (d < best) {
        best = d;
        best_j = int(j);
      }
    }
    const double scale = std::max(1.0, std::abs(e.real()));
    if (best_j < 0 || best > 10.0 * eps * scale)
      throw std::runtime_error("classify_reality: broken conjugacy in spectrum");
    used[i] = true;
    used[best_j] = true;
    const int a = complex_idx[i], b = complex_idx[best_j];
    if (spec.eigenvalues[a].imag() >= 0.0)
      part.conjugate_pairs.emplace_back(a, b);
    else
      part.conjugate_pairs.emplace_back(b, a);
  }
  return part;
}

}  // namespace stosc
