#include "stosc/pseudospectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stosc/eigensolver.hpp"

namespace stosc {

void Grid2D::validate() const {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("Grid2D: half_width must be positive");
  if (points_per_axis < 3)
    throw std::invalid_argument("Grid2D: points_per_axis must be >= 3");
  const long long dim = 1LL * points_per_axis * points_per_axis;
  if (dim > kMaxDenseDim)
    throw std::runtime_error("Grid2D: dimension exceeds dense limit");
}

std::vector<double> Grid2D::nodes() const {
  const double h = spacing();
  std::vector<double> x(points_per_axis);
  for (int i = 0; i < points_per_axis; ++i) x[i] = -half_width + (i + 1) * h;
  return x;
}

Eigen::MatrixXd second_derivative_matrix(const Grid2D& grid) {
  grid.validate();
  const int n = grid.points_per_axis;
  const double h2 = grid.spacing() * grid.spacing();
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    d(i, i) = -std::numbers::pi * std::numbers::pi / (3.0 * h2);
    for (int j = 0; j < i; ++j) {
      const int k = i - j;
      const double v = -2.0 * ((k % 2 == 0) ? 1.0 : -1.0) / (h2 * double(k) * k);
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return d;
}

namespace {

double w_value(Perturbation kind, double x, double y) {
  switch (kind) {
    case Perturbation::XY: return x * y;
    case Perturbation::X2Y: return x * x * y;
    case Perturbation::XY2: return x * y * y;
    case Perturbation::X2Y_PLUS_XY2: return x * x * y + x * y * y;
  }
  return 0.0;
}

Eigen::MatrixXd kinetic_2d(const Grid2D& grid) {
  const int n = grid.points_per_axis;
  const Eigen::MatrixXd d2 = second_derivative_matrix(grid);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n * n, n * n);
  // -1/2 (D2 (x) 1 + 1 (x) D2), n_x fastest
  for (int iy = 0; iy < n; ++iy)
    k.block(iy * n, iy * n, n, n) = -0.5 * d2;
  for (int iy = 0; iy < n; ++iy)
    for (int jy = 0; jy < n; ++jy)
      for (int ix = 0; ix < n; ++ix)
        k(iy * n + ix, jy * n + ix) += -0.5 * d2(iy, jy);
  return k;
}

}  // namespace

Eigen::MatrixXd build_h0_grid(const ModelParams& params, const Grid2D& grid) {
  params.validate();
  grid.validate();
  const int n = grid.points_per_axis;
  const std::vector<double> x = grid.nodes();
  Eigen::MatrixXd h = kinetic_2d(grid);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      h(iy * n + ix, iy * n + ix) +=
          params.alpha_x * std::pow(x[ix], 4) + params.alpha_y * std::pow(x[iy], 4);
  return h;
}

Eigen::MatrixXcd build_h_grid(const ModelParams& params, const Grid2D& grid) {
  Eigen::MatrixXcd h = build_h0_grid(params, grid).cast<std::complex<double>>();
  if (params.lambda != 0.0) {
    const int n = grid.points_per_axis;
    const std::vector<double> x = grid.nodes();
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix)
        h(iy * n + ix, iy * n + ix) +=
            std::complex<double>(0.0, params.lambda *
                                          w_value(params.perturbation, x[ix], x[iy]));
  }
  return h;
}

namespace {

std::vector<std::complex<double>> lowest_re(const Spectrum& s, int k) {
  // Spectrum is already (Re, Im) sorted.
  std::vector<std::complex<double>> out;
  for (int i = 0; i < k; ++i) out.push_back(s.eigenvalues[i]);
  return out;
}

}  // namespace

CrossValidationReport cross_validate(const ModelParams& params,
                                     const ProductBasis& dm_basis,
                                     const Grid2D& grid, int k, double tol) {
  if (k < 1) throw std::invalid_argument("cross_validate: k must be >= 1");
  if (k > dm_basis.dim() || k > grid.points_per_axis * grid.points_per_axis)
    throw std::invalid_argument("cross_validate: k exceeds discretization dimension");

  Spectrum dm, ps;
  if (params.lambda == 0.0) {
    dm = eig_symmetric(build_h0(params, dm_basis));
    ps = eig_symmetric(build_h0_grid(params, grid));
  } else {
    dm = eig_general(build_h(params, dm_basis));
    ps = eig_general(build_h_grid(params, grid));
  }

  CrossValidationReport rep;
  rep.k = k;
  rep.tol = tol;
  rep.dm_values = lowest_re(dm, k);
  const std::vector<std::complex<double>> grid_low = lowest_re(ps, k);

  // Nearest-neighbor matching, closest pairs claimed first.
  std::vector<bool> used(grid_low.size(), false);
  rep.grid_values.resize(k);
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  for (int i = 0; i < k; ++i) {
    double best = std::numeric_limits<double>::infinity();
    int bj = -1;
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      const double d = std::abs(rep.dm_values[i] - grid_low[j]);
      if (d < best) {
        best = d;
        bj = j;
      }
    }
    used[bj] = true;
    rep.grid_values[i] = grid_low[bj];
    rep.max_distance = std::max(rep.max_distance, best);
    if (best > 10.0 * tol)
      throw std::runtime_error("cross_validate: method disagreement, distance " +
                               std::to_string(best));
  }
  rep.pass = rep.max_distance <= tol;
  return rep;
}

}  // namespace stosc
