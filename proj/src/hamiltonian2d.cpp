#include "stosc/hamiltonian2d.hpp"

#include "stosc/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace stosc {

const char* perturbation_name(Perturbation kind) {
  switch (kind) {
    case Perturbation::XY: return "xy";
    case Perturbation::X2Y: return "x2y";
    case Perturbation::XY2: return "xy2";
    case Perturbation::X2Y_PLUS_XY2: return "x2y+xy2";
  }
  throw std::invalid_argument("unknown perturbation");
}

Perturbation parse_perturbation(const std::string& name) {
  if (name == "xy") return Perturbation::XY;
  if (name == "x2y") return Perturbation::X2Y;
  if (name == "xy2") return Perturbation::XY2;
  if (name == "x2y+xy2") return Perturbation::X2Y_PLUS_XY2;
  throw std::invalid_argument("unknown perturbation: " + name);
}

void ModelParams::validate() const {
  if (!(alpha_x > 0.0) || !std::isfinite(alpha_x))
    throw std::invalid_argument("ModelParams: alpha_x must be positive");
  if (!(alpha_y > 0.0) || !std::isfinite(alpha_y))
    throw std::invalid_argument("ModelParams: alpha_y must be positive");
  if (lambda < 0.0 || !std::isfinite(lambda))
    throw std::invalid_argument("ModelParams: lambda must be >= 0 and finite");
}

void ProductBasis::validate() const {
  x.validate();
  y.validate();
  if (dim() > kMaxDenseDim)
    throw std::runtime_error("ProductBasis: dimension exceeds dense limit");
}

ProductBasis ProductBasis::tuned(int x_size, int y_size, double alpha_x, double alpha_y) {
  return {{x_size, tuned_scale(alpha_x)}, {y_size, tuned_scale(alpha_y)}};
}

namespace {

// kron(A_y, A_x) in the n_x-fastest ordering: entry ((my,mx),(ny,nx)).
Eigen::MatrixXd kron_yx(const Eigen::MatrixXd& ay, const Eigen::MatrixXd& ax) {
  const int nx = int(ax.rows()), ny = int(ay.rows());
  Eigen::MatrixXd out(nx * ny, nx * ny);
  for (int my = 0; my < ny; ++my)
    for (int ny2 = 0; ny2 < ny; ++ny2)
      out.block(my * nx, ny2 * nx, nx, nx) = ay(my, ny2) * ax;
  return out;
}

}  // namespace

Eigen::MatrixXd build_h0(const ModelParams& params, const ProductBasis& basis) {
  params.validate();
  basis.validate();
  const Eigen::MatrixXd hx =
      kinetic_matrix(basis.x) + params.alpha_x * position_power_matrix(basis.x, 4);
  const Eigen::MatrixXd hy =
      kinetic_matrix(basis.y) + params.alpha_y * position_power_matrix(basis.y, 4);
  const Eigen::MatrixXd ix = Eigen::MatrixXd::Identity(basis.x.size, basis.x.size);
  const Eigen::MatrixXd iy = Eigen::MatrixXd::Identity(basis.y.size, basis.y.size);
  return kron_yx(iy, hx) + kron_yx(hy, ix);
}

Eigen::MatrixXd build_w(Perturbation kind, const ProductBasis& basis) {
  basis.validate();
  const Eigen::MatrixXd x1 = position_power_matrix(basis.x, 1);
  const Eigen::MatrixXd x2 = position_power_matrix(basis.x, 2);
  const Eigen::MatrixXd y1 = position_power_matrix(basis.y, 1);
  const Eigen::MatrixXd y2 = position_power_matrix(basis.y, 2);
  switch (kind) {
    case Perturbation::XY: return kron_yx(y1, x1);
    case Perturbation::X2Y: return kron_yx(y1, x2);
    case Perturbation::XY2: return kron_yx(y2, x1);
    case Perturbation::X2Y_PLUS_XY2: return kron_yx(y1, x2) + kron_yx(y2, x1);
  }
  throw std::invalid_argument("unknown perturbation");
}

Eigen::MatrixXcd build_h(const ModelParams& params, const ProductBasis& basis) {
  const Eigen::MatrixXd h0 = build_h0(params, basis);
  Eigen::MatrixXcd h = h0.cast<std::complex<double>>();
  if (params.lambda != 0.0) {
    const Eigen::MatrixXd w = build_w(params.perturbation, basis);
    h += std::complex<double>(0.0, params.lambda) * w;
  }
  return h;
}

std::vector<SymOp> residual_unitary_symmetries(Perturbation kind) {
  switch (kind) {
    case Perturbation::XY: return {SymOp::E, SymOp::P};
    case Perturbation::X2Y: return {SymOp::E, SymOp::Px};
    case Perturbation::XY2: return {SymOp::E, SymOp::Py};
    case Perturbation::X2Y_PLUS_XY2: return {SymOp::E};
  }
  throw std::invalid_argument("unknown perturbation");
}

std::vector<SymmetryBlock> symmetry_blocks(const Eigen::MatrixXcd& h,
                                           const ProductBasis& basis,
                                           const std::vector<SymOp>& ops) {
  if (h.rows() != basis.dim() || h.cols() != basis.dim())
    throw std::invalid_argument("symmetry_blocks: matrix does not match basis");
  auto parity = [](SymOp op, BasisIndex n) -> int {
    switch (op) {
      case SymOp::E: return 1;
      case SymOp::P: return (n.nx + n.ny) % 2 == 0 ? 1 : -1;
      case SymOp::Px: return n.nx % 2 == 0 ? 1 : -1;
      case SymOp::Py: return n.ny % 2 == 0 ? 1 : -1;
    }
    return 1;
  };
  std::vector<SymOp> kept;
  for (SymOp op : ops)
    if (op != SymOp::E) kept.push_back(op);

  std::map<std::vector<int>, std::vector<int>> classes;
  for (int i = 0; i < basis.dim(); ++i) {
    const BasisIndex n = basis.unindex(i);
    std::vector<int> sig;
    for (SymOp op : kept) sig.push_back(parity(op, n));
    classes[sig].push_back(i);
  }

  std::vector<SymmetryBlock> blocks;
  for (const auto& [sig, idx] : classes) {
    SymmetryBlock b;
    b.parity_signature = sig;
    b.index_map = idx;
    b.matrix.resize(idx.size(), idx.size());
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c) b.matrix(r, c) = h(idx[r], idx[c]);
    blocks.push_back(std::move(b));
  }

  // Every cross-class entry must vanish exactly; a nonzero one means the
  // claimed selection rule does not hold for this matrix.
  std::vector<int> class_of(basis.dim());
  int ci = 0;
  for (const auto& [sig, idx] : classes) {
    for (int i : idx) class_of[i] = ci;
    ++ci;
  }
  for (int r = 0; r < basis.dim(); ++r)
    for (int c = 0; c < basis.dim(); ++c)
      if (class_of[r] != class_of[c] && h(r, c) != std::complex<double>(0.0, 0.0))
        throw std::runtime_error("symmetry_blocks: nonzero off-block entry");
  return blocks;
}

std::vector<double> h0_spectrum_blocked(const ModelParams& params,
                                        const ProductBasis& basis) {
  const Eigen::MatrixXcd h = build_h0(params, basis).cast<std::complex<double>>();
  std::vector<double> all;
  for (const auto& blk :
       symmetry_blocks(h, basis, {SymOp::E, SymOp::P, SymOp::Px, SymOp::Py})) {
    const Spectrum s = eig_symmetric(blk.matrix.real());
    for (auto e : s.eigenvalues) all.push_back(e.real());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace stosc
