#include "stosc/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace stosc {

const char* group_name(Group g) {
  switch (g) {
    case Group::Ci: return "Ci";
    case Group::D2h: return "D2h";
    case Group::C2v: return "C2v";
    case Group::C4v: return "C4v";
  }
  throw std::invalid_argument("unknown group");
}

IrrepLabel basis_irrep(BasisIndex n, Group group) {
  const bool ex = n.nx % 2 == 0;
  const bool ey = n.ny % 2 == 0;
  if (group == Group::Ci) return {group, (ex == ey) ? "Ag" : "Au"};
  if (group == Group::D2h) {
    if (ex && ey) return {group, "Ag"};
    if (!ex && !ey) return {group, "Bg"};
    if (ex && !ey) return {group, "Au"};
    return {group, "Bu"};
  }
  throw std::invalid_argument("basis_irrep: only Ci and D2h label single basis states");
}

StateLabel state_irrep(const Eigen::VectorXcd& v, const ProductBasis& basis,
                       Group group, double purity_threshold) {
  if (v.size() != basis.dim())
    throw std::invalid_argument("state_irrep: vector does not match basis");
  if (!(purity_threshold > 0.5) || purity_threshold > 1.0)
    throw std::invalid_argument("state_irrep: threshold must be in (0.5, 1]");
  StateLabel out;
  for (int i = 0; i < basis.dim(); ++i) {
    const IrrepLabel l = basis_irrep(basis.unindex(i), group);
    out.weights[l.label] += std::norm(v(i));
  }
  for (const auto& [label, w] : out.weights) {
    if (w > out.purity) {
      out.purity = w;
      out.label = {group, label};
    }
  }
  out.definite = out.purity >= purity_threshold;
  return out;
}

namespace {

// Signed permutation of the product basis: |nx,ny> -> sign * |nx',ny'>.
struct SignedPerm {
  bool swap;     // exchange nx and ny
  int sx, sy;    // parity sign exponents: sign = (-1)^(sx*nx + sy*ny)
};

Eigen::VectorXcd apply(const SignedPerm& g, const Eigen::VectorXcd& v,
                       const ProductBasis& basis) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (int i = 0; i < basis.dim(); ++i) {
    const BasisIndex n = basis.unindex(i);
    const BasisIndex m = g.swap ? BasisIndex{n.ny, n.nx} : n;
    const int e = g.sx * n.nx + g.sy * n.ny;
    const double sign = (e % 2 == 0) ? 1.0 : -1.0;
    out(basis.index(m)) += sign * v(i);
  }
  return out;
}

struct GroupTable {
  std::vector<SignedPerm> ops;
  std::vector<std::pair<std::string, std::vector<int>>> irreps;  // label, characters
  std::vector<int> dims;
};

// C4v acting on (x,y); basis functions pick up (-1)^n under each axis flip,
// and (x,y)->(-y,x) maps |nx,ny> to (-1)^nx |ny,nx>.
GroupTable c4v_table() {
  GroupTable t;
  t.ops = {
      {false, 0, 0},  // E
      {true, 1, 0},   // C4
      {true, 0, 1},   // C4^-1
      {false, 1, 1},  // C2
      {false, 1, 0},  // sigma_v (x -> -x)
      {false, 0, 1},  // sigma_v (y -> -y)
      {true, 0, 0},   // sigma_d (swap)
      {true, 1, 1},   // sigma_d ((x,y) -> (-y,-x))
  };
  t.irreps = {
      {"A1", {1, 1, 1, 1, 1, 1, 1, 1}},
      {"A2", {1, 1, 1, 1, -1, -1, -1, -1}},
      {"B1", {1, -1, -1, 1, 1, 1, -1, -1}},
      {"B2", {1, -1, -1, 1, -1, -1, 1, 1}},
      {"E", {2, 0, 0, -2, 0, 0, 0, 0}},
  };
  t.dims = {1, 1, 1, 1, 2};
  return t;
}

// C2v with the diagonal mirrors: {E, C2, sigma_d, sigma_d'}, the residual
// unitary group of H0(alpha_x = alpha_y) + i*lambda*xy.
GroupTable c2v_diag_table() {
  GroupTable t;
  t.ops = {
      {false, 0, 0},  // E
      {false, 1, 1},  // C2
      {true, 0, 0},   // sigma_d
      {true, 1, 1},   // sigma_d'
  };
  t.irreps = {
      {"A1", {1, 1, 1, 1}},
      {"A2", {1, 1, -1, -1}},
      {"B1", {1, -1, 1, -1}},
      {"B2", {1, -1, -1, 1}},
  };
  t.dims = {1, 1, 1, 1};
  return t;
}

}  // namespace

std::map<std::string, double> character_weights(const Eigen::VectorXcd& v,
                                                const ProductBasis& basis,
                                                Group group) {
  if (v.size() != basis.dim())
    throw std::invalid_argument("character_weights: vector does not match basis");
  if (basis.x.size != basis.y.size)
    throw std::invalid_argument("character_weights: requires a square basis");
  GroupTable t;
  if (group == Group::C4v)
    t = c4v_table();
  else if (group == Group::C2v)
    t = c2v_diag_table();
  else
    throw std::invalid_argument("character_weights: only C4v and C2v supported");

  std::vector<Eigen::VectorXcd> images;
  images.reserve(t.ops.size());
  for (const SignedPerm& g : t.ops) images.push_back(apply(g, v, basis));

  const double order = double(t.ops.size());
  std::map<std::string, double> out;
  for (size_t r = 0; r < t.irreps.size(); ++r) {
    Eigen::VectorXcd p = Eigen::VectorXcd::Zero(v.size());
    for (size_t g = 0; g < t.ops.size(); ++g)
      p += double(t.irreps[r].second[g]) * images[g];
    p *= t.dims[r] / order;
    out[t.irreps[r].first] = p.squaredNorm();
  }
  return out;
}

std::vector<std::pair<int, int>> c4v_degenerate_pairs(const Spectrum& spec,
                                                      const ProductBasis& basis,
                                                      double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("c4v_degenerate_pairs: tol must be > 0");
  const int n = int(spec.eigenvalues.size());
  auto dominant = [&](int i) {
    int best = 0;
    double bw = 0.0;
    for (int r = 0; r < basis.dim(); ++r) {
      const double w = std::norm(spec.eigenvectors(r, i));
      if (w > bw) {
        bw = w;
        best = r;
      }
    }
    return basis.unindex(best);
  };
  auto doublet_weight = [&](int i, BasisIndex p) {
    const BasisIndex q{p.ny, p.nx};
    return std::norm(spec.eigenvectors(basis.index(p), i)) +
           std::norm(spec.eigenvectors(basis.index(q), i));
  };
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      if (std::abs(spec.eigenvalues[i] - spec.eigenvalues[j]) > tol) continue;
      const BasisIndex p = dominant(i);
      if (p.nx % 2 == p.ny % 2) continue;  // E states mix one even, one odd axis
      if (doublet_weight(i, p) < 0.5 || doublet_weight(j, p) < 0.5) continue;
      used[i] = used[j] = true;
      pairs.emplace_back(i, j);
      break;
    }
  }
  return pairs;
}

}  // namespace stosc
