#include "stosc/oracle1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

namespace stosc {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

struct Banded1D {
  // Symmetric, nonzero only at offsets 0, 2, 4.
  std::vector<Real> diag, off2, off4;
};

// H = -1/2 d^2/dx^2 + alpha x^4 in the scaled HO basis (H_HO = p^2 + q^2
// convention): beta^2 * (p^2/2) + alpha * beta^-4 * q^4.
Banded1D build_banded(int n, const Real& alpha, const Real& beta) {
  Banded1D m;
  const Real b2 = beta * beta;
  const Real bi4 = alpha / (b2 * b2);  // alpha / beta^4
  m.diag.resize(n);
  m.off2.resize(std::max(0, n - 2));
  m.off4.resize(std::max(0, n - 4));
  for (int k = 0; k < n; ++k)
    m.diag[k] = b2 * (2 * k + 1) / 4 + bi4 * 3 * (2 * k * k + 2 * k + 1) / 4;
  for (int k = 0; k + 2 < n; ++k)
    m.off2[k] = (-b2 / 4 + bi4 * (2 * k + 3) / 2) * sqrt(Real((k + 1)) * (k + 2));
  for (int k = 0; k + 4 < n; ++k)
    m.off4[k] = bi4 * sqrt(Real((k + 1)) * (k + 2) * (k + 3) * (k + 4)) / 4;
  return m;
}

// Eigenvalue count below sigma via LDL^T inertia.  Offsets are all even, so
// the matrix splits into two independent parity chains of half-bandwidth 2.
int count_below(const Banded1D& m, const Real& sigma) {
  const int n = int(m.diag.size());
  int neg = 0;
  for (int par = 0; par < 2; ++par) {
    std::vector<int> idx;
    for (int i = par; i < n; i += 2) idx.push_back(i);
    const int cn = int(idx.size());
    std::vector<Real> d(cn), l1(cn, Real(0)), l2(cn, Real(0));
    for (int i = 0; i < cn; ++i) {
      Real di = m.diag[idx[i]] - sigma;
      if (i >= 1) di -= d[i - 1] * l1[i - 1] * l1[i - 1];
      if (i >= 2) di -= d[i - 2] * l2[i - 2] * l2[i - 2];
      if (di == 0) di = Real("1e-45");
      d[i] = di;
      if (i + 1 < cn) {
        Real v = m.off2[idx[i]];
        if (i >= 1) v -= d[i - 1] * l1[i - 1] * l2[i - 1];
        l1[i] = v / di;
      }
      if (i + 2 < cn) l2[i] = m.off4[idx[i]] / di;
      if (d[i] < 0) ++neg;
    }
  }
  return neg;
}

Real nth_eigenvalue(const Banded1D& m, int n) {
  Real lo = 0, hi = 64;
  while (count_below(m, hi) < n + 1) hi *= 2;
  for (int it = 0; it < 180 && (hi - lo) > Real("1e-40") * hi; ++it) {
    const Real mid = (lo + hi) / 2;
    if (count_below(m, mid) >= n + 1)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

std::string to_digits(const Real& v, int digits) {
  return v.str(digits, std::ios_base::fmtflags(0));
}

int agreement_digits(const Real& a, const Real& b) {
  if (a == b) return 45;
  const Real rel = abs(a - b) / abs(b);
  return int(std::floor(-double(log10(rel))));
}

}  // namespace

std::vector<Level1D> quartic_levels_sized(double alpha, int count, int target_digits,
                                          int basis_a, int basis_b) {
  if (count < 1) throw std::invalid_argument("quartic_levels: count must be >= 1");
  if (target_digits < 1 || target_digits > 18)
    throw std::invalid_argument("quartic_levels: target_digits must be in 1..18");
  if (!(alpha > 0.0)) throw std::invalid_argument("quartic_levels: alpha must be > 0");

  const Real a(alpha);
  const Real beta = pow(4 * a, Real(1) / 6);
  const Banded1D ma = build_banded(basis_a, a, beta);
  const Banded1D mb = build_banded(basis_b, a, beta);

  std::vector<Level1D> out;
  int worst = 45;
  for (int n = 0; n < count; ++n) {
    const Real ea = nth_eigenvalue(ma, n);
    const Real eb = nth_eigenvalue(mb, n);
    const int agree = agreement_digits(ea, eb);
    worst = std::min(worst, agree);
    Level1D lv;
    lv.n = n;
    lv.alpha = alpha;
    lv.digits = to_digits(eb, std::min(agree, 22));
    lv.energy = double(eb);
    lv.certified_digits = std::min(agree, target_digits);
    out.push_back(std::move(lv));
  }
  if (worst < target_digits) throw PrecisionNotReached(std::max(worst, 0));
  return out;
}

std::vector<Level1D> quartic_levels(double alpha, int count, int target_digits) {
  // Sizes chosen so the two refinements agree well past 18 digits for the
  // level counts used here (n <= ~12).
  const int base = 100 + 6 * std::max(0, count - 6);
  return quartic_levels_sized(alpha, count, target_digits, base, base + 40);
}

std::vector<TableRow> compose_separable(const std::vector<Level1D>& x_levels,
                                        const std::vector<Level1D>& y_levels,
                                        int count) {
  if (count < 1) throw std::invalid_argument("compose_separable: count must be >= 1");
  if (x_levels.empty() || y_levels.empty())
    throw std::invalid_argument("compose_separable: need levels on both axes");

  std::vector<Real> ex, ey;
  for (const auto& l : x_levels) ex.emplace_back(l.digits);
  for (const auto& l : y_levels) ey.emplace_back(l.digits);

  struct Sum {
    Real e;
    int nx, ny;
  };
  std::vector<Sum> sums;
  for (size_t i = 0; i < ex.size(); ++i)
    for (size_t j = 0; j < ey.size(); ++j)
      sums.push_back({ex[i] + ey[j], int(i), int(j)});
  std::sort(sums.begin(), sums.end(),
            [](const Sum& a, const Sum& b) { return a.e < b.e; });

  if (size_t(count) > sums.size())
    throw std::runtime_error("compose_separable: need more levels");
  // Any sum using a level beyond the supplied ranges is at least this large;
  // the requested count is complete only below that bound.
  const Real bound = std::min(ex.back() + ey.front(), ex.front() + ey.back());
  if (!(sums[count - 1].e < bound))
    throw std::runtime_error("compose_separable: need more levels for requested count");

  std::vector<TableRow> rows;
  for (int k = 0; k < count; ++k) {
    TableRow r;
    r.index = {sums[k].nx, sums[k].ny};
    r.digits = sums[k].e.str(20, std::ios_base::fmtflags(0));
    r.energy = double(sums[k].e);
    r.ci = basis_irrep(r.index, Group::Ci);
    r.d2h = basis_irrep(r.index, Group::D2h);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace stosc
