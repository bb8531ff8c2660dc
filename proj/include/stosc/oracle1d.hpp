#pragma once

#include <string>
#include <vector>

#include "stosc/symmetry.hpp"

namespace stosc {

// One eigenvalue of the 1D quartic oscillator -1/2 d^2/dx^2 + alpha x^4.
struct Level1D {
  int n = 0;
  double alpha = 1.0;
  std::string digits;   // decimal value, certified significant digits
  double energy = 0.0;  // same value rounded to double
  int certified_digits = 0;
};

struct PrecisionNotReached : std::runtime_error {
  int achieved_digits;
  explicit PrecisionNotReached(int achieved)
      : std::runtime_error("oracle1d: certification failed, achieved " +
                          std::to_string(achieved) + " digits"),
        achieved_digits(achieved) {}
};

// The lowest `count` eigenvalues certified to `target_digits` significant
// digits.  Certification is agreement between two internal basis-size
// refinements of an extended-precision variational solve (Sturm-count
// bisection on the banded scaled-HO-basis matrix).
std::vector<Level1D> quartic_levels(double alpha, int count, int target_digits);

// Internal-parameter variant used by tests to provoke certification failure.
std::vector<Level1D> quartic_levels_sized(double alpha, int count, int target_digits,
                                          int basis_a, int basis_b);

struct TableRow {
  BasisIndex index;
  std::string digits;   // separable sum, 18+ significant digits
  double energy = 0.0;
  IrrepLabel ci;
  IrrepLabel d2h;
};

// The `count` smallest separable sums E_{n_x} + E_{n_y}, ascending, with
// quantum numbers and both parity labels.  Throws if the supplied 1D levels
// cannot guarantee completeness of the requested count.
std::vector<TableRow> compose_separable(const std::vector<Level1D>& x_levels,
                                        const std::vector<Level1D>& y_levels,
                                        int count);

}  // namespace stosc
