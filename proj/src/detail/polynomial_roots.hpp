#pragma once

#include <vector>

#include "piforge/big_real.hpp"

namespace piforge::detail {

struct ComplexRoot {
  BigReal re;
  BigReal im;
};

/// All complex roots of sum_i coeffs[i] x^i (coeffs[last] != 0) by the
/// Weierstrass (Durand-Kerner) iteration at the given precision.
std::vector<ComplexRoot> polynomial_roots(const std::vector<BigReal>& coeffs, Bits prec);

/// Value of the real polynomial at x.
BigReal polynomial_value(const std::vector<BigReal>& coeffs, const BigReal& x);

/// Newton refinement of a simple real root.
BigReal newton_polish(const std::vector<BigReal>& coeffs, BigReal x, Bits prec);

}  // namespace piforge::detail
