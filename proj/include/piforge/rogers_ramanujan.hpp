#pragma once

#include "piforge/big_real.hpp"
#include "piforge/rational.hpp"

namespace piforge {

/// R(q) together with the derived quantity A = R^-5 - 11 - R^5.
struct RRValue {
  BigReal q;
  BigReal R;
  BigReal R5;  ///< R^5, kept to avoid recomputing the fifth power
  BigReal A;
  Bits prec = kDefaultPrecision;
};

/// Rogers-Ramanujan continued fraction from its product form
///   R(q) = q^(1/5) prod_{n>=1} (1 - q^n)^chi(n),
/// chi(n) = +1 for n = +-1 mod 5, -1 for n = +-2 mod 5, 0 otherwise.
/// Requires 0 < q < 1; the product is cut when q^n / (1 - q) < 2^-(prec+8).
RRValue rr_eval(const BigReal& q, Bits prec);

/// A_r = R^-5(q^2) - 11 - R^5(q^2) with q = e^(-pi sqrt(r)).
BigReal a_r_from_nome(const ExactRational& r, Bits prec);

/// A_r from singular moduli alone:
///   A_r = (k k' / (w w'))^2 m5^3,  w = sqrt(k_r k_25r), w' = sqrt(k'_r k'_25r),
///   m5 = w/k + w'/k' - w w'/(k k').
BigReal a_r_algebraic(const ExactRational& r, Bits prec);

/// Divisor turning A_{r/5} into the tabulated Y values. Fixed by matching
/// Y(1/5) = 5 sqrt(5)/8; the competing constant 6 misses every table entry.
inline constexpr long kYNormalization = 8;
inline constexpr long kYNormalizationRejected = 6;

/// Y at argument s = r/5, i.e. A_s / 8.
BigReal y_value(const ExactRational& s, Bits prec);

}  // namespace piforge
