#pragma once

// Complete elliptic integrals, theta functions and singular moduli.
//
// Argument convention: every function here takes the modulus k, never the
// parameter m = k^2. In Mathematica notation ell_k(k) == EllipticK[k^2].

#include "piforge/big_real.hpp"
#include "piforge/rational.hpp"

namespace piforge {

/// Arithmetic-geometric mean of two positive numbers.
/// Iterates until |a_n - b_n| < 2^-prec a_n; accurate to 2^(-prec+4).
BigReal agm(const BigReal& a, const BigReal& b, Bits prec);

struct EllipticPair {
  BigReal bigK;
  BigReal bigE;
};

/// K(k) = pi / (2 agm(1, k')). Requires 0 <= k < 1; accurate to 2^(-prec+8).
BigReal ell_k(const BigReal& k, Bits prec);

/// E(k) by the AGM side sum E = K (1 - sum 2^(n-1) c_n^2).
BigReal ell_e(const BigReal& k, Bits prec);

/// K and E in one AGM pass, with the complementary modulus supplied by the
/// caller. Use this when k' is known more accurately than sqrt(1 - k^2)
/// (k close to 1).
EllipticPair complete_integrals(const BigReal& k, const BigReal& kprime, Bits prec);

/// dK/dk for a bare modulus: E/(k k'^2) - K/k, with the k -> 0 limit 0.
BigReal dK_dk(const BigReal& k, Bits prec);

/// Nome e^(-pi sqrt(r)) for rational r > 0.
BigReal nome(const ExactRational& r, Bits prec);

/// Jacobi theta null values for 0 <= q < 1. Series are cut once the
/// geometric tail majorant drops below 2^(-prec-8).
BigReal theta2(const BigReal& q, Bits prec);
BigReal theta3(const BigReal& q, Bits prec);
BigReal theta4(const BigReal& q, Bits prec);

/// f(-q) = prod_{n>=1} (1 - q^n) for 0 <= q < 1.
BigReal eta_f(const BigReal& q, Bits prec);

/// Everything about the singular modulus k_r that later stages need.
///
/// Invariants: 0 < k < 1, k^2 + k'^2 = 1, K(k')/K(k) = sqrt(r) and
/// q = e^(-pi sqrt(r)), each to within a few ulps of prec.
struct ModulusContext {
  ExactRational r;
  BigReal q;
  BigReal k;
  BigReal kprime;
  BigReal bigK;       ///< K(k_r), also written K[r]
  BigReal bigE;       ///< E(k_r)
  BigReal bigKprime;  ///< K(k'_r) = sqrt(r) K[r]
  Bits prec = kDefaultPrecision;

  BigReal sqrt_r() const { return sqrt_rational(r, prec); }
};

/// k_r = theta2(q)^2 / theta3(q)^2 with q = nome(r); for r < 1 the
/// computation runs at 1/r and swaps k with k'.
/// Throws PrecisionError when k_r^2 (or k'_r^2) falls below 2^-prec.
ModulusContext singular_modulus(const ExactRational& r, Bits prec);

/// dK/dk = E/(k(1-k^2)) - K/k at the context modulus.
BigReal dK_dk(const ModulusContext& ctx);

}  // namespace piforge
