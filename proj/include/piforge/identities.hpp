#pragma once

// Modular identities and published constants used to cross-check the
// alpha and Rogers-Ramanujan engines. Each check evaluates both sides
// independently; none of them feeds a computation route.

#include <string>
#include <vector>

#include "piforge/big_real.hpp"
#include "piforge/rational.hpp"

namespace piforge {

struct IdentityCheck {
  std::string name;
  BigReal lhs;
  BigReal rhs;
  double required_digits = 0;

  double digits() const { return matched_digits(lhs, rhs); }
  bool passed() const { return digits() >= required_digits; }
};

/// Digit target scaled to the working precision: full target at 512 bits,
/// proportionally less below.
double scaled_target(double digits_at_512, Bits prec);

// -- Eisenstein sums against elliptic data --------------------------------

/// P(q^2) = 3/(pi sqrt r) + (1 + k^2 - 3 a(r)/sqrt r) 4K^2/pi^2.
IdentityCheck eisenstein_square_nome(const ExactRational& r, Bits prec);

/// P(q) = 6/(pi sqrt r) + 4K^2 (sqrt r (1 + k^2) - 6 a(r)) / (pi^2 sqrt r).
IdentityCheck eisenstein_nome(const ExactRational& r, Bits prec);

/// a(p^2 r)/(m^2 sqrt r) = -(1+k^2)/3 + p(1 + k_{p^2 r}^2)/(3m^2) + pi^2 T/(12K^2) + a(r)/sqrt r.
IdentityCheck multiplier_alpha_relation(long p, const ExactRational& r, Bits prec);

/// T_{p,r} from the Lambert sums against its closed form in K, m_p and alpha values.
IdentityCheck t_sum_closed_form(long p, const ExactRational& r, Bits prec);

/// P(q^(2p)) = 3/(pi sqrt(r) p) + 4K^2 (p sqrt r (1 + k_{p^2 r}^2) - 3 a(p^2 r)) / (pi^2 sqrt(r) p m^2).
IdentityCheck eisenstein_high_nome(long p, const ExactRational& r, Bits prec);

/// T_{5,r} = -4 (x^2 + 22 q^2 x y + 125 q^4 y^2)^(1/2) / (x y)^(1/6),
/// x = f(-q^2)^6, y = f(-q^10)^6.
IdentityCheck t5_eta_form(const ExactRational& r, Bits prec);

/// f(-q^2)^6 = 2 k k' K^3 / (pi^3 sqrt q).
IdentityCheck eta_sixth_power(const ExactRational& r, Bits prec);

/// T_{5,r} = -4 * 2^(2/3) (K^2/pi^2) (k k')^(2/3) (R^-5 + R^5) / A^(5/6), R = R(q^2).
IdentityCheck t5_rogers_ramanujan_form(const ExactRational& r, Bits prec);

/// K[r]/K[25r] against w/k + w'/k' - w w'/(k k').
IdentityCheck quintic_multiplier_form(const ExactRational& r, Bits prec);

/// (5u - 1)^5 (1 - u) - 256 k^2 k'^2 u at u = K[25r]/K[r]; rhs is zero.
IdentityCheck quintic_multiplier_equation(const ExactRational& r, Bits prec);

// -- Rogers-Ramanujan ------------------------------------------------------

/// A_r = x / (q^2 y), x = f(-q^2)^6, y = f(-q^10)^6.
IdentityCheck rr_eta_quotient(const ExactRational& r, Bits prec);

/// A_r from R(q^2) against the singular-moduli form.
IdentityCheck rr_algebraic_form(const ExactRational& r, Bits prec);

/// A_{r/4} = (k'_r/k'_25r)^2 sqrt(k_r/k_25r) m5^3.
IdentityCheck rr_quarter_form(const ExactRational& r, Bits prec);

/// R^-5 + R^5 = sqrt(125 + 22A + A^2).
IdentityCheck rr_bracket_form(const ExactRational& r, Bits prec);

/// Tabulated Y(n/5) closed forms, n in {1,2,3,4,5,6,9,12,14,17}.
std::vector<int> y_table_indices();
BigReal y_table_value(int n, Bits prec);
IdentityCheck y_table_check(int n, Bits prec);

/// Y(68/5) = Y(17/5) (sqrt(x+4) + sqrt(x))/2 with the published x.
IdentityCheck y_quadrupling(Bits prec);
/// The same relation with the minus sign, as published. Fails by a factor of about x.
IdentityCheck y_quadrupling_minus_sign(Bits prec);

/// The list of identities checked at the fixed (p, r) pairs used by verify-paper.
std::vector<IdentityCheck> modular_identity_suite(Bits prec);
/// Y table, algebraic A_r at r = 1, 2, and the r = 68 relation.
std::vector<IdentityCheck> rogers_ramanujan_suite(Bits prec);

}  // namespace piforge
