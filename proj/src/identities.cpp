#include "piforge/identities.hpp"

#include <algorithm>
#include <string>

#include "piforge/alpha.hpp"
#include "piforge/elliptic.hpp"
#include "piforge/errors.hpp"
#include "piforge/rogers_ramanujan.hpp"

namespace piforge {
namespace {

constexpr Bits kCheckGuard = 4 * kGuardBits;

std::string at(const ExactRational& r) { return " at r=" + format_rational(r); }
std::string at(long p, const ExactRational& r) {
  return " at (p,r)=(" + std::to_string(p) + "," + format_rational(r) + ")";
}

IdentityCheck make(std::string name, const BigReal& lhs, const BigReal& rhs, Bits prec, double target = 60) {
  return {std::move(name), lhs.with_prec(prec), rhs.with_prec(prec), scaled_target(target, prec)};
}

BigReal sqrt_of(long n, Bits prec) { return sqrt(BigReal(n, prec)); }

// Quantities shared by the p-multiplier identities.
struct PairData {
  ModulusContext base;
  ModulusContext high;
  BigReal a;
  BigReal a_high;
  BigReal m;
  BigReal pi;
};

PairData pair_data(long p, const ExactRational& r, Bits wp) {
  ModulusContext base = singular_modulus(r, wp);
  ModulusContext high = singular_modulus(ExactRational(p * p) * r, wp);
  BigReal a = alpha_direct(r, wp).value;
  BigReal a_high = alpha_direct(ExactRational(p * p) * r, wp).value;
  BigReal m = base.bigK / high.bigK;
  return {std::move(base), std::move(high), std::move(a), std::move(a_high), std::move(m), const_pi(wp)};
}

}  // namespace

double scaled_target(double digits_at_512, Bits prec) {
  return digits_at_512 * std::min(1.0, static_cast<double>(prec) / 512.0);
}

IdentityCheck eisenstein_square_nome(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  ModulusContext c = singular_modulus(r, wp);
  BigReal a = alpha_direct(r, wp).value;
  BigReal pi = const_pi(wp);
  BigReal sr = c.sqrt_r();
  BigReal lhs = eisenstein_p(square(c.q), wp);
  BigReal rhs = 3 / (pi * sr) + (1 + square(c.k) - 3 * a / sr) * 4 * square(c.bigK) / square(pi);
  return make("Eisenstein sum P(q^2)" + at(r), lhs, rhs, prec);
}

IdentityCheck eisenstein_nome(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  ModulusContext c = singular_modulus(r, wp);
  BigReal a = alpha_direct(r, wp).value;
  BigReal pi = const_pi(wp);
  BigReal sr = c.sqrt_r();
  BigReal lhs = eisenstein_p(c.q, wp);
  BigReal rhs = 6 / (pi * sr) + 4 * square(c.bigK) * (sr * (1 + square(c.k)) - 6 * a) / (square(pi) * sr);
  return make("Eisenstein sum P(q)" + at(r), lhs, rhs, prec);
}

IdentityCheck multiplier_alpha_relation(long p, const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  PairData d = pair_data(p, r, wp);
  BigReal sr = d.base.sqrt_r();
  BigReal m2 = square(d.m);
  BigReal lhs = d.a_high / (m2 * sr);
  BigReal rhs = -(1 + square(d.base.k)) / 3 + p * (1 + square(d.high.k)) / (3 * m2) +
                square(d.pi) * t_sum(p, r, wp) / (12 * square(d.base.bigK)) + d.a / sr;
  return make("multiplier-alpha relation" + at(p, r), lhs, rhs, prec);
}

IdentityCheck t_sum_closed_form(long p, const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  PairData d = pair_data(p, r, wp);
  BigReal sr = d.base.sqrt_r();
  BigReal m2 = square(d.m);
  BigReal rhs = 4 * square(d.base.bigK) / (square(d.pi) * sr * m2) *
                (3 * d.a_high - p * sr * (1 + square(d.high.k)) + (sr * (1 + square(d.base.k)) - 3 * d.a) * m2);
  return make("T sum closed form" + at(p, r), t_sum(p, r, wp), rhs, prec);
}

IdentityCheck eisenstein_high_nome(long p, const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  PairData d = pair_data(p, r, wp);
  BigReal sr = d.base.sqrt_r();
  BigReal lhs = eisenstein_p(pow(d.base.q, 2 * p), wp);
  BigReal rhs = 3 / (d.pi * sr * p) + 4 * square(d.base.bigK) / (square(d.pi) * sr * p * square(d.m)) *
                                          (p * sr * (1 + square(d.high.k)) - 3 * d.a_high);
  return make("Eisenstein sum P(q^2p)" + at(p, r), lhs, rhs, prec);
}

IdentityCheck t5_eta_form(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  BigReal q = nome(r, wp);
  BigReal q2 = square(q);
  BigReal x = pow(eta_f(q2, wp), 6);
  BigReal y = pow(eta_f(pow(q, 10), wp), 6);
  BigReal rhs = -4 * sqrt(square(x) + 22 * q2 * x * y + 125 * square(q2) * square(y)) / root(x * y, 6);
  return make("T_5 eta-product form" + at(r), t_sum(5, r, wp), rhs, prec);
}

IdentityCheck eta_sixth_power(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  ModulusContext c = singular_modulus(r, wp);
  BigReal pi = const_pi(wp);
  BigReal lhs = pow(eta_f(square(c.q), wp), 6);
  BigReal rhs = 2 * c.k * c.kprime * pow(c.bigK, 3) / (pow(pi, 3) * sqrt(c.q));
  return make("eta sixth power" + at(r), lhs, rhs, prec);
}

IdentityCheck t5_rogers_ramanujan_form(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  ModulusContext c = singular_modulus(r, wp);
  RRValue rr = rr_eval(square(c.q), wp);
  BigReal pi = const_pi(wp);
  BigReal kk23 = square(root(c.k * c.kprime, 3));
  BigReal rhs = -4 * root(BigReal(4, wp), 3) * square(c.bigK) / square(pi) * kk23 * (rr.R5 + 1 / rr.R5) /
                pow(root(rr.A, 6), 5);
  return make("T_5 Rogers-Ramanujan form" + at(r), t_sum(5, r, wp), rhs, prec);
}

IdentityCheck quintic_multiplier_form(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  ModulusContext c = singular_modulus(r, wp);
  ModulusContext h = singular_modulus(25 * r, wp);
  return make("m5 algebraic form" + at(r), c.bigK / h.bigK, quintic_multiplier_algebraic(c, h), prec);
}

IdentityCheck quintic_multiplier_equation(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  ModulusContext c = singular_modulus(r, wp);
  ModulusContext h = singular_modulus(25 * r, wp);
  return make("m5 quintic equation" + at(r), quintic_multiplier_residual(c.bigK / h.bigK, c), BigReal(wp), prec);
}

IdentityCheck rr_eta_quotient(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  BigReal q = nome(r, wp);
  BigReal q2 = square(q);
  BigReal x = pow(eta_f(q2, wp), 6);
  BigReal y = pow(eta_f(pow(q, 10), wp), 6);
  return make("A_r eta quotient" + at(r), rr_eval(q2, wp).A, x / (q2 * y), prec);
}

IdentityCheck rr_algebraic_form(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  return make("A_r algebraic form" + at(r), a_r_from_nome(r, wp), a_r_algebraic(r, wp), prec);
}

IdentityCheck rr_quarter_form(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  ModulusContext c = singular_modulus(r, wp);
  ModulusContext h = singular_modulus(25 * r, wp);
  BigReal m5 = c.bigK / h.bigK;
  BigReal rhs = square(c.kprime / h.kprime) * sqrt(c.k / h.k) * pow(m5, 3);
  return make("A_{r/4} from k_r, k_25r" + at(r), a_r_from_nome(ExactRational(r / 4), wp), rhs, prec);
}

IdentityCheck rr_bracket_form(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  RRValue rr = rr_eval(square(nome(r, wp)), wp);
  return make("R^-5 + R^5 bracket" + at(r), rr.R5 + 1 / rr.R5, sqrt(125 + 22 * rr.A + square(rr.A)), prec);
}

std::vector<int> y_table_indices() { return {1, 2, 3, 4, 5, 6, 9, 12, 14, 17}; }

BigReal y_table_value(int n, Bits prec) {
  const Bits wp = prec + kGuardBits;
  auto s = [&](long v) { return sqrt_of(v, wp); };
  BigReal v(wp);
  switch (n) {
    case 1: v = 5 * s(5) / 8; break;
    case 2: v = 5 * (5 + 2 * s(5)) / 8; break;
    case 3: v = 5 * (25 + 11 * s(5)) / 16; break;
    case 4: v = 5 * (25 + 13 * s(5) + 5 * sqrt(58 + 26 * s(5))) / 16; break;
    case 5: v = 125 * (2 + s(5)) / 8; break;
    case 6: v = 5 * (50 + 35 * s(2) + 3 * sqrt(5 * (99 + 70 * s(2)))) / 8; break;
    case 9: v = 5 * (225 + 104 * s(5) + 10 * sqrt(1047 + 468 * s(5))) / 8; break;
    case 12: v = 5 * (1690 + 975 * s(3) + 29 * sqrt(6755 + 3900 * s(3))) / 16; break;
    case 14: v = 5 * (1850 + 585 * s(10) + 7 * sqrt(5 * (27379 + 8658 * s(10)))) / 8; break;
    case 17: v = 5 * (5360 + 585 * s(85) + 4 * sqrt(3613670 + 391950 * s(85))) / 8; break;
    default: throw DomainError("y_table_value: no tabulated value for n = " + std::to_string(n));
  }
  return v.with_prec(prec);
}

IdentityCheck y_table_check(int n, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  return make("Y(" + std::to_string(n) + "/5) closed form", y_value(ExactRational(n, 5), wp), y_table_value(n, wp),
              prec, 40);
}

namespace {

BigReal quadrupling_x(Bits wp) {
  BigReal s85 = sqrt_of(85, wp);
  mpz_class a1("2891581250"), b1("313636050"), c("12960"), a2("99557521554"), b2("10798529365");
  return BigReal(a1, wp) + BigReal(b1, wp) * s85 + BigReal(c, wp) * sqrt(BigReal(a2, wp) + BigReal(b2, wp) * s85);
}

IdentityCheck quadrupling(int sign, std::string name, Bits prec) {
  const Bits wp = prec + kCheckGuard;
  BigReal x = quadrupling_x(wp);
  BigReal factor = (sqrt(x + 4) + sign * sqrt(x)) / 2;
  return make(std::move(name), y_value(ExactRational(68, 5), wp), y_value(ExactRational(17, 5), wp) * factor, prec,
              30);
}

}  // namespace

IdentityCheck y_quadrupling(Bits prec) { return quadrupling(1, "Y(68/5) from Y(17/5)", prec); }

IdentityCheck y_quadrupling_minus_sign(Bits prec) {
  return quadrupling(-1, "Y(68/5) from Y(17/5), minus-sign reading", prec);
}

std::vector<IdentityCheck> modular_identity_suite(Bits prec) {
  const ExactRational one(1), two(2), three(3);
  std::vector<IdentityCheck> out;
  out.push_back(eisenstein_square_nome(three, prec));
  out.push_back(eisenstein_nome(two, prec));
  out.push_back(t_sum_closed_form(5, one, prec));
  out.push_back(eisenstein_high_nome(5, one, prec));
  out.push_back(t5_eta_form(one, prec));
  out.push_back(eta_sixth_power(two, prec));
  out.push_back(t5_rogers_ramanujan_form(one, prec));
  out.push_back(t5_rogers_ramanujan_form(two, prec));
  out.push_back(quintic_multiplier_form(one, prec));
  out.push_back(quintic_multiplier_equation(one, prec));
  return out;
}

std::vector<IdentityCheck> rogers_ramanujan_suite(Bits prec) {
  std::vector<IdentityCheck> out;
  for (int n : y_table_indices()) out.push_back(y_table_check(n, prec));
  out.push_back(rr_algebraic_form(ExactRational(1), prec));
  out.push_back(rr_algebraic_form(ExactRational(2), prec));
  out.push_back(y_quadrupling(prec));
  return out;
}

}  // namespace piforge
