#include "piforge/elliptic.hpp"

#include <cmath>
#include <string>

#include "piforge/errors.hpp"

namespace piforge {
namespace {

void require_nome(const BigReal& q, const char* who) {
  if (q.sign() < 0 || q >= 1L) throw DomainError(std::string(who) + ": nome must lie in [0, 1)");
}

void require_modulus(const BigReal& k, const char* who) {
  if (k.sign() < 0 || k >= 1L) throw DomainError(std::string(who) + ": modulus must lie in [0, 1)");
}

// Stops a positive series once term / (1 - q) < 2^-wp, which bounds every
// tail below because successive ratios are at most q.
bool tail_small(const BigReal& term, const BigReal& one_minus_q, const BigReal& eps) {
  return abs(term) < eps * one_minus_q;
}

}  // namespace

BigReal agm(const BigReal& a, const BigReal& b, Bits prec) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("agm: arguments must be positive");
  const Bits wp = prec + kGuardBits;
  BigReal x = a.with_prec(wp);
  BigReal y = b.with_prec(wp);
  const BigReal eps = pow2(-prec, wp);
  while (abs(x - y) > eps * x) {
    BigReal next = ldexp(x + y, -1);
    y = sqrt(x * y);
    x = std::move(next);
  }
  return ldexp(x + y, -1).with_prec(prec);
}

EllipticPair complete_integrals(const BigReal& k, const BigReal& kprime, Bits prec) {
  require_modulus(k, "complete_integrals");
  if (kprime.sign() <= 0) throw DomainError("complete_integrals: k' must be positive");
  const Bits wp = prec + 2 * kGuardBits;
  BigReal a(1, wp);
  BigReal b = kprime.with_prec(wp);
  BigReal c = k.with_prec(wp);
  // side = sum_{n>=0} 2^(n-1) c_n^2
  BigReal side = ldexp(square(c), -1);
  // Stop short of wp so ulp-level jitter between a and b cannot stall the loop;
  // the quadratic step after the last test still lands below 2^-wp.
  const BigReal eps = pow2(-(prec + kGuardBits), wp);
  long n = 0;
  while (abs(a - b) > eps * a) {
    BigReal next = ldexp(a + b, -1);
    c = square(c) / (4 * next);  // c_{n+1} = (a_n - b_n)/2 without cancellation
    b = sqrt(a * b);
    a = std::move(next);
    ++n;
    side += ldexp(square(c), n - 1);
  }
  BigReal pi = const_pi(wp);
  BigReal bigK = pi / (a + b);  // pi / (2 mean)
  BigReal bigE = bigK * (1 - side);
  return {bigK.with_prec(prec), bigE.with_prec(prec)};
}

BigReal ell_k(const BigReal& k, Bits prec) {
  require_modulus(k, "ell_k");
  const Bits wp = prec + kGuardBits;
  BigReal kw = k.with_prec(wp);
  BigReal kprime = sqrt((1 - kw) * (1 + kw));
  BigReal pi = const_pi(wp);
  return (pi / (2 * agm(BigReal(1, wp), kprime, wp))).with_prec(prec);
}

BigReal ell_e(const BigReal& k, Bits prec) {
  require_modulus(k, "ell_e");
  const Bits wp = prec + kGuardBits;
  BigReal kw = k.with_prec(wp);
  BigReal kprime = sqrt((1 - kw) * (1 + kw));
  return complete_integrals(kw, kprime, wp).bigE.with_prec(prec);
}

BigReal dK_dk(const BigReal& k, Bits prec) {
  require_modulus(k, "dK_dk");
  if (k.is_zero()) return BigReal(prec);
  const Bits wp = prec + 2 * kGuardBits;
  BigReal kw = k.with_prec(wp);
  BigReal kp2 = (1 - kw) * (1 + kw);
  auto [bigK, bigE] = complete_integrals(kw, sqrt(kp2), wp);
  return (bigE / (kw * kp2) - bigK / kw).with_prec(prec);
}

BigReal dK_dk(const ModulusContext& ctx) {
  const Bits wp = ctx.prec + kGuardBits;
  BigReal k = ctx.k.with_prec(wp);
  BigReal kp2 = square(ctx.kprime.with_prec(wp));
  return (ctx.bigE.with_prec(wp) / (k * kp2) - ctx.bigK.with_prec(wp) / k).with_prec(ctx.prec);
}

BigReal nome(const ExactRational& r, Bits prec) {
  if (sgn(r) <= 0) throw DomainError("nome: r must be positive");
  const Bits wp = prec + kGuardBits;
  return exp(-(const_pi(wp) * sqrt_rational(r, wp))).with_prec(prec);
}

BigReal theta3(const BigReal& q, Bits prec) {
  require_nome(q, "theta3");
  const Bits wp = prec + kGuardBits;
  BigReal qw = q.with_prec(wp);
  BigReal sum(1, wp);
  if (qw.is_zero()) return sum.with_prec(prec);
  const BigReal eps = pow2(-wp, wp);
  const BigReal one_minus_q = 1 - qw;
  const BigReal q2 = square(qw);
  BigReal term = qw;            // q^(n^2)
  BigReal ratio = qw * q2;      // q^(2n+1)
  while (!tail_small(term, one_minus_q, eps)) {
    sum += ldexp(term, 1);
    term *= ratio;
    ratio *= q2;
  }
  return sum.with_prec(prec);
}

BigReal theta4(const BigReal& q, Bits prec) {
  require_nome(q, "theta4");
  const Bits wp = prec + kGuardBits;
  BigReal qw = q.with_prec(wp);
  BigReal sum(1, wp);
  if (qw.is_zero()) return sum.with_prec(prec);
  const BigReal eps = pow2(-wp, wp);
  const BigReal one_minus_q = 1 - qw;
  const BigReal q2 = square(qw);
  BigReal term = qw;
  BigReal ratio = qw * q2;
  bool negative = true;
  while (!tail_small(term, one_minus_q, eps)) {
    if (negative) sum -= ldexp(term, 1);
    else sum += ldexp(term, 1);
    negative = !negative;
    term *= ratio;
    ratio *= q2;
  }
  return sum.with_prec(prec);
}

BigReal theta2(const BigReal& q, Bits prec) {
  require_nome(q, "theta2");
  const Bits wp = prec + kGuardBits;
  BigReal qw = q.with_prec(wp);
  if (qw.is_zero()) return BigReal(prec);
  // 2 q^(1/4) sum_{n>=0} q^(n(n+1))
  const BigReal eps = pow2(-wp, wp);
  const BigReal one_minus_q = 1 - qw;
  const BigReal q2 = square(qw);
  BigReal sum(1, wp);
  BigReal term = q2;     // q^(n(n+1)) at n = 1
  BigReal ratio = square(q2);  // q^(2(n+1)) at n = 1
  while (!tail_small(term, one_minus_q, eps)) {
    sum += term;
    term *= ratio;
    ratio *= q2;
  }
  return (ldexp(root(qw, 4), 1) * sum).with_prec(prec);
}

BigReal eta_f(const BigReal& q, Bits prec) {
  require_nome(q, "eta_f");
  const Bits wp = prec + kGuardBits;
  BigReal qw = q.with_prec(wp);
  BigReal product(1, wp);
  if (qw.is_zero()) return product.with_prec(prec);
  const BigReal eps = pow2(-wp, wp);
  const BigReal one_minus_q = 1 - qw;
  BigReal power = qw;
  // log of the omitted tail is about -sum_{m>n} q^m <= q^(n+1)/(1-q).
  while (!tail_small(power, one_minus_q, eps)) {
    product *= 1 - power;
    power *= qw;
  }
  return product.with_prec(prec);
}

namespace {

struct ThetaModulus {
  BigReal k;
  BigReal kprime;
};

ThetaModulus theta_modulus(const ExactRational& r, Bits wp) {
  BigReal q = nome(r, wp);
  BigReal t3 = square(theta3(q, wp));
  return {square(theta2(q, wp)) / t3, square(theta4(q, wp)) / t3};
}

}  // namespace

ModulusContext singular_modulus(const ExactRational& r, Bits prec) {
  if (sgn(r) <= 0) throw DomainError("singular_modulus: r must be positive");
  if (prec < kMinPrecision) throw DomainError("singular_modulus: precision below 64 bits");
  const Bits wp = prec + 4 * kGuardBits;

  // Theta series converge slowly for q near 1, so r < 1 goes through the
  // symmetry k_r = k'_{1/r}.
  ThetaModulus tm = r >= 1 ? theta_modulus(r, wp) : theta_modulus(1 / r, wp);
  if (r < 1) std::swap(tm.k, tm.kprime);

  const BigReal& smaller = r >= 1 ? tm.k : tm.kprime;
  if (smaller.is_zero() || square(smaller) < pow2(-prec, wp)) {
    // log2 k ~ 2 - pi sqrt(r) / (2 ln 2); need more bits than -2 log2 k.
    const long log2_k = smaller.is_zero() ? -prec : smaller.exponent2();
    const long need = -2 * log2_k + 64;
    throw PrecisionError("insufficient precision: k_r^2 is below 2^-" + std::to_string(prec) +
                             " for r = " + format_rational(r),
                         need);
  }

  auto [bigK, bigE] = complete_integrals(tm.k, tm.kprime, wp);
  BigReal bigKprime = complete_integrals(tm.kprime, tm.k, wp).bigK;

  ModulusContext ctx;
  ctx.r = r;
  ctx.q = nome(r, prec);
  ctx.k = tm.k.with_prec(prec);
  ctx.kprime = tm.kprime.with_prec(prec);
  ctx.bigK = bigK.with_prec(prec);
  ctx.bigE = bigE.with_prec(prec);
  ctx.bigKprime = bigKprime.with_prec(prec);
  ctx.prec = prec;
  return ctx;
}

}  // namespace piforge
