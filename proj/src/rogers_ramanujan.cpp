#include "piforge/rogers_ramanujan.hpp"

#include "piforge/elliptic.hpp"
#include "piforge/errors.hpp"

namespace piforge {

RRValue rr_eval(const BigReal& q, Bits prec) {
  if (q.sign() <= 0 || q >= 1L) throw DomainError("rr_eval: nome must lie in (0, 1)");
  const Bits wp = prec + 2 * kGuardBits;
  BigReal qw = q.with_prec(wp);
  const BigReal eps = pow2(-(prec + kGuardBits), wp);
  const BigReal one_minus_q = 1 - qw;
  BigReal numerator(1, wp);
  BigReal denominator(1, wp);
  BigReal power = qw;
  for (long n = 1; !(power < eps * one_minus_q); ++n, power *= qw) {
    switch (n % 5) {
      case 1:
      case 4:
        numerator *= 1 - power;
        break;
      case 2:
      case 3:
        denominator *= 1 - power;
        break;
      default:
        break;
    }
  }
  BigReal R = root(qw, 5) * numerator / denominator;
  BigReal R5 = pow(R, 5);
  BigReal A = 1 / R5 - 11 - R5;
  return {q.with_prec(prec), R.with_prec(prec), R5.with_prec(prec), A.with_prec(prec), prec};
}

BigReal a_r_from_nome(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kGuardBits;
  return rr_eval(square(nome(r, wp)), wp).A.with_prec(prec);
}

BigReal a_r_algebraic(const ExactRational& r, Bits prec) {
  const Bits wp = prec + 4 * kGuardBits;
  ModulusContext c1 = singular_modulus(r, wp);
  ModulusContext c25 = singular_modulus(25 * r, wp);
  BigReal w = sqrt(c1.k * c25.k);
  BigReal wp_ = sqrt(c1.kprime * c25.kprime);
  BigReal kk = c1.k * c1.kprime;
  BigReal m5 = w / c1.k + wp_ / c1.kprime - w * wp_ / kk;
  return (square(kk / (w * wp_)) * pow(m5, 3)).with_prec(prec);
}

BigReal y_value(const ExactRational& s, Bits prec) {
  if (sgn(s) <= 0) throw DomainError("y_value: argument must be positive");
  return (a_r_from_nome(s, prec + kGuardBits) / kYNormalization).with_prec(prec);
}

}  // namespace piforge
