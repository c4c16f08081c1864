#include "piforge/alpha.hpp"

#include <string>
#include <vector>

#include "detail/polynomial_roots.hpp"
#include "piforge/errors.hpp"
#include "piforge/rogers_ramanujan.hpp"

namespace piforge {
namespace {

constexpr Bits kAlphaGuard = 4 * kGuardBits;

void check_window(const AlphaValue& v) {
  if (v.value.sign() <= 0) throw VerificationError("alpha: value not positive for r = " + format_rational(v.r));
  if (v.r >= 1 && !(v.value < sqrt_rational(v.r, v.prec)))
    throw VerificationError("alpha: value exceeds sqrt(r) for r = " + format_rational(v.r));
}

// 27 M^4 - 18 M^2 - 8 (1 - 2k^2) M - 1, low order first.
std::vector<BigReal> cubic_quartic(const BigReal& k, Bits prec) {
  BigReal k2 = square(k.with_prec(prec));
  return {BigReal(-1, prec), -8 * (1 - 2 * k2), BigReal(-18, prec), BigReal(prec), BigReal(27, prec)};
}

}  // namespace

std::string_view route_name(AlphaRoute route) {
  switch (route) {
    case AlphaRoute::direct: return "direct";
    case AlphaRoute::via4r: return "4r";
    case AlphaRoute::via9r: return "9r";
    case AlphaRoute::via25r: return "25r";
  }
  return "direct";
}

AlphaRoute parse_route(std::string_view text) {
  if (text == "direct") return AlphaRoute::direct;
  if (text == "4r") return AlphaRoute::via4r;
  if (text == "9r") return AlphaRoute::via9r;
  if (text == "25r") return AlphaRoute::via25r;
  throw DomainError("unknown route '" + std::string(text) + "' (expected direct, 4r, 9r or 25r)");
}

AlphaValue alpha_direct(const ExactRational& r, Bits prec) {
  if (sgn(r) <= 0) throw DomainError("alpha: r must be positive");
  const Bits wp = prec + kAlphaGuard;
  ModulusContext ctx = singular_modulus(r, wp);
  BigReal pi = const_pi(wp);
  BigReal value = pi / (4 * square(ctx.bigK)) - ctx.sqrt_r() * (ctx.bigE / ctx.bigK - 1);
  AlphaValue out{r, value.with_prec(prec), AlphaRoute::direct, prec, BigReal(prec)};
  check_window(out);
  return out;
}

AlphaValue alpha_4r(const AlphaValue& a_r, Bits prec) {
  const Bits wp = prec + kAlphaGuard;
  ModulusContext base = singular_modulus(a_r.r, wp);
  ModulusContext quad = singular_modulus(4 * a_r.r, wp);
  // Landen: k_4r = (1 - k'_r) / (1 + k'_r)
  BigReal landen = abs(quad.k - (1 - base.kprime) / (1 + base.kprime));
  if (landen > pow2(-(prec - 2 * kGuardBits), wp))
    throw VerificationError("alpha_4r: Landen relation between k_r and k_4r fails, residual " + landen.to_string(6));
  BigReal a = a_r.value.with_prec(wp);
  BigReal value = square(1 + quad.k) * a - 2 * base.sqrt_r() * quad.k;
  AlphaValue out{ExactRational(4 * a_r.r), value.with_prec(prec), AlphaRoute::via4r, prec, landen.with_prec(prec)};
  check_window(out);
  return out;
}

BigReal alpha_4r_with_base_modulus(const AlphaValue& a_r, Bits prec) {
  const Bits wp = prec + kAlphaGuard;
  ModulusContext base = singular_modulus(a_r.r, wp);
  BigReal a = a_r.value.with_prec(wp);
  return (square(1 + base.k) * a - 2 * base.sqrt_r() * base.k).with_prec(prec);
}

CubicMultiplier cubic_multiplier(const ExactRational& r, Bits prec) {
  const Bits wp = prec + kAlphaGuard;
  ModulusContext base = singular_modulus(r, wp);
  ModulusContext nine = singular_modulus(9 * r, wp);
  BigReal target = nine.bigK / base.bigK;
  std::vector<BigReal> coeffs = cubic_quartic(base.k, wp);

  const BigReal one(1, wp);
  for (Bits iso = wp / 2; iso <= 4 * wp; iso *= 2) {
    std::vector<detail::ComplexRoot> roots = detail::polynomial_roots(cubic_quartic(base.k, iso), iso);
    const BigReal imag_tol = pow2(-(iso / 2), iso);
    std::vector<BigReal> real_roots;
    for (auto& z : roots) {
      if (abs(z.im) < imag_tol * max(one, abs(z.re))) real_roots.push_back(z.re.with_prec(wp));
    }
    if (real_roots.empty()) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < real_roots.size(); ++i) {
      if (abs(real_roots[i] - target) < abs(real_roots[best] - target)) best = i;
    }
    BigReal gap = BigReal::from_double(1e300, wp);
    for (std::size_t i = 0; i < real_roots.size(); ++i) {
      if (i == best) continue;
      BigReal g = abs(real_roots[i] - real_roots[best]) / abs(real_roots[best]);
      if (g < gap) gap = g;
    }
    if (gap < pow2(-16, wp)) continue;
    BigReal M = detail::newton_polish(coeffs, real_roots[best], wp);
    BigReal residual = abs(detail::polynomial_value(coeffs, M));
    if (residual > pow2(-(prec - 2 * kGuardBits), wp))
      throw RootSelectionError("cubic multiplier: quartic residual " + residual.to_string(6) + " too large");
    if (abs(M - target) > pow2(-(prec - 4 * kGuardBits), wp) * target)
      throw RootSelectionError("cubic multiplier: no quartic root matches K[9r]/K[r] = " + target.to_string(30));
    return {M.with_prec(prec), target.with_prec(prec), residual.with_prec(prec), gap.with_prec(prec)};
  }
  throw RootSelectionError("cubic multiplier: could not isolate a real quartic root near K[9r]/K[r] for r = " +
                           format_rational(r));
}

AlphaValue alpha_9r(const AlphaValue& a_r, Bits prec) {
  const Bits wp = prec + kAlphaGuard;
  ModulusContext base = singular_modulus(a_r.r, wp);
  ModulusContext nine = singular_modulus(9 * a_r.r, wp);
  CubicMultiplier cm = cubic_multiplier(a_r.r, wp);
  const BigReal& M = cm.M;
  BigReal sr = base.sqrt_r();
  BigReal a = a_r.value.with_prec(wp);
  BigReal k2 = square(base.k);
  BigReal rhs = 1 - nine.k * base.k / (3 * M) - nine.kprime * base.kprime / (3 * M) - 1 / (3 * M) -
                1 / (3 * square(M)) + (a / sr - k2 / 3) / square(M);
  BigReal value = sr * (rhs + square(nine.k));
  AlphaValue out{ExactRational(9 * a_r.r), value.with_prec(prec), AlphaRoute::via9r, prec,
                 cm.residual.with_prec(prec)};
  check_window(out);
  return out;
}

BigReal eisenstein_p(const BigReal& q, Bits prec) {
  if (q.sign() <= 0 || q >= 1L) throw DomainError("eisenstein_p: q must lie in (0, 1)");
  const Bits wp = prec + 2 * kGuardBits;
  BigReal qw = q.with_prec(wp);
  // Sum_{j>n} j q^j / (1 - q^j) <= (n+1) q^(n+1) / (1-q)^3.
  const BigReal eps = pow2(-(prec + kGuardBits), wp) * pow(1 - qw, 3) / 24;
  BigReal sum(wp);
  BigReal power = qw;
  for (long n = 1;; ++n) {
    sum += n * power / (1 - power);
    power *= qw;
    if ((n + 1) * power < eps) break;
  }
  return (1 - 24 * sum).with_prec(prec);
}

BigReal t_sum(long p, const ExactRational& r, Bits prec) {
  if (p < 2) throw DomainError("t_sum: p must be at least 2");
  const Bits wp = prec + kGuardBits;
  BigReal q2 = square(nome(r, wp));
  return (eisenstein_p(q2, wp) - p * eisenstein_p(pow(q2, p), wp)).with_prec(prec);
}

BigReal quintic_multiplier_algebraic(const ModulusContext& ctx_r, const ModulusContext& ctx_25r) {
  BigReal w = sqrt(ctx_r.k * ctx_25r.k);
  BigReal wc = sqrt(ctx_r.kprime * ctx_25r.kprime);
  return w / ctx_r.k + wc / ctx_r.kprime - w * wc / (ctx_r.k * ctx_r.kprime);
}

BigReal quintic_multiplier_residual(const BigReal& m, const ModulusContext& ctx_r) {
  BigReal inv = 1 / m;
  return pow(5 * inv - 1, 5) * (1 - inv) - 256 * square(ctx_r.k * ctx_r.kprime) * inv;
}

MultiplierValue multiplier(long p, const ExactRational& r, Bits prec) {
  if (p < 1) throw DomainError("multiplier: p must be positive");
  if (sgn(r) <= 0) throw DomainError("multiplier: r must be positive");
  const Bits wp = prec + kAlphaGuard;
  ModulusContext base = singular_modulus(r, wp);
  ModulusContext high = singular_modulus(ExactRational(p * p) * r, wp);
  BigReal m = base.bigK / high.bigK;
  if (p == 5) {
    const BigReal tol = pow2(-(prec - 3 * kGuardBits), wp);
    BigReal algebraic = quintic_multiplier_algebraic(base, high);
    if (abs(algebraic - m) > tol * m)
      throw VerificationError("multiplier: m5 disagrees with its algebraic form by " + abs(algebraic - m).to_string(6));
    BigReal residual = abs(quintic_multiplier_residual(m, base));
    if (residual > tol)
      throw VerificationError("multiplier: m5 quintic residual " + residual.to_string(6));
  }
  return {p, r, m.with_prec(prec)};
}

AlphaValue alpha_25r(const AlphaValue& a_r, Bits prec) {
  const Bits wp = prec + kAlphaGuard;
  ModulusContext base = singular_modulus(a_r.r, wp);
  ModulusContext high = singular_modulus(25 * a_r.r, wp);
  BigReal m = quintic_multiplier_algebraic(base, high);
  BigReal residual = abs(quintic_multiplier_residual(m, base));
  if (residual > pow2(-(prec - 3 * kGuardBits), wp))
    throw VerificationError("alpha_25r: m5 quintic residual " + residual.to_string(6));
  RRValue rr = rr_eval(square(base.q), wp);
  BigReal sr = base.sqrt_r();
  BigReal a = a_r.value.with_prec(wp);
  BigReal m2 = square(m);
  BigReal two_23 = root(BigReal(4, wp), 3);
  BigReal bracket = rr.R5 + 1 / rr.R5;
  BigReal rr_term = two_23 * pow(root(base.k * base.kprime, 3), 2) * bracket / pow(root(rr.A, 6), 5);
  BigReal rhs = 5 * (1 + square(high.k)) / m2 - (1 + square(base.k)) - rr_term;
  BigReal value = m2 * sr / 3 * (3 * a / sr + rhs);
  AlphaValue out{ExactRational(25 * a_r.r), value.with_prec(prec), AlphaRoute::via25r, prec, residual.with_prec(prec)};
  check_window(out);
  return out;
}

AlphaValue alpha_by_route(AlphaRoute route, const ExactRational& r, Bits prec) {
  if (sgn(r) <= 0) throw DomainError("alpha: r must be positive");
  switch (route) {
    case AlphaRoute::direct: return alpha_direct(r, prec);
    case AlphaRoute::via4r: return alpha_4r(alpha_direct(ExactRational(r / 4), prec + kAlphaGuard), prec);
    case AlphaRoute::via9r: return alpha_9r(alpha_direct(ExactRational(r / 9), prec + kAlphaGuard), prec);
    case AlphaRoute::via25r: return alpha_25r(alpha_direct(ExactRational(r / 25), prec + kAlphaGuard), prec);
  }
  return alpha_direct(r, prec);
}

}  // namespace piforge
