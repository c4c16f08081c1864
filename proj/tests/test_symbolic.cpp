#include "doctest.h"

#include <random>

#include "closed_forms.hpp"
#include "oracles.hpp"
#include "piforge/errors.hpp"
#include "piforge/symbolic.hpp"

using namespace piforge;
using closed_form::ClosedForm;
using closed_form::nu2_closed_form;

namespace {

const QPoly k = QPoly::monomial(1, 1);
const QPoly one = QPoly::constant(1);

RatFunc rf(const QPoly& n, const QPoly& d = QPoly::constant(1)) { return RatFunc(n, d); }

}  // namespace

TEST_CASE("QPoly arithmetic") {
  QPoly p({1, 2, 3});
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == QPoly({2, 6}));
  CHECK((p - p).is_zero());
  CHECK(p * QPoly() == QPoly());
  auto [q, rem] = divmod(k * k - one, k - one);
  CHECK(q == k + one);
  CHECK(rem.is_zero());
  CHECK(gcd(k * k - one, k * k + QPoly({-2, 1})) == k - one);  // (k-1)(k+1), (k-1)(k+2)
  CHECK(QPoly({mpq_class(1, 2), 0, -1}).eval(mpq_class(1, 2)) == mpq_class(1, 4));
  CHECK(p.to_string() == "1 + 2*k + 3*k^2");
}

TEST_CASE("RatFunc reduction") {
  RatFunc f(k * k - one, QPoly({-2, 2}));
  CHECK(f.num() == mpq_class(1, 2) * (k + one));
  CHECK(f.den() == one);
  RatFunc g(one, k);
  CHECK(g * RatFunc(k) == RatFunc::constant(1));
  CHECK((g - g).is_zero());
  CHECK(RatFunc(k * k).derivative() == RatFunc(mpq_class(2) * k));
  CHECK(RatFunc(one, k).derivative() == RatFunc(QPoly::constant(-1), k * k));
  CHECK_THROWS_AS(RatFunc(one, k).eval(BigReal(64)), DomainError);
}

TEST_CASE("diff_k on K and E") {
  RatFunc inv_k(one, k);
  RatFunc inv_k_kp2(one, k - k * k * k);
  KEPoly dK = diff_k(KEPoly::K());
  CHECK(dK == KEPoly::term(0, 1, inv_k_kp2) - KEPoly::term(1, 0, inv_k));
  KEPoly dE = diff_k(KEPoly::E());
  CHECK(dE == KEPoly::term(0, 1, inv_k) - KEPoly::term(1, 0, inv_k));
  KEPoly KE = KEPoly::K() * KEPoly::E();
  CHECK(diff_k(KE) == diff_k(KEPoly::K()) * KEPoly::E() + KEPoly::K() * diff_k(KEPoly::E()));
  KEPoly a = KEPoly::term(3, 1, rf(k + one));
  KEPoly b = KEPoly::term(0, 2, rf(one, k * k + one));
  CHECK(diff_k(a + b) == diff_k(a) + diff_k(b));
  CHECK(diff_k(a * b) == diff_k(a) * b + a * diff_k(b));
  CHECK(diff_k(a).homogeneous_degree() == 4);
}

TEST_CASE("diff_k against central differences") {
  const Bits prec = 256;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  KEPoly p = KEPoly::term(3, 1, rf(one + k * k)) + KEPoly::term(0, 2, rf(one, k)) +
             KEPoly::term(2, 0, rf(QPoly({mpq_class(1, 3), 0, 0, 1})));
  KEPoly dp = diff_k(p);
  auto value = [&](const BigReal& kk) {
    EllipticPair ke = complete_integrals(kk, sqrt(1 - square(kk)), prec);
    return p.eval(kk, ke.bigK, ke.bigE);
  };
  for (int i = 0; i < 5; ++i) {
    BigReal kk = BigReal::from_double(dist(rng), prec);
    BigReal h = pow2(-40, prec);
    BigReal fd = (value(kk + h) - value(kk - h)) / (2 * h);
    EllipticPair ke = complete_integrals(kk, sqrt(1 - square(kk)), prec);
    BigReal exact = dp.eval(kk, ke.bigK, ke.bigE);
    CHECK(abs(fd - exact) < pow2(-70, prec) * max(BigReal(1, prec), abs(exact)));
  }
}

TEST_CASE("derivative stack structure") {
  for (int nu = 1; nu <= 3; ++nu) {
    const auto& stack = derivative_stack(nu);
    REQUIRE(stack.size() == static_cast<std::size_t>(2 * nu + 1));
    CHECK(stack[0] == KEPoly::term(4 * nu, 0, RatFunc::constant(1)));
    for (const auto& g : stack) CHECK(g.homogeneous_degree() == 4 * nu);
    CHECK(&derivative_stack(nu) == &stack);
  }
  CHECK_THROWS_AS(derivative_stack(0), DomainError);
}

TEST_CASE("derivative stack against the hypergeometric series") {
  // phi(z)^2 = (2/pi)^4 K^4 with z = 4k^2(1-k^2); compare z d/dz and
  // z^2 d^2/dz^2 with finite differences of the 3F2 series.
  const Bits prec = 256;
  BigReal kk = BigReal(3, prec) / 10;
  BigReal z = 4 * square(kk) * (1 - square(kk));
  BigReal h = pow2(-40, prec);
  auto f = [&](const BigReal& zz) { return square(oracle::phi_series(zz, prec)); };
  BigReal d1 = (f(z + h) - f(z - h)) / (2 * h);
  BigReal d2 = (f(z + h) - 2 * f(z) + f(z - h)) / square(h);
  EllipticPair ke = complete_integrals(kk, sqrt(1 - square(kk)), prec);
  BigReal scale = pow(2 / reference_pi(prec), 4);
  const auto& stack = derivative_stack(1);
  CHECK(abs(scale * stack[1].eval(kk, ke.bigK, ke.bigE) - z * d1) < pow2(-70, prec));
  CHECK(abs(scale * stack[2].eval(kk, ke.bigK, ke.bigE) - square(z) * d2) < pow2(-30, prec));
}

TEST_CASE("phi(z) equals (2/pi)^2 K^2 at k^2 = (1 - sqrt(1-z))/2") {
  const Bits prec = 256;
  for (int i = 1; i <= 9; ++i) {
    BigReal z = BigReal(i, prec) / 10;
    BigReal kk = sqrt((1 - sqrt(1 - z)) / 2);
    BigReal K = ell_k(kk, prec);
    CHECK(matched_digits(oracle::phi_series(z, prec), square(2 * K / reference_pi(prec))) > 70);
  }
}

TEST_CASE("substitute_alpha") {
  const Bits prec = 512;
  ModulusContext ctx = singular_modulus(2, prec);
  AlphaValue a = alpha_direct(2, prec);
  BigReal s2 = sqrt(BigReal(2, prec));
  BigReal pi = reference_pi(prec);

  LaurentK ke = substitute_alpha(KEPoly::K() * KEPoly::E(), ctx, a);
  REQUIRE(ke.coeffs.size() == 2);
  CHECK(matched_digits(ke.coeffs.at(2), 1 - a.value / s2) > 150);
  CHECK(matched_digits(ke.coeffs.at(0), pi / (4 * s2)) > 150);

  KEPoly e_over_k = KEPoly::term(-1, 1, RatFunc::constant(1)) - KEPoly::term(0, 0, RatFunc::constant(1));
  BigReal v = substitute_alpha(e_over_k, ctx, a).eval(ctx.bigK, pi);
  CHECK(matched_digits(v, (pi / (4 * square(ctx.bigK)) - a.value) / s2) > 150);

  ModulusContext c3 = singular_modulus(3, prec);
  AlphaValue a3 = alpha_direct(3, prec);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-9, 9), expo(0, 4);
  for (int trial = 0; trial < 5; ++trial) {
    KEPoly p;
    for (int t = 0; t < 4; ++t) {
      int i = expo(rng), j = expo(rng);
      p = p + KEPoly::term(i, j, RatFunc(QPoly({coef(rng), coef(rng), 1}), QPoly({coef(rng) + 20, 1})));
    }
    BigReal direct = p.eval(c3.k, c3.bigK, c3.bigE);
    BigReal via = substitute_alpha(p, c3, a3).eval(c3.bigK, pi);
    CHECK(abs(direct - via) < pow2(-prec + 24, prec) * max(BigReal(1, prec), abs(direct)));
  }
  CHECK_THROWS_AS(substitute_alpha(KEPoly::K(), ctx, a3), DomainError);
}

TEST_CASE("nu = 2, r = 2 against the published closed forms") {
  const Bits prec = 512;
  CoefficientSolution s = solve_coefficients(2, 2, prec);
  CHECK(s.rank == 4);
  CHECK(s.residual < pow2(-prec + 48, prec));
  BigReal a = alpha_direct(2, prec + 32).value;
  BigReal k2 = square(singular_modulus(2, prec + 32).k);
  ClosedForm c = nu2_closed_form(a, BigReal(2, prec + 32), k2);
  CHECK(matched_digits(s.A[1], c.A1) >= 130);
  CHECK(matched_digits(s.A[2], c.A2) >= 130);
  CHECK(matched_digits(s.A[3], c.A3) >= 130);
  CHECK(matched_digits(s.A[4], c.A4) >= 130);
  CHECK(matched_digits(s.g, c.g) >= 130);
  // The other reading of w, (1 - k^2)/2, does not reproduce the solve.
  ClosedForm other = nu2_closed_form(a, BigReal(2, prec + 32), (1 - k2) / 2);
  CHECK(matched_digits(s.A[4], other.A4) < 2);
}

TEST_CASE("solve_coefficients errors") {
  CHECK_THROWS_AS(solve_coefficients(4, 2, 128), DomainError);
  CHECK_THROWS_AS(solve_coefficients(2, 0, 128), DomainError);
  CHECK_THROWS_AS(solve_coefficients(2, 1, 128), DegenerateSystemError);
}
