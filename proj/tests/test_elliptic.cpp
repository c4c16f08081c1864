#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "piforge/elliptic.hpp"
#include "piforge/errors.hpp"

using namespace piforge;

namespace {

BigReal inv_sqrt2(Bits prec) { return 1 / sqrt(BigReal(2, prec)); }

bool close(const BigReal& a, const BigReal& b, long exponent) {
  return abs(a - b) < pow2(exponent, std::max(a.prec(), b.prec()));
}

}  // namespace

TEST_CASE("agm") {
  const Bits prec = 256;
  BigReal x = BigReal(7, prec) / 3;
  CHECK(close(agm(x, x, prec), x, -prec + 4));

  // pi / (2 K(1/sqrt 2)) with K from periodic quadrature of the integral.
  BigReal expected = reference_pi(prec) / (2 * oracle::quadrature_K(inv_sqrt2(prec), prec));
  CHECK(close(agm(BigReal(1, prec), inv_sqrt2(prec), prec), expected, -prec + 8));
  CHECK(agm(BigReal(1, prec), inv_sqrt2(prec), prec).to_string(16) == "8.472130847939791e-01");

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.01, 10.0);
  for (int i = 0; i < 20; ++i) {
    BigReal a = BigReal::from_double(dist(rng), prec);
    BigReal b = BigReal::from_double(dist(rng), prec);
    BigReal lhs = agm(a, b, prec);
    BigReal rhs = agm((a + b) / 2, sqrt(a * b), prec);
    CHECK(close(lhs, rhs, -prec + 4 + lhs.exponent2()));
  }

  CHECK_THROWS_AS(agm(BigReal(0L, 64), BigReal(1, 64), 64), DomainError);
  CHECK_THROWS_AS(agm(BigReal(1, 64), BigReal(-1, 64), 64), DomainError);
}

TEST_CASE("complete elliptic integrals") {
  const Bits prec = 256;
  BigReal half_pi = reference_pi(prec) / 2;
  CHECK(close(ell_k(BigReal(0L, prec), prec), half_pi, -prec + 8));
  CHECK(close(ell_e(BigReal(0L, prec), prec), half_pi, -prec + 8));

  BigReal k = inv_sqrt2(prec);
  CHECK(close(ell_k(k, prec), oracle::hypergeometric_K(k, prec), -prec + 8));
  CHECK(ell_k(k, prec).to_string(17) == "1.8540746773013719e+00");
  CHECK(close(ell_e(k, prec), oracle::quadrature_E(k, prec), -prec + 8));

  CHECK_THROWS_AS(ell_k(BigReal(1, prec), prec), DomainError);
  CHECK_THROWS_AS(ell_e(BigReal(-1, prec) / 10, prec), DomainError);
}

TEST_CASE("Legendre relation at random moduli") {
  const Bits prec = 512;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  auto check_at = [&](const BigReal& k) {
    BigReal kp = sqrt((1 - k) * (1 + k));
    auto [K, E] = complete_integrals(k, kp, prec);
    auto [Kp, Ep] = complete_integrals(kp, k, prec);
    BigReal lhs = E * Kp + Ep * K - K * Kp;
    CHECK(close(lhs, const_pi(prec) / 2, -prec + 16));
  };
  check_at(BigReal(3, prec) / 10);
  for (int i = 0; i < 10; ++i) check_at(BigReal::from_double(dist(rng), prec));
}

TEST_CASE("dK/dk") {
  const Bits prec = 256;
  BigReal k = inv_sqrt2(prec);
  BigReal sqrt2 = sqrt(BigReal(2, prec));
  BigReal expected = 2 * ell_e(k, prec) * sqrt2 - sqrt2 * ell_k(k, prec);
  CHECK(close(dK_dk(k, prec), expected, -prec + 16));

  // central difference, truncation O(h^2) = 1e-20
  BigReal k3 = BigReal(3, prec) / 10;
  BigReal h = BigReal(1, prec) / 10000000000L;
  BigReal fd = (ell_k(k3 + h, prec) - ell_k(k3 - h, prec)) / (2 * h);
  CHECK(abs(fd - dK_dk(k3, prec)) < BigReal(1, prec) / 1000000000000000000L);

  CHECK(dK_dk(BigReal(0L, prec), prec).is_zero());
  BigReal tiny = pow2(-60, prec);
  CHECK(abs(dK_dk(tiny, prec)) < pow2(-55, prec));
}

TEST_CASE("nome") {
  const Bits prec = 256;
  CHECK(nome(1, prec).to_string(15) == "4.32139182637722e-02");
  CHECK(close(nome(4, prec), square(nome(1, prec)), -prec + 2));
  CHECK(close(nome(ExactRational(1, 4), prec), sqrt(nome(1, prec)), -prec + 4));
  CHECK_THROWS_AS(nome(0, prec), DomainError);
  CHECK_THROWS_AS(nome(-1, prec), DomainError);
}

TEST_CASE("theta functions") {
  const Bits prec = 512;
  BigReal zero(0L, prec);
  CHECK(theta3(zero, prec) == 1L);
  CHECK(theta4(zero, prec) == 1L);
  CHECK(theta2(zero, prec).is_zero());

  BigReal q = nome(2, prec);
  BigReal t2 = theta2(q, prec), t3 = theta3(q, prec), t4 = theta4(q, prec);
  CHECK(close(pow(t3, 4), pow(t2, 4) + pow(t4, 4), -prec + 16));

  BigReal prev(1, prec);
  for (long e : {4L, 8L, 16L, 32L}) {
    BigReal qs = pow2(-e, prec);
    BigReal ratio = theta2(qs, prec) / theta3(qs, prec);
    CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK(prev < pow2(-6, prec));

  CHECK_THROWS_AS(theta3(BigReal(1, prec), prec), DomainError);
  CHECK_THROWS_AS(theta2(BigReal(-1, prec), prec), DomainError);
}

TEST_CASE("eta product") {
  const Bits prec = 512;
  CHECK(eta_f(BigReal(0L, prec), prec) == 1L);
  BigReal prev(1, prec);
  for (int i = 1; i < 10; ++i) {
    BigReal v = eta_f(BigReal(i, prec) / 10, prec);
    CHECK(v < prev);
    prev = v;
  }
  // f(-q^2)^6 = 2 k k' K^3 / (pi^3 q^(1/2)) at r = 2
  ModulusContext ctx = singular_modulus(2, prec);
  BigReal lhs = pow(eta_f(square(ctx.q), prec), 6);
  BigReal pi = const_pi(prec);
  BigReal rhs = 2 * ctx.k * ctx.kprime * pow(ctx.bigK, 3) / (pow(pi, 3) * sqrt(ctx.q));
  CHECK(close(lhs, rhs, -prec + 24));
  CHECK_THROWS_AS(eta_f(BigReal(1, prec), prec), DomainError);
}

TEST_CASE("singular modulus closed forms") {
  const Bits prec = 512;
  ModulusContext c1 = singular_modulus(1, prec);
  CHECK(close(c1.k, inv_sqrt2(prec), -prec + 8));

  ModulusContext c2 = singular_modulus(2, prec);
  CHECK(close(c2.k, sqrt(BigReal(2, prec)) - 1, -prec + 8));

  BigReal s7 = sqrt(BigReal(7, prec));
  CHECK(close(square(singular_modulus(7, prec).k), (8 - 3 * s7) / 16, -prec + 8));

  BigReal s3 = sqrt(BigReal(3, prec)), s5 = sqrt(BigReal(5, prec));
  BigReal k15sq = square(2 - s3) * square(s5 - s3) * square(3 - s5) / 128;
  CHECK(close(square(singular_modulus(15, prec).k), k15sq, -prec + 8));
}

TEST_CASE("singular modulus context invariants") {
  const Bits prec = 1024;
  for (long r = 1; r <= 10; ++r) {
    ModulusContext ctx = singular_modulus(r, prec);
    CHECK(ctx.k.sign() > 0);
    CHECK(ctx.k < 1L);
    CHECK(close(square(ctx.k) + square(ctx.kprime), BigReal(1, prec), -prec + 8));
    // The defining ratio, with K(k') computed by an independent AGM.
    BigReal kprime_integral = ell_k(ctx.kprime, prec);
    CHECK(abs(kprime_integral / ctx.bigK - ctx.sqrt_r()) < pow2(-1000, prec));
    CHECK(close(ctx.bigKprime / ctx.bigK, ctx.sqrt_r(), -prec + 16));
    CHECK(close(ctx.q, exp(-const_pi(prec) * ctx.sqrt_r()), -prec + 8));
    // K = (pi/2) theta3^2 as a second route
    CHECK(close(ctx.bigK, const_pi(prec) / 2 * square(theta3(ctx.q, prec)), -prec + 16));
  }
}

TEST_CASE("fractional r uses the reciprocal symmetry") {
  const Bits prec = 512;
  ModulusContext small = singular_modulus(ExactRational(1, 5), prec);
  ModulusContext big = singular_modulus(5, prec);
  CHECK(close(small.k, big.kprime, -prec + 8));
  CHECK(close(small.bigKprime / small.bigK, small.sqrt_r(), -prec + 16));
  ModulusContext frac = singular_modulus(ExactRational(17, 5), prec);
  CHECK(close(frac.bigKprime / frac.bigK, frac.sqrt_r(), -prec + 16));
}

TEST_CASE("Landen-type modulus relation k_{r/4} = 2 sqrt(k_r)/(1 + k_r)") {
  const Bits prec = 512;
  for (long r : {4L, 8L, 16L}) {
    BigReal kr = singular_modulus(r, prec).k;
    BigReal kq = singular_modulus(ExactRational(r, 4), prec).k;
    CHECK(close(kq, 2 * sqrt(kr) / (1 + kr), -prec + 16));
  }
}

TEST_CASE("precision doubling agreement") {
  const Bits prec = 256;
  for (long r : {1L, 3L, 7L}) {
    ModulusContext lo = singular_modulus(r, prec);
    ModulusContext hi = singular_modulus(r, 2 * prec);
    for (auto [a, b] : {std::pair{&lo.k, &hi.k}, {&lo.kprime, &hi.kprime}, {&lo.bigK, &hi.bigK},
                        {&lo.bigE, &hi.bigE}, {&lo.q, &hi.q}}) {
      CHECK(close(*a, *b, -prec + 8));
    }
  }
  BigReal k = BigReal(2, 2 * prec) / 5;
  CHECK(close(ell_k(k, prec), ell_k(k, 2 * prec), -prec + 8));
  CHECK(close(ell_e(k, prec), ell_e(k, 2 * prec), -prec + 8));
  CHECK(close(theta3(k, prec), theta3(k, 2 * prec), -prec + 8));
  CHECK(close(eta_f(k, prec), eta_f(k, 2 * prec), -prec + 8));
}

TEST_CASE("insufficient precision is reported, not silently zero") {
  try {
    singular_modulus(100000000, 512);
    FAIL("expected PrecisionError");
  } catch (const PrecisionError& e) {
    CHECK(e.required_bits() > 512);
  }
  CHECK_THROWS_AS(singular_modulus(0, 512), DomainError);
}

TEST_CASE("phi(z) is (2/pi)^2 K(k)^2 with k^2 = (1 - sqrt(1 - z))/2") {
  const Bits prec = 256;
  for (int i = 1; i <= 5; ++i) {
    BigReal z = BigReal(i, prec) / 7;
    BigReal k = sqrt((1 - sqrt(1 - z)) / 2);
    BigReal via_k = square(2 / const_pi(prec) * ell_k(k, prec));
    CHECK(close(via_k, oracle::phi_series(z, prec), -prec + 24));
  }
}
