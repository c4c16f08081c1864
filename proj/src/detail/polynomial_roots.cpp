#include "detail/polynomial_roots.hpp"

#include "piforge/errors.hpp"

namespace piforge::detail {
namespace {

struct C {
  BigReal re, im;
};

C mul(const C& a, const C& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
C sub(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
C div(const C& a, const C& b) {
  BigReal d = square(b.re) + square(b.im);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigReal norm1(const C& a) { return abs(a.re) + abs(a.im); }

}  // namespace

BigReal polynomial_value(const std::vector<BigReal>& coeffs, const BigReal& x) {
  BigReal acc = coeffs.back().with_prec(std::max(coeffs.back().prec(), x.prec()));
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::vector<ComplexRoot> polynomial_roots(const std::vector<BigReal>& coeffs, Bits prec) {
  const std::size_t degree = coeffs.size() - 1;
  if (coeffs.size() < 2 || coeffs.back().is_zero()) throw DomainError("polynomial_roots: bad leading coefficient");
  std::vector<BigReal> monic;
  for (const auto& c : coeffs) monic.push_back(c.with_prec(prec) / coeffs.back());

  std::vector<C> z;
  C seed{BigReal::from_double(0.4, prec), BigReal::from_double(0.9, prec)};
  C power{BigReal(1, prec), BigReal(prec)};
  for (std::size_t i = 0; i < degree; ++i) {
    power = mul(power, seed);
    z.push_back(power);
  }
  const BigReal eps = pow2(-(prec - 2 * kGuardBits), prec);
  for (int iter = 0; iter < 10000; ++iter) {
    BigReal largest_step(prec);
    for (std::size_t i = 0; i < degree; ++i) {
      C value{monic.back(), BigReal(prec)};
      for (std::size_t j = degree; j-- > 0;) {
        value = mul(value, z[i]);
        value.re += monic[j];
      }
      C denom{BigReal(1, prec), BigReal(prec)};
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) denom = mul(denom, sub(z[i], z[j]));
      }
      C step = div(value, denom);
      z[i] = sub(z[i], step);
      BigReal size = norm1(step) / max(BigReal(1, prec), norm1(z[i]));
      if (size > largest_step) largest_step = size;
    }
    if (largest_step < eps) break;
  }
  std::vector<ComplexRoot> out;
  for (auto& r : z) out.push_back({r.re, r.im});
  return out;
}

BigReal newton_polish(const std::vector<BigReal>& coeffs, BigReal x, Bits prec) {
  std::vector<BigReal> deriv;
  for (std::size_t i = 1; i < coeffs.size(); ++i) deriv.push_back(coeffs[i] * static_cast<long>(i));
  x = x.with_prec(prec);
  const BigReal eps = pow2(-(prec - kGuardBits), prec);
  for (int iter = 0; iter < 200; ++iter) {
    BigReal step = polynomial_value(coeffs, x) / polynomial_value(deriv, x);
    x -= step;
    if (abs(step) <= eps * max(BigReal(1, prec), abs(x))) break;
  }
  return x;
}

}  // namespace piforge::detail
