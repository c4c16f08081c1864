#pragma once

// Exact differentiation of polynomials in the complete elliptic integrals
// K(k), E(k) with coefficients in Q(k), and the numeric reduction that turns
// the derivative stack of K^(4 nu) into the coefficient system of a series.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "piforge/alpha.hpp"
#include "piforge/big_real.hpp"
#include "piforge/elliptic.hpp"

namespace piforge {

/// Univariate polynomial in k over Q, coefficients low order first, no
/// trailing zeros. The zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  /// c k^n
  static QPoly monomial(const mpq_class& c, int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(int n) const;
  const mpq_class& leading() const { return coeffs_.back(); }

  QPoly derivative() const;
  BigReal eval(const BigReal& k) const;
  mpq_class eval(const mpq_class& k) const;
  std::string to_string() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const mpq_class& c, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic greatest common divisor (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Reduced rational function num/den: gcd(num, den) = 1, den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(QPoly::constant(1)) {}
  RatFunc(QPoly num, QPoly den);
  explicit RatFunc(QPoly num) : RatFunc(std::move(num), QPoly::constant(1)) {}
  static RatFunc constant(const mpq_class& c) { return RatFunc(QPoly::constant(c)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc derivative() const;
  /// Throws DomainError at a pole.
  BigReal eval(const BigReal& k) const;
  std::string to_string() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  QPoly num_;
  QPoly den_;
};

/// sum c_{ij}(k) K^i E^j with zero coefficients pruned.
class KEPoly {
 public:
  using Exponents = std::pair<int, int>;

  KEPoly() = default;
  static KEPoly term(int i, int j, const RatFunc& c);
  static KEPoly K() { return term(1, 0, RatFunc::constant(1)); }
  static KEPoly E() { return term(0, 1, RatFunc::constant(1)); }

  const std::map<Exponents, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common total degree i + j, or -1 for zero or mixed degrees.
  int homogeneous_degree() const;
  BigReal eval(const BigReal& k, const BigReal& K, const BigReal& E) const;

  friend KEPoly operator+(const KEPoly& a, const KEPoly& b);
  friend KEPoly operator-(const KEPoly& a, const KEPoly& b);
  friend KEPoly operator*(const KEPoly& a, const KEPoly& b);
  friend KEPoly operator*(const RatFunc& c, const KEPoly& a);
  friend bool operator==(const KEPoly& a, const KEPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add(const Exponents& e, const RatFunc& c);
  std::map<Exponents, RatFunc> terms_;
};

/// d/dk with dK/dk = E/(k(1-k^2)) - K/k and dE/dk = (E - K)/k.
KEPoly diff_k(const KEPoly& p);

/// [z^m F^(m)(z)]_{m=0..2nu} for F = K^(4 nu), z = 4k^2(1-k^2).
/// The function of the series is phi(z)^(2 nu) = (2/pi)^(4 nu) F; that
/// constant factor is left out here and restored by solve_coefficients.
/// Results are computed once per nu and shared.
const std::vector<KEPoly>& derivative_stack(int nu);

/// Polynomial in K with even exponents after E has been eliminated:
/// value = pi^pi_power * sum_e coeffs[e] K^e.
struct LaurentK {
  std::map<int, BigReal> coeffs;
  int pi_power = 0;

  BigReal eval(const BigReal& K, const BigReal& pi) const;
};

/// Replaces E by (1 - a/sqrt r) K + pi/(4 sqrt r K) and evaluates the
/// rational coefficients at k_r. Powers of pi produced by the substitution
/// are multiplied into the coefficients.
LaurentK substitute_alpha(const KEPoly& p, const ModulusContext& ctx, const AlphaValue& a);

struct CoefficientSolution {
  int nu = 0;
  std::vector<BigReal> A;  ///< A_0 = 1, ..., A_{2 nu}
  BigReal g;               ///< sum_m A_m z^m F^(m) = g / pi^(2 nu)
  BigReal residual;        ///< largest surviving K^e coefficient, e > 0
  int rank = 0;
};

/// Solves for A_1..A_{2 nu} so that only the K^0 coefficient of
/// sum_m A_m z^m F^(m) survives at k = k_r. Throws DegenerateSystemError on a
/// rank-deficient system and VerificationError when the residual exceeds
/// 2^(-prec+48).
CoefficientSolution solve_coefficients(int nu, const ExactRational& r, Bits prec);

}  // namespace piforge
