#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace piforge {

/// Working precision in bits.
using Bits = long;

inline constexpr Bits kMinPrecision = 64;
inline constexpr Bits kDefaultPrecision = 512;
/// Guard bits every kernel operation adds on top of the requested precision.
inline constexpr Bits kGuardBits = 8;

/// Arbitrary-precision real with an explicit precision tag.
///
/// Thin value-semantic wrapper over an MPFR number. Binary arithmetic rounds
/// to the larger of the two operand precisions; mixed operations with
/// machine integers keep the BigReal's precision. All roundings are to
/// nearest.
class BigReal {
 public:
  BigReal() : BigReal(kMinPrecision) {}
  explicit BigReal(Bits prec);
  BigReal(long value, Bits prec);
  BigReal(const mpq_class& value, Bits prec);
  BigReal(const mpz_class& value, Bits prec);
  static BigReal from_double(double value, Bits prec);
  /// Parses a decimal string; throws DomainError on malformed input.
  static BigReal from_string(std::string_view text, Bits prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Bits prec() const { return static_cast<Bits>(mpfr_get_prec(value_)); }
  /// Copy rounded (or widened) to the given precision.
  BigReal with_prec(Bits prec) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent2() const { return static_cast<long>(mpfr_get_exp(value_)); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific decimal with the given number of significant digits.
  std::string to_string(int digits = 20) const;
  /// Decimal string carrying every digit the precision determines.
  std::string to_decimal() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  mpfr_t value_;
};

BigReal operator+(const BigReal& a, long b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(const BigReal& a, long b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal square(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
/// Real n-th root; x must be nonnegative for even n.
BigReal root(const BigReal& x, unsigned long n);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
/// 2^e at the given precision.
BigReal pow2(long e, Bits prec);

/// pi by the Gauss-Legendre AGM iteration, cached per precision.
/// Safe for concurrent use; concurrent fills are idempotent.
BigReal const_pi(Bits prec);

/// pi from the MPFR library. Kept strictly separate from const_pi so the two
/// can check each other.
BigReal reference_pi(Bits prec);

/// Decimal digits of agreement: -log10(|a - b| / max(1, |b|)), capped at the
/// digits representable at the lower operand precision.
double matched_digits(const BigReal& a, const BigReal& b);

/// Decimal digits carried by a precision: prec * log10(2).
double precision_digits(Bits prec);

}  // namespace piforge
