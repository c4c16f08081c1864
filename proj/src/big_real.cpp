#include "piforge/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <shared_mutex>

#include "piforge/errors.hpp"

namespace piforge {
namespace {

Bits checked(Bits prec) {
  if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX) {
    throw DomainError("precision out of range: " + std::to_string(prec));
  }
  return prec;
}

Bits max_prec(const BigReal& a, const BigReal& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

BigReal::BigReal(Bits prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Bits prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, Bits prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, Bits prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::from_double(double value, Bits prec) {
  BigReal out(prec);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

BigReal BigReal::from_string(std::string_view text, Bits prec) {
  BigReal out(prec);
  std::string buf(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end == buf.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + buf + "'");
  }
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Steal the limbs and leave `other` as a valid minimal-precision zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_prec(Bits prec) const {
  BigReal out(prec);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string BigReal::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string BigReal::to_decimal() const {
  // Enough digits that parsing back at the same precision is exact.
  const int digits = static_cast<int>(std::ceil(precision_digits(prec()))) + 2;
  return to_string(digits);
}

#define PIFORGE_COMPOUND(op, fn)                                    \
  BigReal& BigReal::operator op(const BigReal& rhs) {               \
    if (rhs.prec() > prec()) mpfr_prec_round(value_, rhs.prec(), MPFR_RNDN); \
    fn(value_, value_, rhs.value_, MPFR_RNDN);                      \
    return *this;                                                   \
  }
PIFORGE_COMPOUND(+=, mpfr_add)
PIFORGE_COMPOUND(-=, mpfr_sub)
PIFORGE_COMPOUND(*=, mpfr_mul)
PIFORGE_COMPOUND(/=, mpfr_div)
#undef PIFORGE_COMPOUND

BigReal& BigReal::operator+=(long rhs) { mpfr_add_si(value_, value_, rhs, MPFR_RNDN); return *this; }
BigReal& BigReal::operator-=(long rhs) { mpfr_sub_si(value_, value_, rhs, MPFR_RNDN); return *this; }
BigReal& BigReal::operator*=(long rhs) { mpfr_mul_si(value_, value_, rhs, MPFR_RNDN); return *this; }
BigReal& BigReal::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(prec());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

#define PIFORGE_BINARY(op, fn)                                  \
  BigReal operator op(const BigReal& a, const BigReal& b) {     \
    BigReal out(max_prec(a, b));                                \
    fn(out.value_, a.value_, b.value_, MPFR_RNDN);              \
    return out;                                                 \
  }
PIFORGE_BINARY(+, mpfr_add)
PIFORGE_BINARY(-, mpfr_sub)
PIFORGE_BINARY(*, mpfr_mul)
PIFORGE_BINARY(/, mpfr_div)
#undef PIFORGE_BINARY

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal operator+(const BigReal& a, long b) { BigReal out(a); out += b; return out; }
BigReal operator+(long a, const BigReal& b) { return b + a; }
BigReal operator-(const BigReal& a, long b) { BigReal out(a); out -= b; return out; }
BigReal operator-(long a, const BigReal& b) {
  BigReal out(b.prec());
  mpfr_si_sub(out.get(), a, b.get(), MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& a, long b) { BigReal out(a); out *= b; return out; }
BigReal operator*(long a, const BigReal& b) { return b * a; }
BigReal operator/(const BigReal& a, long b) { BigReal out(a); out /= b; return out; }
BigReal operator/(long a, const BigReal& b) {
  BigReal out(b.prec());
  mpfr_si_div(out.get(), a, b.get(), MPFR_RNDN);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(30); }

#define PIFORGE_UNARY(name, fn)                    \
  BigReal name(const BigReal& x) {                 \
    BigReal out(x.prec());                         \
    fn(out.get(), x.get(), MPFR_RNDN);             \
    return out;                                    \
  }
PIFORGE_UNARY(abs, mpfr_abs)
PIFORGE_UNARY(square, mpfr_sqr)
PIFORGE_UNARY(exp, mpfr_exp)
#undef PIFORGE_UNARY

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative number");
  BigReal out(x.prec());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of nonpositive number");
  BigReal out(x.prec());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log10 of nonpositive number");
  BigReal out(x.prec());
  mpfr_log10(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, long n) {
  BigReal out(x.prec());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal out(max_prec(x, y));
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

BigReal root(const BigReal& x, unsigned long n) {
  if (n == 0) throw DomainError("zeroth root");
  if (x.sign() < 0 && n % 2 == 0) throw DomainError("even root of negative number");
  BigReal out(x.prec());
  mpfr_rootn_ui(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal out(x.prec());
  mpfr_mul_2si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal pow2(long e, Bits prec) { return ldexp(BigReal(1, prec), e); }

namespace {

BigReal gauss_legendre_pi(Bits prec) {
  const Bits wp = prec + 2 * kGuardBits;
  BigReal a(1, wp);
  BigReal b = sqrt(BigReal(1, wp) / 2);
  BigReal t(mpq_class(1, 4), wp);
  long p = 1;
  const BigReal eps = pow2(-prec, wp);
  while (abs(a - b) > eps) {
    BigReal next = ldexp(a + b, -1);
    b = sqrt(a * b);
    t -= square(a - next) * p;
    p *= 2;
    a = std::move(next);
  }
  return (square(a + b) / (4 * t)).with_prec(prec);
}

struct PiCache {
  std::shared_mutex mutex;
  std::map<Bits, BigReal> values;
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

}  // namespace

BigReal const_pi(Bits prec) {
  auto& cache = pi_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.values.lower_bound(prec);
    if (it != cache.values.end()) return it->second.with_prec(prec);
  }
  BigReal value = gauss_legendre_pi(prec);
  std::unique_lock lock(cache.mutex);
  cache.values.try_emplace(prec, value);
  return value;
}

BigReal reference_pi(Bits prec) {
  BigReal out(prec);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

double precision_digits(Bits prec) { return static_cast<double>(prec) * std::log10(2.0); }

double matched_digits(const BigReal& a, const BigReal& b) {
  const Bits prec = std::min(a.prec(), b.prec());
  const double cap = precision_digits(prec);
  BigReal diff = abs(a - b);
  if (diff.is_zero()) return cap;
  BigReal scale = max(abs(b), BigReal(1, prec));
  const double digits = -log10(diff / scale).to_double();
  return std::min(digits, cap);
}

}  // namespace piforge
