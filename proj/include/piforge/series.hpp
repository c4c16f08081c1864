#pragma once

// Ramanujan-type series sum_n c_{2nu}(n) x^n B(n) = g / pi^(2 nu):
// exact coefficients, construction from the solved A_j, truncated
// evaluation and digit-level verification.

#include <optional>
#include <string>
#include <vector>

#include "piforge/big_real.hpp"
#include "piforge/rational.hpp"

namespace piforge {

/// binom(2n, n)^3 / 64^n, the coefficients of 3F2(1/2,1/2,1/2; 1,1; x).
ExactRational c1(long n);

/// 2^(-6n) sum_{s<=n} binom(2s,s)^3 binom(2n-2s,n-s)^3.
ExactRational c2(long n);

/// Coefficients of phi(x)^p for p in {2, 4, 6}; memoized, safe to call
/// concurrently. Throws DomainError for other p.
ExactRational cp(int p, long n);

/// Converts sum_m A_m n(n-1)...(n-m+1) into sum_j B_j n^j.
/// A must have 2 nu + 1 entries.
std::vector<BigReal> bracket_from_A(const std::vector<BigReal>& A, int nu);

enum class Provenance { solved, paper_replay };
std::string provenance_name(Provenance p);

struct SeriesSpec {
  int nu = 0;
  ExactRational r;
  BigReal x;                     ///< series argument 4 k_r^2 k'_r^2
  std::vector<BigReal> bracket;  ///< B_0..B_{2 nu}, B_0 = 1
  BigReal g;                     ///< sum = g / pi^(2 nu)
  Bits prec = kDefaultPrecision;
  Provenance provenance = Provenance::solved;
  long start_index = 0;
  BigReal display_scale;  ///< factor turning the stored bracket into the printed one

  /// -log10 |x|
  double digits_per_term() const;
};

/// Full pipeline: singular modulus, alpha, coefficient solve, bracket.
/// Throws DomainError when |x| >= 1 (non-convergent, e.g. r = 1).
SeriesSpec build_series(int nu, const ExactRational& r, Bits prec);

/// sum_{start <= n < N} c_{2nu}(n) x^n B(n). Terms are summed in fixed
/// chunks, possibly on several threads, and the chunk sums are added in
/// index order, so the result does not depend on scheduling.
BigReal evaluate(const SeriesSpec& spec, long terms, Bits prec);

struct VerificationReport {
  std::string name;
  long terms = 0;
  BigReal sum;
  BigReal expected;         ///< right side, or g / pi^(2 nu) with an independent pi
  BigReal abs_error;
  double matched = 0;       ///< decimal digits of agreement
  double predicted = 0;     ///< N * dpt
  double threshold = 0;     ///< digits required to pass
  bool passed = false;
};

/// Truncation model: N dpt - 2 nu log10 N, capped at the digits of prec,
/// minus 10 digits of slack.
double verification_threshold(const SeriesSpec& spec, long terms, Bits prec);

/// Compares the truncated sum with g / pi^(2 nu), pi from the reference
/// implementation. When min_digits is given and exceeds what prec can
/// carry, throws PrecisionError with the bits needed.
VerificationReport verify(const SeriesSpec& spec, long terms, Bits prec,
                          std::optional<double> min_digits = std::nullopt);

/// Same, against an explicit right side.
VerificationReport verify_against(const SeriesSpec& spec, const BigReal& rhs, std::string name, long terms,
                                  Bits prec);

/// a + b sqrt(d), with a, b rational.
struct Surd {
  ExactRational a;
  ExactRational b;
  long d = 1;

  BigReal value(Bits prec) const;
};

/// One of the printed series, coefficients exactly as published.
struct PublishedSeries {
  std::string name;
  int nu = 0;
  ExactRational r;
  Surd x;
  std::vector<Surd> bracket;  ///< printed B_0..B_{2 nu}, printed normalization
  Surd rhs_denominator;       ///< right side = rhs_numerator / (rhs_denominator pi^(2 nu))
  ExactRational rhs_numerator;
  long printed_start = 0;     ///< lower summation index as printed
  long start_index = 0;       ///< index that reproduces the right side
  long terms = 0;             ///< truncation used for replay

  BigReal rhs(Bits prec) const;
  /// Spec with B_0 normalized to 1 and display_scale = printed B_0.
  SeriesSpec spec(Bits prec) const;
};

/// The four printed series: the 1/pi^4 application at r = 2 and the 1/pi^6
/// examples at r = 2, 7, 15.
const std::vector<PublishedSeries>& published_series();

/// Verifies every published series against its printed right side and
/// against g = rhs * pi^(2 nu) with an independent pi.
std::vector<VerificationReport> replay_paper(Bits prec);

}  // namespace piforge
