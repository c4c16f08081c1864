#include "doctest.h"

#include <random>
#include <thread>

#include "oracles.hpp"
#include "piforge/errors.hpp"
#include "piforge/series.hpp"
#include "piforge/series_json.hpp"
#include "piforge/symbolic.hpp"

using namespace piforge;

TEST_CASE("c2 coefficients") {
  CHECK(c2(0) == 1);
  CHECK(c2(1) == ExactRational(1, 4));
  for (long n = 0; n <= 30; ++n) {
    ExactRational conv = 0;
    for (long s = 0; s <= n; ++s) conv += c1(s) * c1(n - s);
    CHECK(c2(n) == conv);
  }
  ExactRational prev_ratio = 0;
  for (long n = 1; n <= 50; ++n) {
    CHECK(sgn(c2(n)) > 0);
    ExactRational ratio = c2(n + 1) / c2(n);
    CHECK(ratio < 1);
    if (n > 1) CHECK(ratio > prev_ratio);
    prev_ratio = ratio;
  }
}

TEST_CASE("cp coefficients") {
  CHECK(cp(4, 0) == 1);
  CHECK(cp(4, 1) == ExactRational(1, 2));
  CHECK(cp(6, 1) == ExactRational(3, 4));
  CHECK_THROWS_AS(cp(3, 1), DomainError);
  CHECK_THROWS_AS(cp(8, 1), DomainError);
  CHECK_THROWS_AS(cp(2, -1), DomainError);

  // sum c6(n) x^n = phi(x)^6, the cube of the c2 generating function.
  const Bits prec = 256;
  BigReal x = BigReal(1, prec) / 10;
  BigReal sum(prec);
  BigReal xn(1, prec);
  for (long n = 0; n < 60; ++n, xn *= x) sum += BigReal(cp(6, n), prec) * xn;
  CHECK(abs(sum - pow(oracle::phi_series(x, prec), 6)) < BigReal::from_string("1e-30", prec));
}

TEST_CASE("cp memo under concurrent readers") {
  std::vector<std::thread> threads;
  std::vector<ExactRational> seen(8);
  for (int t = 0; t < 8; ++t) threads.emplace_back([&, t] { seen[t] = cp(6, 150 + t); });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) CHECK(seen[t] == cp(6, 150 + t));
}

TEST_CASE("bracket from falling factorials") {
  const Bits prec = 128;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<BigReal> A;
  for (int i = 0; i < 5; ++i) A.push_back(BigReal(d(rng), prec));
  auto B = bracket_from_A(A, 2);
  CHECK(B[4] == A[4]);
  CHECK(B[3] == A[3] - 6 * A[4]);
  CHECK(B[2] == A[2] - 3 * A[3] + 11 * A[4]);
  CHECK(B[1] == A[1] - A[2] + 2 * A[3] - 6 * A[4]);
  CHECK(B[0] == A[0]);

  A.clear();
  for (int i = 0; i < 7; ++i) A.push_back(BigReal(d(rng), prec));
  B = bracket_from_A(A, 3);
  CHECK(B[5] == A[5] - 15 * A[6]);
  CHECK(B[4] == A[4] - 10 * A[5] + 85 * A[6]);
  CHECK(B[3] == A[3] - 6 * A[4] + 35 * A[5] - 225 * A[6]);
  CHECK(B[2] == A[2] - 3 * A[3] + 11 * A[4] - 50 * A[5] + 274 * A[6]);
  CHECK(B[1] == A[1] - A[2] + 2 * A[3] - 6 * A[4] + 24 * A[5] - 120 * A[6]);

  std::vector<BigReal> unit(7, BigReal(prec));
  unit[0] = BigReal(1, prec);
  auto Bu = bracket_from_A(unit, 3);
  CHECK(Bu[0] == 1L);
  for (int j = 1; j <= 6; ++j) CHECK(Bu[j].is_zero());
  CHECK_THROWS_AS(bracket_from_A(unit, 2), DomainError);
}

TEST_CASE("series arguments") {
  const Bits prec = 512;
  BigReal s2 = sqrt(BigReal(2, prec + 16));
  BigReal s5 = sqrt(BigReal(5, prec + 16));
  CHECK(matched_digits(build_series(2, 2, prec).x, 40 * s2 - 56) >= 150);
  CHECK(matched_digits(build_series(3, 7, prec).x, BigReal(1, prec) / 64) >= 150);
  CHECK(matched_digits(build_series(3, 15, prec).x, (47 - 21 * s5) / 128) >= 150);
  CHECK_THROWS_AS(build_series(2, 1, prec), DomainError);
  CHECK_THROWS_AS(build_series(0, 2, prec), DomainError);
  CHECK_THROWS_AS(build_series(2, 100000000, prec), PrecisionError);
}

TEST_CASE("example ii bracket from the solve") {
  const Bits prec = 512;
  SeriesSpec built = build_series(3, 7, prec);
  // Printed coefficients over the common denominator 307323.
  const long numerators[] = {307323, 913150, -75313 * 3, -4998980, -1126755 * 9, -1080450 * 9, -453789 * 9};
  for (int j = 0; j <= 6; ++j) {
    BigReal scaled = built.bracket[j] * 307323;
    CHECK(abs(scaled - numerators[j]) < pow2(-400, prec));
  }
  CHECK(matched_digits(built.g, BigReal(-14417920, prec) / 34147) >= 150);

  // Term by term against the replay catalog.
  SeriesSpec printed = published_series()[2].spec(prec);
  for (int j = 0; j <= 6; ++j) CHECK(matched_digits(built.bracket[j], printed.bracket[j]) >= 150);
}

TEST_CASE("nu = 1 series sums to g / pi^2") {
  const Bits prec = 256;
  SeriesSpec s = build_series(1, 2, prec);
  BigReal sum = evaluate(s, 330, prec);
  BigReal expected = s.g / square(reference_pi(prec));
  CHECK(abs(sum - expected) < pow2(-prec + 48, prec) * abs(expected));
}

TEST_CASE("evaluate") {
  const Bits prec = 256;
  SeriesSpec s = build_series(3, 7, prec);
  CHECK(evaluate(s, 1, prec) == 1L);
  CHECK(evaluate(s, 100, prec) == evaluate(s, 100, prec));
  CHECK_THROWS_AS(evaluate(s, 0, prec), DomainError);
  SeriesSpec bad = s;
  bad.bracket.pop_back();
  CHECK_THROWS_AS(evaluate(bad, 10, prec), DomainError);
}

TEST_CASE("verify") {
  SeriesSpec s = build_series(3, 7, 512);
  VerificationReport rep = verify(s, 60, 512);
  CHECK(rep.passed);
  CHECK(rep.matched > 98);
  CHECK(rep.predicted == doctest::Approx(60 * 1.80618).epsilon(1e-4));
  CHECK(verify(s, 20, 512).passed);
  CHECK_THROWS_AS(verify(s, 60, 128, 100.0), PrecisionError);
  try {
    verify(s, 60, 128, 100.0);
  } catch (const PrecisionError& e) {
    CHECK(e.required_bits() > 332);
  }
  CHECK_FALSE(verify(s, 60, 512, 120.0).passed);
}

TEST_CASE("published series replay") {
  for (const auto& rep : replay_paper(512)) {
    INFO(rep.name << ": " << rep.matched << " digits, threshold " << rep.threshold);
    CHECK(rep.passed);
  }
  // Example i: the printed lower index n = 1 misses the right side by the n = 0 term.
  PublishedSeries ex1 = published_series()[1];
  CHECK(ex1.printed_start == 1);
  ex1.start_index = 1;
  SeriesSpec spec = ex1.spec(512);
  VerificationReport shifted = verify_against(spec, ex1.rhs(520) / spec.display_scale, ex1.name, 200, 512);
  CHECK_FALSE(shifted.passed);
  CHECK(abs(shifted.sum - shifted.expected + 1) < pow2(-100, 512));
}

TEST_CASE("corrupted published constant is detected") {
  PublishedSeries ps = published_series()[0];
  ps.bracket[0].a += 1;  // 462719 -> 462720
  SeriesSpec spec = ps.spec(512);
  CHECK_FALSE(verify_against(spec, ps.rhs(520) / spec.display_scale, ps.name, ps.terms, 512).passed);
  PublishedSeries ps2 = published_series()[2];
  ps2.rhs_numerator += 1;
  SeriesSpec spec2 = ps2.spec(512);
  CHECK_FALSE(verify_against(spec2, ps2.rhs(520), ps2.name, ps2.terms, 512).passed);
}

TEST_CASE("solved series agree with g over an independent pi") {
  for (const auto& ps : published_series()) {
    SeriesSpec built = build_series(ps.nu, ps.r, 512);
    BigReal solved = built.g / pow(reference_pi(520), 2 * ps.nu);
    BigReal printed = ps.rhs(512) / ps.spec(512).display_scale;
    INFO(ps.name);
    CHECK(matched_digits(solved, printed) >= 140);
  }
}

TEST_CASE("SeriesSpec JSON round trip") {
  const Bits prec = 512;
  SeriesSpec s = build_series(3, 15, prec);
  auto doc = to_json(s);
  CHECK(doc["schema"] == "piforge/1");
  CHECK(doc["r"] == "15");
  CHECK(doc["bracket_decimals"].size() == 7);
  SeriesSpec back = series_from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back.nu == 3);
  CHECK(back.r == 15);
  CHECK(abs(back.x - s.x) <= pow2(-prec + 4, prec) * abs(s.x));
  CHECK(abs(back.g - s.g) <= pow2(-prec + 4, prec) * abs(s.g));
  for (int j = 0; j <= 6; ++j) CHECK(abs(back.bracket[j] - s.bracket[j]) <= pow2(-prec + 4, prec) * abs(s.bracket[j]));
  CHECK(to_json(back).dump() == doc.dump());
  CHECK(to_json(build_series(3, 15, prec)).dump() == doc.dump());

  auto wrong = doc;
  wrong["schema"] = "piforge/0";
  CHECK_THROWS_AS(series_from_json(wrong), DomainError);
  auto missing = doc;
  missing.erase("g_decimal");
  CHECK_THROWS_AS(series_from_json(missing), DomainError);
  auto ratio = doc;
  ratio["r"] = "2/5";
  CHECK(series_from_json(ratio).r == ExactRational(2, 5));
}
