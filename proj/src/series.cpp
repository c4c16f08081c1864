#include "piforge/series.hpp"

#include <cmath>
#include <future>
#include <shared_mutex>
#include <thread>

#include "piforge/elliptic.hpp"
#include "piforge/errors.hpp"
#include "piforge/symbolic.hpp"

namespace piforge {
namespace {

constexpr long kChunk = 32;

mpz_class central_binomial(long n) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
  return b;
}

mpz_class sixty_four_pow(long n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 64, static_cast<unsigned long>(n));
  return p;
}

ExactRational c2_direct(long n) {
  mpz_class sum = 0;
  for (long s = 0; s <= n; ++s) {
    mpz_class a = central_binomial(s);
    mpz_class b = central_binomial(n - s);
    sum += a * a * a * b * b * b;
  }
  ExactRational out(sum, sixty_four_pow(n));
  out.canonicalize();
  return out;
}

// Coefficient tables for p = 2, 4, 6, grown on demand.
class CoefficientTables {
 public:
  ExactRational get(int p, long n) {
    const std::size_t slot = static_cast<std::size_t>(p / 2 - 1);
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < tables_[slot].size()) return tables_[slot][static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    extend(slot, n);
    return tables_[slot][static_cast<std::size_t>(n)];
  }

 private:
  void extend(std::size_t slot, long n) {
    if (slot > 0) extend(slot - 1, n);
    if (slot == 0) extend_base(n);
    auto& t = tables_[slot];
    const auto& base = tables_[0];
    const auto& lower = slot > 0 ? tables_[slot - 1] : tables_[0];
    if (slot == 0) return;
    for (long m = static_cast<long>(t.size()); m <= n; ++m) {
      ExactRational acc = 0;
      for (long s = 0; s <= m; ++s) acc += lower[static_cast<std::size_t>(s)] * base[static_cast<std::size_t>(m - s)];
      t.push_back(acc);
    }
  }
  void extend_base(long n) {
    auto& t = tables_[0];
    for (long m = static_cast<long>(t.size()); m <= n; ++m) t.push_back(c2_direct(m));
  }

  std::shared_mutex mutex_;
  std::vector<ExactRational> tables_[3];
};

CoefficientTables& tables() {
  static CoefficientTables t;
  return t;
}

// Signed Stirling numbers of the first kind s(m, j), m, j <= size.
std::vector<std::vector<mpz_class>> stirling_first(int size) {
  std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(size) + 1,
                                        std::vector<mpz_class>(static_cast<std::size_t>(size) + 1, 0));
  s[0][0] = 1;
  for (int m = 1; m <= size; ++m)
    for (int j = 1; j <= m; ++j) s[m][j] = s[m - 1][j - 1] - (m - 1) * s[m - 1][j];
  return s;
}

BigReal pi_power(const BigReal& pi, int nu) { return pow(pi, 2 * nu); }

}  // namespace

ExactRational c1(long n) {
  if (n < 0) throw DomainError("c1: n must be nonnegative");
  mpz_class b = central_binomial(n);
  ExactRational out(b * b * b, sixty_four_pow(n));
  out.canonicalize();
  return out;
}

ExactRational c2(long n) { return cp(2, n); }

ExactRational cp(int p, long n) {
  if (p != 2 && p != 4 && p != 6) throw DomainError("cp: p must be 2, 4 or 6");
  if (n < 0) throw DomainError("cp: n must be nonnegative");
  return tables().get(p, n);
}

std::vector<BigReal> bracket_from_A(const std::vector<BigReal>& A, int nu) {
  const int size = 2 * nu;
  if (static_cast<int>(A.size()) != size + 1)
    throw DomainError("bracket_from_A: expected " + std::to_string(size + 1) + " coefficients, got " +
                      std::to_string(A.size()));
  auto s = stirling_first(size);
  Bits prec = kMinPrecision;
  for (const auto& a : A) prec = std::max(prec, a.prec());
  std::vector<BigReal> B(static_cast<std::size_t>(size) + 1, BigReal(prec));
  for (int m = 0; m <= size; ++m)
    for (int j = 0; j <= m; ++j)
      if (s[m][j] != 0) B[j] += A[m] * BigReal(s[m][j], prec);
  return B;
}

std::string provenance_name(Provenance p) { return p == Provenance::solved ? "solved" : "paper-replay"; }

double SeriesSpec::digits_per_term() const { return -log10(abs(x)).to_double(); }

SeriesSpec build_series(int nu, const ExactRational& r, Bits prec) {
  if (nu < 1 || nu > 3) throw DomainError("build_series: nu must be 1, 2 or 3");
  if (sgn(r) <= 0) throw DomainError("build_series: r must be positive");
  const Bits wp = prec + 2 * kGuardBits;
  ModulusContext ctx = singular_modulus(r, wp);
  BigReal x = 4 * square(ctx.k * ctx.kprime);
  if (abs(x) >= 1 - pow2(-(prec / 2), wp))
    throw DomainError("build_series: non-convergent series, |x| = " + x.to_string(12) + " at r = " + format_rational(r));
  CoefficientSolution sol = solve_coefficients(nu, r, wp);
  SeriesSpec spec;
  spec.nu = nu;
  spec.r = r;
  spec.x = x.with_prec(prec);
  for (auto& b : bracket_from_A(sol.A, nu)) spec.bracket.push_back(b.with_prec(prec));
  spec.g = sol.g.with_prec(prec);
  spec.prec = prec;
  spec.provenance = Provenance::solved;
  spec.start_index = 0;
  spec.display_scale = BigReal(1, prec);
  return spec;
}

BigReal evaluate(const SeriesSpec& spec, long terms, Bits prec) {
  if (terms < 1) throw DomainError("evaluate: at least one term is required");
  if (static_cast<int>(spec.bracket.size()) != 2 * spec.nu + 1)
    throw DomainError("evaluate: bracket must have 2 nu + 1 entries");
  const Bits wp = prec + 2 * kGuardBits + static_cast<Bits>(std::log2(static_cast<double>(terms) + 1));
  const int p = 2 * spec.nu;
  const long first = spec.start_index;
  const long last = std::max(first, terms);  // exclusive
  if (last > first) cp(p, last - 1);  // fill the table once, before any worker reads it

  BigReal x = spec.x.with_prec(wp);
  auto chunk_sum = [&](long begin, long end) {
    BigReal acc(wp);
    BigReal xn = pow(x, begin);
    for (long n = begin; n < end; ++n) {
      BigReal bn(wp);
      for (std::size_t j = spec.bracket.size(); j-- > 0;) bn = bn * n + spec.bracket[j];
      acc += BigReal(cp(p, n), wp) * xn * bn;
      xn *= x;
    }
    return acc;
  };

  std::vector<std::pair<long, long>> chunks;
  for (long b = first; b < last; b += kChunk) chunks.emplace_back(b, std::min(last, b + kChunk));
  std::vector<BigReal> partial(chunks.size(), BigReal(wp));
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  if (workers == 1 || chunks.size() < 2) {
    for (std::size_t i = 0; i < chunks.size(); ++i) partial[i] = chunk_sum(chunks[i].first, chunks[i].second);
  } else {
    std::vector<std::future<BigReal>> futures;
    for (const auto& c : chunks) futures.push_back(std::async(std::launch::async, chunk_sum, c.first, c.second));
    for (std::size_t i = 0; i < futures.size(); ++i) partial[i] = futures[i].get();
  }
  BigReal total(wp);
  for (const auto& s : partial) total += s;
  return total.with_prec(prec);
}

double verification_threshold(const SeriesSpec& spec, long terms, Bits prec) {
  double model = static_cast<double>(terms) * spec.digits_per_term() -
                 2.0 * spec.nu * std::log10(static_cast<double>(std::max(terms, 1L)));
  return std::min(model, precision_digits(prec)) - 10.0;
}

VerificationReport verify_against(const SeriesSpec& spec, const BigReal& rhs, std::string name, long terms,
                                  Bits prec) {
  VerificationReport rep;
  rep.name = std::move(name);
  rep.terms = terms;
  rep.sum = evaluate(spec, terms, prec);
  rep.expected = rhs.with_prec(prec);
  rep.abs_error = abs(rep.sum - rep.expected);
  rep.matched = matched_digits(rep.sum, rep.expected);
  rep.predicted = static_cast<double>(terms) * spec.digits_per_term();
  rep.threshold = verification_threshold(spec, terms, prec);
  rep.passed = rep.matched >= rep.threshold;
  return rep;
}

VerificationReport verify(const SeriesSpec& spec, long terms, Bits prec, std::optional<double> min_digits) {
  if (min_digits && *min_digits > precision_digits(prec)) {
    long need = static_cast<long>(std::ceil(*min_digits / std::log10(2.0))) + 2 * kGuardBits;
    throw PrecisionError("verify: " + std::to_string(*min_digits) + " digits need at least " + std::to_string(need) +
                             " bits, have " + std::to_string(prec),
                         need);
  }
  const Bits wp = prec + kGuardBits;
  BigReal expected = spec.g.with_prec(wp) / pi_power(reference_pi(wp), spec.nu);
  std::string name = "nu=" + std::to_string(spec.nu) + " r=" + format_rational(spec.r);
  VerificationReport rep = verify_against(spec, expected, std::move(name), terms, prec);
  if (min_digits) rep.passed = rep.passed && rep.matched >= *min_digits;
  return rep;
}

BigReal Surd::value(Bits prec) const {
  BigReal out(a, prec);
  if (sgn(b) != 0) out += BigReal(b, prec) * sqrt(BigReal(d, prec));
  return out;
}

BigReal PublishedSeries::rhs(Bits prec) const {
  const Bits wp = prec + 2 * kGuardBits;
  return (BigReal(rhs_numerator, wp) / (rhs_denominator.value(wp) * pi_power(reference_pi(wp), nu))).with_prec(prec);
}

SeriesSpec PublishedSeries::spec(Bits prec) const {
  const Bits wp = prec + 2 * kGuardBits;
  SeriesSpec s;
  s.nu = nu;
  s.r = r;
  s.x = x.value(prec);
  BigReal b0 = bracket.front().value(wp);
  for (const auto& b : bracket) s.bracket.push_back((b.value(wp) / b0).with_prec(prec));
  s.g = (BigReal(rhs_numerator, wp) / (rhs_denominator.value(wp) * b0)).with_prec(prec);
  s.prec = prec;
  s.provenance = Provenance::paper_replay;
  s.start_index = start_index;
  s.display_scale = b0.with_prec(prec);
  return s;
}

const std::vector<PublishedSeries>& published_series() {
  static const std::vector<PublishedSeries> catalog = [] {
    auto q = [](const char* text) { return parse_rational(text); };
    auto s2 = [&](const char* a, const char* b) { return Surd{q(a), q(b), 2}; };
    auto s5 = [&](const char* a, const char* b) { return Surd{q(a), q(b), 5}; };
    auto rat = [&](const char* a) { return Surd{q(a), 0, 1}; };
    std::vector<PublishedSeries> out;

    out.push_back({"1/pi^4, r=2",
                   2,
                   2,
                   s2("-56", "40"),
                   {rat("462719"), s2("1460360", "281335"), s2("1611846", "489480"), s2("537776", "128620"),
                    s2("-144836", "-139200")},
                   s2("-229441", "162240"),
                   q("-48585495"),
                   0,
                   0,
                   200});

    out.push_back({"1/pi^6 example i, r=2",
                   3,
                   2,
                   s2("-56", "40"),
                   {rat("1"), s2("28335508172/12623771801", "-240070543/12623771801"),
                    s2("22911684702/12623771801", "-3047538900/12623771801"),
                    s2("6110502200/12623771801", "-5456734120/12623771801"),
                    s2("-1196112280/12623771801", "-3649618320/12623771801"),
                    s2("-505494672/12623771801", "-788011092/12623771801"),
                    s2("463408744/37871315403", "244639040/37871315403")},
                   s2("629823301", "-445352320"),
                   q("3465"),
                   1,
                   0,
                   200});

    out.push_back({"1/pi^6 example ii, r=7",
                   3,
                   7,
                   rat("1/64"),
                   {rat("1"), rat("913150/307323"), rat("-75313/102441"), rat("-4998980/307323"),
                    rat("-1126755/34147"), rat("-1080450/34147"), rat("-453789/34147")},
                   rat("34147"),
                   q("-14417920"),
                   0,
                   0,
                   90});

    out.push_back({"1/pi^6 example iii, r=15",
                   3,
                   15,
                   s5("47/128", "-21/128"),
                   {rat("1"), s5("2877117109830/293049243769", "924178552332/293049243769"),
                    s5("15689590644975/293049243769", "6660423786240/293049243769"),
                    s5("51863088153600/293049243769", "23066524139820/293049243769"),
                    s5("106483989569175/293049243769", "47630637457200/293049243769"),
                    s5("130261549416750/293049243769", "58266415341540/293049243769"),
                    s5("75619648012725/293049243769", "33817435224300/293049243769")},
                   s5("11556387", "-5162500"),
                   q("20185088"),
                   0,
                   0,
                   48});
    return out;
  }();
  return catalog;
}

std::vector<VerificationReport> replay_paper(Bits prec) {
  std::vector<VerificationReport> out;
  for (const auto& ps : published_series()) {
    SeriesSpec spec = ps.spec(prec);
    // Printed right side, rescaled to the B_0 = 1 normalization.
    BigReal rhs = ps.rhs(prec + kGuardBits) / spec.display_scale;
    out.push_back(verify_against(spec, rhs, ps.name, ps.terms, prec));
  }
  return out;
}

}  // namespace piforge
