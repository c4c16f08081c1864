#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "piforge/alpha.hpp"
#include "piforge/elliptic.hpp"
#include "piforge/errors.hpp"
#include "piforge/identities.hpp"
#include "piforge/series.hpp"
#include "piforge/series_json.hpp"

namespace piforge::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kTextDecimals = 40;
constexpr long kMaxAutoTerms = 20000;

std::string fixed(const BigReal& x, int decimals = kTextDecimals) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", decimals, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string sci(const BigReal& x, int digits = 6) { return x.to_string(digits); }

std::string digits_text(double d) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << d;
  return os.str();
}

Json base_doc(const std::string& command, Bits prec) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  doc["prec_bits"] = prec;
  return doc;
}

void emit_line(std::ostream& out, const std::string& key, const std::string& value) {
  out << key;
  for (std::size_t i = key.size(); i < 24; ++i) out << ' ';
  out << value << '\n';
}

// -- modulus -----------------------------------------------------------------

int cmd_modulus(const CliConfig& cfg, const std::string& r_text, std::ostream& out) {
  ExactRational r = parse_positive_rational(r_text);
  const Bits prec = cfg.precision_bits;
  ModulusContext c = singular_modulus(r, prec);
  BigReal residual = abs(c.bigKprime / c.bigK - c.sqrt_r());
  BigReal threshold = pow2(-(prec - 32), prec);
  const bool ok = residual < threshold;
  if (cfg.output_format == Format::json) {
    Json doc = base_doc("modulus", prec);
    doc["r"] = format_rational(r);
    doc["q"] = c.q.to_decimal();
    doc["k"] = c.k.to_decimal();
    doc["k_prime"] = c.kprime.to_decimal();
    doc["K"] = c.bigK.to_decimal();
    doc["K_prime"] = c.bigKprime.to_decimal();
    doc["E"] = c.bigE.to_decimal();
    doc["residual"] = sci(residual);
    doc["threshold"] = sci(threshold);
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    emit_line(out, "r", format_rational(r));
    emit_line(out, "q", sci(c.q, 30));
    emit_line(out, "k", fixed(c.k));
    emit_line(out, "k'", fixed(c.kprime));
    emit_line(out, "K", fixed(c.bigK));
    emit_line(out, "K'", fixed(c.bigKprime));
    emit_line(out, "E", fixed(c.bigE));
    emit_line(out, "|K'/K - sqrt r|", sci(residual) + "  threshold " + sci(threshold) + (ok ? "  ok" : "  FAIL"));
  }
  return ok ? kOk : kVerificationFailed;
}

// -- alpha -------------------------------------------------------------------

int cmd_alpha(const CliConfig& cfg, const std::string& r_text, const std::string& route_text, std::ostream& out) {
  ExactRational r = parse_positive_rational(r_text);
  AlphaRoute route = parse_route(route_text);
  const Bits prec = cfg.precision_bits;
  AlphaValue v = alpha_by_route(route, r, prec);
  std::optional<AlphaValue> direct;
  BigReal gap(prec);
  BigReal threshold = pow2(-(prec - 32), prec);
  if (route != AlphaRoute::direct) {
    direct = alpha_direct(r, prec);
    gap = abs(v.value - direct->value);
  }
  const bool ok = gap < threshold;
  if (cfg.output_format == Format::json) {
    Json doc = base_doc("alpha", prec);
    doc["r"] = format_rational(r);
    doc["route"] = std::string(route_name(route));
    doc["value"] = v.value.to_decimal();
    doc["route_residual"] = sci(v.residual);
    if (direct) {
      doc["direct"] = direct->value.to_decimal();
      doc["route_gap"] = sci(gap);
    }
    doc["threshold"] = sci(threshold);
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    emit_line(out, "r", format_rational(r));
    emit_line(out, "route", std::string(route_name(route)));
    emit_line(out, "a(r)", fixed(v.value));
    emit_line(out, "route residual", sci(v.residual));
    if (direct) {
      emit_line(out, "a(r) direct", fixed(direct->value));
      emit_line(out, "|route - direct|", sci(gap) + "  threshold " + sci(threshold) + (ok ? "  ok" : "  FAIL"));
    }
  }
  return ok ? kOk : kVerificationFailed;
}

// -- series ------------------------------------------------------------------

long auto_terms(const SeriesSpec& spec, Bits prec) {
  const double want = precision_digits(prec);
  for (long n = 1; n <= kMaxAutoTerms; ++n) {
    double model = static_cast<double>(n) * spec.digits_per_term() - 2.0 * spec.nu * std::log10(static_cast<double>(n));
    if (model >= want) return n;
  }
  return kMaxAutoTerms;
}

int cmd_series(const CliConfig& cfg, int nu, const std::string& r_text, const std::string& emit, std::ostream& out) {
  ExactRational r = parse_positive_rational(r_text);
  const Bits prec = cfg.precision_bits;
  SeriesSpec spec = build_series(nu, r, prec);
  const long terms = cfg.terms ? *cfg.terms : auto_terms(spec, prec);
  VerificationReport rep = verify(spec, terms, prec);
  if (!emit.empty()) {
    std::ofstream file(emit);
    if (!file) throw DomainError("cannot write '" + emit + "'");
    file << to_json(spec).dump(2) << '\n';
  }
  if (cfg.output_format == Format::json) {
    Json doc = base_doc("series", prec);
    doc["spec"] = to_json(spec);
    doc["terms"] = terms;
    doc["sum"] = rep.sum.to_decimal();
    doc["expected"] = rep.expected.to_decimal();
    doc["abs_error"] = sci(rep.abs_error);
    doc["digits_matched"] = std::round(rep.matched * 100) / 100;
    doc["digits_predicted"] = std::round(rep.predicted * 100) / 100;
    doc["threshold"] = std::round(rep.threshold * 100) / 100;
    doc["passed"] = rep.passed;
    out << doc.dump(2) << '\n';
  } else {
    emit_line(out, "nu", std::to_string(nu));
    emit_line(out, "r", format_rational(r));
    emit_line(out, "x", fixed(spec.x));
    emit_line(out, "dpt", digits_text(spec.digits_per_term()));
    emit_line(out, "g", fixed(spec.g));
    for (std::size_t j = 0; j < spec.bracket.size(); ++j) emit_line(out, "B" + std::to_string(j), fixed(spec.bracket[j]));
    emit_line(out, "terms", std::to_string(terms));
    emit_line(out, "sum", fixed(rep.sum));
    emit_line(out, "g/pi^" + std::to_string(2 * nu), fixed(rep.expected));
    emit_line(out, "digits matched", digits_text(rep.matched));
    emit_line(out, "digits predicted", digits_text(rep.predicted));
    emit_line(out, "threshold", digits_text(rep.threshold) + (rep.passed ? "  PASS" : "  FAIL"));
  }
  return rep.passed ? kOk : kVerificationFailed;
}

// -- verify-paper ------------------------------------------------------------

struct Item {
  std::string group;
  std::string name;
  double matched;
  double required;
  bool passed;
};

int cmd_verify_paper(const CliConfig& cfg, std::ostream& out) {
  const Bits prec = cfg.precision_bits;
  std::vector<Item> items;
  for (const auto& rep : replay_paper(prec))
    items.push_back({"series", rep.name, rep.matched, rep.threshold, rep.passed});
  for (const auto& c : modular_identity_suite(prec))
    items.push_back({"identity", c.name, c.digits(), c.required_digits, c.passed()});
  for (const auto& c : rogers_ramanujan_suite(prec))
    items.push_back({"rogers-ramanujan", c.name, c.digits(), c.required_digits, c.passed()});
  bool all = true;
  for (const auto& it : items) all = all && it.passed;

  if (cfg.output_format == Format::json) {
    Json doc = base_doc("verify-paper", prec);
    Json arr = Json::array();
    for (const auto& it : items) {
      Json j;
      j["group"] = it.group;
      j["name"] = it.name;
      j["digits_matched"] = std::round(it.matched * 100) / 100;
      j["digits_required"] = std::round(it.required * 100) / 100;
      j["passed"] = it.passed;
      arr.push_back(j);
    }
    doc["items"] = arr;
    doc["passed"] = all;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& it : items)
      out << (it.passed ? "PASS " : "FAIL ") << it.group << ": " << it.name << "  matched " << digits_text(it.matched)
          << " need " << digits_text(it.required) << '\n';
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? kOk : kVerificationFailed;
}

void report_error(const CliConfig& cfg, std::ostream& out, std::ostream& err, const std::string& kind,
                  const std::string& message, long required_bits = 0) {
  err << "error (" << kind << "): " << message << '\n';
  if (required_bits > 0) err << "hint: retry with --prec " << required_bits << '\n';
  if (cfg.output_format == Format::json) {
    Json doc;
    doc["schema"] = kSchema;
    doc["error"]["kind"] = kind;
    doc["error"]["message"] = message;
    if (required_bits > 0) doc["error"]["required_bits"] = required_bits;
    out << doc.dump(2) << '\n';
  }
}

}  // namespace

Bits default_precision() {
  const char* env = std::getenv("PIFORGE_PREC_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < kMinPrecision)
    throw DomainError("PIFORGE_PREC_BITS must be an integer >= " + std::to_string(kMinPrecision));
  return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    cfg.precision_bits = default_precision();
  } catch (const DomainError& e) {
    err << "error (domain): " << e.what() << '\n';
    return kDomainError;
  }

  CLI::App app{"Elliptic alpha function and Ramanujan-type 1/pi^(2nu) series"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prec", cfg.precision_bits, "working precision in bits (default 512 or PIFORGE_PREC_BITS)")
      ->check(CLI::Range(kMinPrecision, 1L << 24));
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string r_text;
  std::string route = "direct";
  int nu = 0;
  long terms = 0;
  std::string emit;

  auto* modulus = app.add_subcommand("modulus", "singular modulus k_r and complete integrals");
  modulus->add_option("r", r_text, "positive rational, p or p/q")->required();

  auto* alpha = app.add_subcommand("alpha", "elliptic alpha function a(r)");
  alpha->add_option("r", r_text, "positive rational, p or p/q")->required();
  alpha->add_option("--route", route, "direct, 4r, 9r or 25r")->check(CLI::IsMember({"direct", "4r", "9r", "25r"}));

  auto* series = app.add_subcommand("series", "build, evaluate and verify a 1/pi^(2nu) series");
  series->add_option("--nu", nu, "order: 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  series->add_option("--r", r_text, "positive rational, p or p/q")->required();
  auto* terms_opt = series->add_option("--terms", terms, "number of terms")->check(CLI::PositiveNumber);
  series->add_option("--emit", emit, "write the SeriesSpec JSON to this file");

  auto* verify_paper = app.add_subcommand("verify-paper", "replay the published series and identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error (usage): " << e.what() << '\n';
    return kDomainError;
  }
  cfg.output_format = format == "json" ? Format::json : Format::text;
  if (*terms_opt) cfg.terms = terms;

  try {
    if (*modulus) return cmd_modulus(cfg, r_text, out);
    if (*alpha) return cmd_alpha(cfg, r_text, route, out);
    if (*series) return cmd_series(cfg, nu, r_text, emit, out);
    if (*verify_paper) return cmd_verify_paper(cfg, out);
  } catch (const DomainError& e) {
    report_error(cfg, out, err, "domain", e.what());
    return kDomainError;
  } catch (const DegenerateSystemError& e) {
    report_error(cfg, out, err, "degenerate", e.what());
    return kDomainError;
  } catch (const PrecisionError& e) {
    report_error(cfg, out, err, "precision", e.what(), e.required_bits());
    return kPrecisionError;
  } catch (const std::exception& e) {
    report_error(cfg, out, err, "verification", e.what());
    return kVerificationFailed;
  }
  return kDomainError;
}

}  // namespace piforge::cli
