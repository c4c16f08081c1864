#include "piforge/rational.hpp"

#include <cctype>

#include "piforge/errors.hpp"

namespace piforge {
namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw DomainError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw DomainError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  ExactRational out(num, den);
  out.canonicalize();
  return out;
}

ExactRational parse_positive_rational(std::string_view text) {
  ExactRational out = parse_rational(text);
  if (sgn(out) <= 0) throw DomainError("expected a positive rational, got '" + std::string(text) + "'");
  return out;
}

std::string format_rational(const ExactRational& value) {
  ExactRational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

BigReal sqrt_rational(const ExactRational& r, Bits prec) {
  if (sgn(r) < 0) throw DomainError("sqrt of negative rational");
  return sqrt(BigReal(r, prec + kGuardBits)).with_prec(prec);
}

}  // namespace piforge
