#pragma once

#include <iosfwd>
#include <optional>

#include "piforge/big_real.hpp"

namespace piforge::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kDomainError = 2, kPrecisionError = 3 };

enum class Format { text, json };

struct CliConfig {
  Bits precision_bits = kDefaultPrecision;
  Format output_format = Format::text;
  std::optional<long> terms;
};

/// Default precision: PIFORGE_PREC_BITS when set, otherwise 512.
/// Throws DomainError when the variable is not an integer >= 64.
Bits default_precision();

/// Parses argv and runs one command. Reports go to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace piforge::cli
