#pragma once

#include "json.hpp"

#include "piforge/series.hpp"

namespace piforge {

inline constexpr const char* kSchema = "piforge/1";

/// Flat document: schema, nu, r ("p/q"), x_decimal, bracket_decimals,
/// g_decimal, prec_bits, dpt, provenance, start_index, display_scale_decimal.
/// Decimal strings carry every digit the precision determines.
nlohmann::ordered_json to_json(const SeriesSpec& spec);

/// Inverse of to_json. Throws DomainError on a missing field, a wrong
/// schema tag or malformed numbers.
SeriesSpec series_from_json(const nlohmann::json& doc);

}  // namespace piforge
