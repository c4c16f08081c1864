#include "piforge/series_json.hpp"

#include "piforge/errors.hpp"

namespace piforge {

nlohmann::ordered_json to_json(const SeriesSpec& spec) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["nu"] = spec.nu;
  doc["r"] = format_rational(spec.r);
  doc["x_decimal"] = spec.x.to_decimal();
  auto bracket = nlohmann::ordered_json::array();
  for (const auto& b : spec.bracket) bracket.push_back(b.to_decimal());
  doc["bracket_decimals"] = bracket;
  doc["g_decimal"] = spec.g.to_decimal();
  doc["prec_bits"] = spec.prec;
  doc["dpt"] = spec.digits_per_term();
  doc["provenance"] = provenance_name(spec.provenance);
  doc["start_index"] = spec.start_index;
  doc["display_scale_decimal"] = spec.display_scale.to_decimal();
  return doc;
}

SeriesSpec series_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("schema").get<std::string>() != kSchema)
      throw DomainError("series_from_json: unsupported schema '" + doc.at("schema").get<std::string>() + "'");
    SeriesSpec spec;
    spec.nu = doc.at("nu").get<int>();
    spec.prec = doc.at("prec_bits").get<Bits>();
    if (spec.prec < kMinPrecision) throw DomainError("series_from_json: prec_bits below minimum");
    spec.r = parse_positive_rational(doc.at("r").get<std::string>());
    spec.x = BigReal::from_string(doc.at("x_decimal").get<std::string>(), spec.prec);
    for (const auto& b : doc.at("bracket_decimals")) spec.bracket.push_back(BigReal::from_string(b.get<std::string>(), spec.prec));
    if (static_cast<int>(spec.bracket.size()) != 2 * spec.nu + 1)
      throw DomainError("series_from_json: bracket must have 2 nu + 1 entries");
    spec.g = BigReal::from_string(doc.at("g_decimal").get<std::string>(), spec.prec);
    const std::string prov = doc.at("provenance").get<std::string>();
    if (prov == "solved") spec.provenance = Provenance::solved;
    else if (prov == "paper-replay") spec.provenance = Provenance::paper_replay;
    else throw DomainError("series_from_json: unknown provenance '" + prov + "'");
    spec.start_index = doc.value("start_index", 0L);
    spec.display_scale = doc.contains("display_scale_decimal")
                             ? BigReal::from_string(doc.at("display_scale_decimal").get<std::string>(), spec.prec)
                             : BigReal(1, spec.prec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("series_from_json: ") + e.what());
  }
}

}  // namespace piforge
