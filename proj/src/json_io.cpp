#include "partpos/json_io.hpp"

#include "partpos/errors.hpp"
#include "partpos/render.hpp"

namespace partpos {

Json params_to_json(const SpaceParams& params) {
  Json j = Json::object();
  if (params.n) j["n"] = *params.n;
  if (params.p) j["p"] = *params.p;
  if (params.q) j["q"] = *params.q;
  return j;
}

SpaceParams params_from_json(const Json& j) {
  if (!j.is_object()) throw ParameterError("params must be a JSON object");
  SpaceParams out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw ParameterError("parameter '" + key + "' must be an integer");
    if (key == "n")
      out.n = value.get<int>();
    else if (key == "p")
      out.p = value.get<int>();
    else if (key == "q")
      out.q = value.get<int>();
    else
      throw ParameterError("unknown parameter '" + key + "'");
  }
  return out;
}

Json report_to_json(const SValueReport& report) {
  Json j;
  j["family"] = std::string(to_string(report.space.family));
  j["params"] = params_to_json(report.space.params);
  j["l"] = report.space.ambient.rank;
  j["r"] = report.space.rank;
  j["dimension"] = report.space.dimension;
  j["s_k"] = report.s_k;
  j["s"] = report.s;
  j["argmax"] = report.argmax;
  j["zero_count"] = report.zero_count;
  Json mult = Json::array();
  for (const auto& [lambda, count] : report.multiplicities)
    mult.push_back(Json{{"lambda", lambda.values()}, {"count", count}});
  j["multiplicities"] = std::move(mult);
  return j;
}

SValueReport report_from_json(const Json& j) {
  try {
    const auto space = make_space(parse_family(j.at("family").get<std::string>()), params_from_json(j.at("params")));
    if (j.at("l").get<int>() != space.ambient.rank || j.at("r").get<int>() != space.rank ||
        j.at("dimension").get<int>() != space.dimension)
      throw ParameterError("l, r or dimension disagree with the catalog");

    SValueReport report{space, j.at("s_k").get<std::vector<int>>(), j.at("argmax").get<std::vector<int>>(),
                        j.at("s").get<int>(), {}, j.at("zero_count").get<int>(), {}};
    if (report.s_k.size() != static_cast<std::size_t>(space.rank))
      throw ParameterError("s_k must have r entries");
    for (int s : report.s_k) report.delta_counts.push_back(s - space.rank);
    for (const auto& m : j.at("multiplicities")) {
      RestrictedVector lambda(m.at("lambda").get<std::vector<int>>());
      if (lambda.size() != static_cast<std::size_t>(space.rank)) throw ParameterError("lambda must have r entries");
      report.multiplicities[lambda] = m.at("count").get<int>();
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed report JSON: ") + e.what());
  }
}

Json discrepancies_to_json(const DiscrepancyReport& report) {
  Json j;
  j["family"] = std::string(to_string(report.family));
  j["range"] = {report.range.lo, report.range.hi};
  Json entries = Json::array();
  for (const auto& e : report.entries)
    entries.push_back(Json{{"params", params_to_json(e.params)},
                           {"enumerated", e.enumerated},
                           {"table", e.table},
                           {"corrected", e.corrected}});
  j["entries"] = std::move(entries);
  j["notes"] = report.notes;
  return j;
}

Json catalog_to_json() {
  Json out = Json::array();
  for (const auto& entry : catalog()) {
    const auto params = default_table_params(entry.family);
    const auto space = make_space(entry.family, params);
    Json j;
    j["family"] = std::string(to_string(entry.family));
    j["label"] = std::string(entry.label);
    j["constraints"] = std::string(entry.constraints);
    j["rank_rule"] = std::string(entry.rank_rule);
    j["dimension_rule"] = std::string(entry.dimension_rule);
    j["s_rule"] = std::string(entry.s_rule);
    j["proj_rule"] = std::string(entry.proj_rule);
    j["sample"] = {{"params", params_to_json(space.params)},
                   {"ambient", space.ambient.name()},
                   {"rank", space.rank},
                   {"dimension", space.dimension},
                   {"s", s_value(space)},
                   {"proj", std::vector<int>(space.map.proj().begin(), space.map.proj().end())}};
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace partpos
