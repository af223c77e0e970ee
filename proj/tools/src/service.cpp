#include "ecohome/service.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "ecohome/query.hpp"
#include "httplib.h"
#include "json.hpp"

namespace ecohome {

namespace {

using nlohmann::json;

ApiResponse error_response(const std::string& message) {
  return {400, json{{"error", message}}.dump()};
}

// Values of the facet parameters, indexed by drill-down position.
using FacetParams = std::array<std::optional<std::string>, 4>;

std::optional<std::string> collect(const QueryParams& params, FacetParams& out) {
  for (FacetKey key : kDrillDownOrder) {
    const std::string name(facet_name(key));
    const auto [first, last] = params.equal_range(name);
    if (first == last) continue;
    if (std::next(first) != last) return "duplicate parameter '" + name + "'";
    if (first->second.empty()) return "empty value for '" + name + "'";
    out[facet_index(key)] = first->second;
  }
  return std::nullopt;
}

}  // namespace

ApiResponse AdviceApi::facets(std::string_view facet, const QueryParams& params) const {
  const auto target = parse_facet(facet);
  if (!target) return error_response("unknown facet '" + std::string(facet) + "'");

  FacetParams values;
  if (auto problem = collect(params, values)) return error_response(*problem);

  std::vector<std::string> prefix;
  for (FacetKey key : kDrillDownOrder) {
    const auto& value = values[facet_index(key)];
    if (!value) continue;
    if (facet_index(key) >= facet_index(*target)) {
      return error_response("'" + std::string(facet_name(key)) + "' cannot constrain '" +
                            std::string(facet_name(*target)) + "'");
    }
    if (prefix.size() != facet_index(key)) {
      return error_response("'" + std::string(facet_name(key)) + "' requires '" +
                            std::string(facet_name(kDrillDownOrder[prefix.size()])) + "'");
    }
    prefix.push_back(*value);
  }

  const auto found = distinct_values(kb_, *target, Selection::from_prefix(std::move(prefix)));
  return {200, json{{"values", found}}.dump()};
}

ApiResponse AdviceApi::advice(const QueryParams& params) const {
  FacetParams values;
  if (auto problem = collect(params, values)) return error_response(*problem);

  std::vector<std::string> full;
  for (FacetKey key : kDrillDownOrder) {
    const auto& value = values[facet_index(key)];
    if (!value) return error_response("missing parameter '" + std::string(facet_name(key)) + "'");
    full.push_back(*value);
  }

  json results = json::array();
  for (const AdviceResult& r : resolve_advice(kb_, Selection::from_prefix(std::move(full)))) {
    results.push_back({{"advice", r.advice_text}, {"rationale", r.rationale}});
  }
  return {200, json{{"results", std::move(results)}}.dump()};
}

ApiResponse AdviceApi::health() const {
  nlohmann::ordered_json body;
  body["status"] = "ok";
  body["facts"] = kb_.size();
  return {200, body.dump()};
}

void mount_routes(httplib::Server& server, const AdviceApi& api,
                  const std::optional<std::filesystem::path>& static_dir) {
  auto reply = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };

  server.Get("/api/health", [&api, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, api.health());
  });
  server.Get(R"(/api/facets/([^/]+))", [&api, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.facets(req.matches[1].str(), req.params));
  });
  server.Get("/api/advice", [&api, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.advice(req.params));
  });

  if (static_dir && !server.set_mount_point("/", static_dir->string())) {
    throw std::runtime_error("cannot serve static files from '" + static_dir->string() + "'");
  }
}

}  // namespace ecohome
