#pragma once

// Stateless JSON API over an immutable knowledge base.
//
//   GET /api/facets/{facet}?area=&stage=&type=   -> {"values": [...]}
//   GET /api/advice?area=&stage=&type=&ghg=       -> {"results": [{"advice":..,"rationale":..}]}
//   GET /api/health                               -> {"status":"ok","facts":N}
//
// Errors are {"error": "..."} with status 400. The client carries the
// partial selection; the server keeps no per-client state.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ecohome/kb.hpp"

namespace httplib {
class Server;
}

namespace ecohome {

struct ServiceConfig {
  std::filesystem::path kb_path;
  std::string host = "0.0.0.0";
  int port = 8080;
  /// Serves a built web UI bundle at `/` when set.
  std::optional<std::filesystem::path> static_dir;
};

struct ApiResponse {
  int status = 200;
  std::string body;
};

/// Decoded query parameters, as delivered by the HTTP layer.
using QueryParams = std::multimap<std::string, std::string>;

class AdviceApi {
 public:
  explicit AdviceApi(KnowledgeBase kb) : kb_(std::move(kb)) {}

  ApiResponse facets(std::string_view facet, const QueryParams& params) const;
  ApiResponse advice(const QueryParams& params) const;
  ApiResponse health() const;

  const KnowledgeBase& kb() const noexcept { return kb_; }

 private:
  KnowledgeBase kb_;
};

/// Registers the API routes (and the static mount, if any) on `server`.
/// `api` must outlive the server. Throws std::runtime_error when the static
/// directory cannot be mounted.
void mount_routes(httplib::Server& server, const AdviceApi& api,
                  const std::optional<std::filesystem::path>& static_dir = std::nullopt);

}  // namespace ecohome
