#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "mosaic/colormap.hpp"
#include "mosaic/lexicon.hpp"

namespace httplib {
class Server;
}

namespace mosaic {

struct ServiceOptions {
  std::size_t max_text_chars = std::size_t{1} << 20;
  bool cors = true;
  /// Directory holding the explorer bundle; when empty or missing, "/" serves
  /// a built-in HTML shell.
  std::filesystem::path static_dir;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

using QueryParams = std::map<std::string, std::string, std::less<>>;

/// The analysis HTTP API. Handlers are const and share the lexicon and base
/// mapping read-only, so one instance serves concurrent requests.
class AnalysisService {
 public:
  AnalysisService(std::shared_ptr<const Lexicon> lexicon, MappingConfig base_mapping,
                  ServiceOptions options = {});

  /// POST /analyze with body {"text", "granularity"?, "mapping"?}.
  [[nodiscard]] HttpResponse analyze(std::string_view body) const;
  /// GET /legend?axis=&value=&nx=&ny= (defaults dominance, 0.5, 32, 32).
  [[nodiscard]] HttpResponse legend(const QueryParams& query) const;
  /// GET /lexicon/info
  [[nodiscard]] HttpResponse lexicon_info() const;
  /// GET /healthz
  [[nodiscard]] HttpResponse healthz() const;
  /// GET / when no bundle directory is configured.
  [[nodiscard]] HttpResponse index_page() const;

  /// Registers every route on `server`.
  void mount(httplib::Server& server) const;

  [[nodiscard]] const ServiceOptions& options() const noexcept { return options_; }

 private:
  std::shared_ptr<const Lexicon> lexicon_;
  MappingConfig base_mapping_;
  ServiceOptions options_;
};

/// {"error": message}
[[nodiscard]] HttpResponse error_response(int status, std::string_view message);

}  // namespace mosaic
