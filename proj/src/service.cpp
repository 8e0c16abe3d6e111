#include "mosaic/service.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <httplib.h>
#include <json.hpp>

#include "mosaic/errors.hpp"
#include "mosaic/pipeline.hpp"

namespace mosaic {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultLegendCells = 32;
constexpr std::size_t kMaxLegendCells = 256;

constexpr std::string_view kIndexHtml = R"(<!doctype html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Affect mosaic</title>
</head>
<body>
<h1>Affect mosaic</h1>
<p>The explorer bundle is not installed. The analysis API is available:</p>
<ul>
<li><code>POST /analyze</code> with <code>{"text": "...", "granularity": "sentence"}</code></li>
<li><code>GET /legend?axis=dominance&amp;value=0.5&amp;nx=32&amp;ny=32</code></li>
<li><code>GET /lexicon/info</code></li>
</ul>
</body>
</html>
)";

// Mapping override from a request, type-checked per key before it reaches
// set_mapping_param.
void apply_override(MappingParams& params, const std::string& key, const json& value) {
  const bool known = std::find(std::begin(kMappingKeys), std::end(kMappingKeys), key) !=
                     std::end(kMappingKeys);
  if (!known) throw ConfigError(key, "unknown mapping key");
  if (key == "hue_direction" || key == "no_data_color") {
    if (!value.is_string()) throw ConfigError(key, "expected a string");
    set_mapping_param(params, key, value.get<std::string>());
  } else if (key == "axis_assignment") {
    if (!value.is_array() || value.size() != 3 ||
        !std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_string(); })) {
      throw ConfigError(key, "expected an array of three axis names");
    }
    set_mapping_param(params, key,
                      value[0].get<std::string>() + "," + value[1].get<std::string>() + "," +
                          value[2].get<std::string>());
  } else {
    if (!value.is_number()) throw ConfigError(key, "expected a number");
    set_mapping_param(params, key, value.dump());
  }
}

std::optional<std::size_t> parse_count(std::string_view text) {
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return n;
}

std::optional<double> parse_unit(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  if (!(v >= 0.0 && v <= 1.0)) return std::nullopt;
  return v;
}

void send(httplib::Response& res, const HttpResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

HttpResponse error_response(int status, std::string_view message) {
  return HttpResponse{status, json{{"error", std::string(message)}}.dump(), "application/json"};
}

AnalysisService::AnalysisService(std::shared_ptr<const Lexicon> lexicon,
                                 MappingConfig base_mapping, ServiceOptions options)
    : lexicon_(std::move(lexicon)),
      base_mapping_(std::move(base_mapping)),
      options_(std::move(options)) {
  if (!lexicon_) throw std::invalid_argument("service needs a lexicon");
}

HttpResponse AnalysisService::analyze(std::string_view body) const {
  // Invalid UTF-8 inside strings is a parse error here, so accepted text is
  // always well formed.
  const json request = json::parse(body, nullptr, false);
  if (request.is_discarded()) return error_response(400, "malformed JSON body");
  if (!request.is_object()) return error_response(400, "request body must be a JSON object");

  const auto text_it = request.find("text");
  if (text_it == request.end()) return error_response(400, "missing required field 'text'");
  if (!text_it->is_string()) return error_response(400, "'text' must be a string");
  std::string text_utf8 = text_it->get<std::string>();

  // Bytes bound characters from above, so only long bodies need decoding.
  std::optional<Utf8Text> text;
  if (text_utf8.size() > options_.max_text_chars) {
    text.emplace(std::move(text_utf8));
    if (text->length() > options_.max_text_chars) {
      return error_response(413, "text exceeds " + std::to_string(options_.max_text_chars) +
                                     " characters");
    }
  }

  Granularity granularity = Granularity::sentence();
  if (const auto it = request.find("granularity"); it != request.end()) {
    if (!it->is_string()) return error_response(400, "'granularity' must be a string");
    try {
      granularity = parse_granularity(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      return error_response(400, e.what());
    }
  }

  std::optional<MappingConfig> override_cfg;
  if (const auto it = request.find("mapping"); it != request.end() && !it->is_null()) {
    if (!it->is_object()) return error_response(400, "mapping must be an object");
    try {
      MappingParams params = base_mapping_.params();
      for (const auto& [key, value] : it->items()) apply_override(params, key, value);
      override_cfg.emplace(params);
    } catch (const ConfigError& e) {
      return error_response(400, std::string("mapping.") + e.what());
    }
  }

  if (!text) text.emplace(std::move(text_utf8));
  try {
    const auto result =
        mosaic::analyze(*text, granularity, *lexicon_, override_cfg ? *override_cfg : base_mapping_);
    return HttpResponse{200, emit_json(result), "application/json"};
  } catch (const InvariantError& e) {
    return error_response(500, std::string("internal invariant violated: ") + e.what());
  }
}

HttpResponse AnalysisService::legend(const QueryParams& query) const {
  const auto get = [&](std::string_view key) -> std::optional<std::string_view> {
    if (const auto it = query.find(key); it != query.end()) return std::string_view(it->second);
    return std::nullopt;
  };

  VadAxis axis = VadAxis::Dominance;
  if (const auto a = get("axis")) {
    const auto parsed = parse_vad_axis(*a);
    if (!parsed) return error_response(400, "axis must be valence, arousal or dominance");
    axis = *parsed;
  }
  double value = 0.5;
  if (const auto v = get("value")) {
    const auto parsed = parse_unit(*v);
    if (!parsed) return error_response(400, "value must be a number in [0, 1]");
    value = *parsed;
  }
  std::size_t dims[2] = {kDefaultLegendCells, kDefaultLegendCells};
  const char* names[2] = {"nx", "ny"};
  for (int i = 0; i < 2; ++i) {
    if (const auto raw = get(names[i])) {
      const auto n = parse_count(*raw);
      if (!n || *n < 2 || *n > kMaxLegendCells) {
        return error_response(400, std::string(names[i]) + " must be an integer in [2, " +
                                       std::to_string(kMaxLegendCells) + "]");
      }
      dims[i] = *n;
    }
  }
  const auto grid = legend_slice(axis, value, dims[0], dims[1], base_mapping_);
  return HttpResponse{200, emit_legend_json(grid), "application/json"};
}

HttpResponse AnalysisService::lexicon_info() const {
  const RatingScale scale = lexicon_->source_scale();
  std::string body = "{\"entries\":" + std::to_string(lexicon_->entry_count()) + ",\"scale\":[" +
                     format_real(scale.lo) + "," + format_real(scale.hi) + "]}";
  return HttpResponse{200, std::move(body), "application/json"};
}

HttpResponse AnalysisService::healthz() const { return HttpResponse{200, "ok", "text/plain"}; }

HttpResponse AnalysisService::index_page() const {
  return HttpResponse{200, std::string(kIndexHtml), "text/html; charset=utf-8"};
}

void AnalysisService::mount(httplib::Server& server) const {
  server.set_payload_max_length(options_.max_text_chars * 4 + (std::size_t{1} << 16));

  if (!options_.static_dir.empty() && std::filesystem::is_directory(options_.static_dir)) {
    server.set_mount_point("/", options_.static_dir.string());
  }

  if (options_.cors) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
  }

  server.Post("/analyze", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, analyze(req.body));
  });
  server.Get("/legend", [this](const httplib::Request& req, httplib::Response& res) {
    QueryParams query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    send(res, legend(query));
  });
  server.Get("/lexicon/info", [this](const httplib::Request&, httplib::Response& res) {
    send(res, lexicon_info());
  });
  server.Get("/healthz", [this](const httplib::Request&, httplib::Response& res) {
    send(res, healthz());
  });
  server.Get("/", [this](const httplib::Request&, httplib::Response& res) {
    send(res, index_page());
  });

  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    const auto r = error_response(res.status, httplib::status_message(res.status));
    res.set_content(r.body, r.content_type);
    return httplib::Server::HandlerResponse::Handled;
  });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        send(res, error_response(500, what));
      });
}

}  // namespace mosaic
