// mosaic: score text affect against a VAD lexicon and render it as a colour
// mosaic, print mapping legends, or serve the analysis API.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "mosaic/errors.hpp"
#include "mosaic/pipeline.hpp"
#include "mosaic/service.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitLexicon = 3;
constexpr int kExitPortInUse = 4;
constexpr int kExitUsage = 64;

/// Carries a documented exit status out of a subcommand.
struct ExitError {
  int code;
  std::string message;
};

struct MappingFlags {
  std::string path;
  std::vector<std::string> overrides;
};

struct LexiconFlags {
  std::string path;
  std::string scale = "0-1";
  std::string duplicates = "reject";
};

void add_mapping_flags(CLI::App& cmd, MappingFlags& flags) {
  cmd.add_option("--mapping", flags.path, "Mapping config file (key = value lines)");
  cmd.add_option("--set", flags.overrides, "Override one mapping key, e.g. --set hue_positive=240")
      ->allow_extra_args(false);
}

void add_lexicon_flags(CLI::App& cmd, LexiconFlags& flags) {
  cmd.add_option("--lexicon", flags.path, "VAD lexicon TSV (fallback: $MOSAIC_LEXICON)");
  cmd.add_option("--scale", flags.scale, "Rating scale of the lexicon, lo-hi (0-1 or 1-9)")
      ->capture_default_str();
  cmd.add_option("--duplicates", flags.duplicates, "Duplicate term policy")
      ->check(CLI::IsMember({"reject", "last-wins"}))
      ->capture_default_str();
}

mosaic::MappingConfig load_mapping(const MappingFlags& flags) {
  try {
    mosaic::MappingParams params;
    if (!flags.path.empty()) params = mosaic::load_mapping_params(flags.path);
    for (const std::string& kv : flags.overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ExitError{kExitUsage, "--set expects key=value: " + kv};
      mosaic::set_mapping_param(params, kv.substr(0, eq), kv.substr(eq + 1));
    }
    return mosaic::MappingConfig(params);
  } catch (const mosaic::ConfigError& e) {
    throw ExitError{kExitUsage, std::string("invalid mapping: ") + e.what()};
  } catch (const std::system_error& e) {
    throw ExitError{kExitIo, e.what()};
  }
}

mosaic::Lexicon load_lexicon(const LexiconFlags& flags) {
  std::string path = flags.path;
  if (path.empty()) {
    if (const char* env = std::getenv("MOSAIC_LEXICON")) path = env;
  }
  if (path.empty()) throw ExitError{kExitUsage, "no lexicon given (--lexicon or MOSAIC_LEXICON)"};
  const auto scale = mosaic::parse_rating_scale(flags.scale);
  if (!scale) throw ExitError{kExitUsage, "invalid --scale '" + flags.scale + "' (expected lo-hi)"};
  const auto policy = flags.duplicates == "last-wins" ? mosaic::DuplicatePolicy::LastWins
                                                      : mosaic::DuplicatePolicy::Reject;
  try {
    return mosaic::load_lexicon(path, *scale, policy);
  } catch (const mosaic::LexiconError& e) {
    throw ExitError{kExitLexicon, path + ": " + e.what()};
  } catch (const std::system_error& e) {
    throw ExitError{kExitIo, e.what()};
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    if (std::cin.bad()) throw ExitError{kExitIo, "cannot read standard input"};
    return text;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kExitIo, "cannot read input " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ExitError{kExitIo, "cannot read input " + path};
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << std::flush;
    if (!std::cout) throw ExitError{kExitIo, "cannot write standard output"};
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw ExitError{kExitIo, "cannot write " + path};
}

std::optional<std::size_t> parse_size(std::string_view text) {
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return n;
}

// ---------------------------------------------------------------------------

struct AnalyzeFlags {
  LexiconFlags lexicon;
  MappingFlags mapping;
  std::string granularity = "sentence";
  std::string format = "json";
  std::string out;
  std::optional<std::size_t> columns;
  std::size_t tile = 16;
  std::size_t gap = 2;
  std::string input;
};

int cmd_analyze(const AnalyzeFlags& f) {
  mosaic::Granularity granularity = mosaic::Granularity::sentence();
  try {
    granularity = mosaic::parse_granularity(f.granularity);
  } catch (const std::invalid_argument& e) {
    throw ExitError{kExitUsage, e.what()};
  }
  if (f.columns && *f.columns == 0) throw ExitError{kExitUsage, "--columns must be at least 1"};
  if (f.tile == 0) throw ExitError{kExitUsage, "--tile must be at least 1"};
  if (f.format == "both" && f.out.empty()) {
    throw ExitError{kExitUsage, "--format both needs --out <base path>"};
  }
  const auto cfg = load_mapping(f.mapping);
  const auto lexicon = load_lexicon(f.lexicon);
  const mosaic::Utf8Text text{read_input(f.input)};

  const auto result = mosaic::analyze(text, granularity, lexicon, cfg);
  const std::string json = mosaic::emit_json(result) + "\n";
  const auto svg = [&] {
    const auto mosaic =
        mosaic::build_mosaic(result, mosaic::MosaicOptions{f.columns, f.tile, f.gap});
    return mosaic::emit_svg(mosaic, result);
  };

  if (f.format == "json") {
    write_output(f.out, json);
  } else if (f.format == "svg") {
    write_output(f.out, svg());
  } else {
    fs::path base = f.out;
    base.replace_extension();
    write_output(fs::path(base).concat(".json").string(), json);
    write_output(fs::path(base).concat(".svg").string(), svg());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct LegendFlags {
  MappingFlags mapping;
  std::string fix = "dominance=0.5";
  std::string grid = "32x32";
  std::size_t tile = 16;
  std::string out;
};

int cmd_legend(const LegendFlags& f) {
  const auto eq = f.fix.find('=');
  const auto axis = mosaic::parse_vad_axis(std::string_view(f.fix).substr(0, eq));
  if (eq == std::string::npos || !axis) {
    throw ExitError{kExitUsage, "--fix expects <valence|arousal|dominance>=<value>"};
  }
  double value = 0.0;
  {
    const std::string_view v = std::string_view(f.fix).substr(eq + 1);
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size() ||
        !(value >= 0.0 && value <= 1.0)) {
      throw ExitError{kExitUsage, "--fix value must be a number in [0, 1]"};
    }
  }
  const auto x = f.grid.find('x');
  const auto nx = parse_size(std::string_view(f.grid).substr(0, x));
  const auto ny = x == std::string::npos ? std::nullopt
                                         : parse_size(std::string_view(f.grid).substr(x + 1));
  if (!nx || !ny || *nx < 2 || *ny < 2) {
    throw ExitError{kExitUsage, "--grid expects <nx>x<ny> with both at least 2"};
  }
  if (f.tile == 0) throw ExitError{kExitUsage, "--tile must be at least 1"};

  const auto cfg = load_mapping(f.mapping);
  const auto grid = mosaic::legend_slice(*axis, value, *nx, *ny, cfg);
  write_output(f.out, mosaic::emit_legend_svg(grid, f.tile));
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ServeFlags {
  LexiconFlags lexicon;
  MappingFlags mapping;
  std::string addr = "127.0.0.1:8080";
  std::size_t max_chars = std::size_t{1} << 20;
  bool no_cors = false;
};

int cmd_serve(const ServeFlags& f) {
  const auto colon = f.addr.rfind(':');
  const auto port = colon == std::string::npos
                        ? std::nullopt
                        : parse_size(std::string_view(f.addr).substr(colon + 1));
  if (colon == std::string::npos || colon == 0 || !port || *port > 65535) {
    throw ExitError{kExitUsage, "--addr expects <host>:<port>, got '" + f.addr + "'"};
  }
  std::string host = f.addr.substr(0, colon);
  if (host.size() > 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }

  const auto cfg = load_mapping(f.mapping);
  auto lexicon = std::make_shared<const mosaic::Lexicon>(load_lexicon(f.lexicon));

  mosaic::ServiceOptions options;
  options.max_text_chars = f.max_chars;
  options.cors = !f.no_cors;
  if (const char* ui = std::getenv("MOSAIC_UI_DIR")) options.static_dir = ui;
  const mosaic::AnalysisService service(lexicon, cfg, options);

  httplib::Server server;
  // The library default adds SO_REUSEPORT, which would let a second server
  // share a busy port instead of failing.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  service.mount(server);
  server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    std::fprintf(stderr, "%s %s %s %d %zu\n", req.remote_addr.c_str(), req.method.c_str(),
                 req.path.c_str(), res.status, res.body.size());
  });
  if (!server.bind_to_port(host, static_cast<int>(*port))) {
    throw ExitError{kExitPortInUse, "cannot listen on " + f.addr};
  }
  std::fprintf(stderr, "serving %zu lexicon entries on %s\n", lexicon->entry_count(),
               f.addr.c_str());
  server.listen_after_bind();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicon-based affect mosaics: VAD scoring, colour mapping, rendering"};
  app.require_subcommand(1);

  AnalyzeFlags analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Score a text and emit JSON and/or SVG");
  add_lexicon_flags(*analyze_cmd, analyze.lexicon);
  add_mapping_flags(*analyze_cmd, analyze.mapping);
  analyze_cmd
      ->add_option("--granularity", analyze.granularity,
                   "word | window:<n> | sentence | paragraph | document")
      ->capture_default_str();
  analyze_cmd->add_option("--format", analyze.format, "Output format")
      ->check(CLI::IsMember({"svg", "json", "both"}))
      ->capture_default_str();
  analyze_cmd->add_option("--out", analyze.out,
                          "Output path (stdout if omitted; base path for --format both)");
  analyze_cmd->add_option("--columns", analyze.columns, "Mosaic columns (default ceil(sqrt(n)))");
  analyze_cmd->add_option("--tile", analyze.tile, "Tile size in px")->capture_default_str();
  analyze_cmd->add_option("--gap", analyze.gap, "Gap between tiles in px")->capture_default_str();
  analyze_cmd->add_option("input", analyze.input, "Input text file (stdin if omitted)");

  LegendFlags legend;
  auto* legend_cmd = app.add_subcommand("legend", "Emit an SVG slice of the colour mapping");
  add_mapping_flags(*legend_cmd, legend.mapping);
  legend_cmd->add_option("--fix", legend.fix, "Fixed axis and value")->capture_default_str();
  legend_cmd->add_option("--grid", legend.grid, "Grid size <nx>x<ny>")->capture_default_str();
  legend_cmd->add_option("--tile", legend.tile, "Cell size in px")->capture_default_str();
  legend_cmd->add_option("--out", legend.out, "Output path (stdout if omitted)");

  ServeFlags serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP analysis service");
  add_lexicon_flags(*serve_cmd, serve.lexicon);
  add_mapping_flags(*serve_cmd, serve.mapping);
  serve_cmd->add_option("--addr", serve.addr, "Listen address <host>:<port>")
      ->capture_default_str();
  serve_cmd->add_option("--max-chars", serve.max_chars, "Largest accepted text, in characters")
      ->capture_default_str();
  serve_cmd->add_flag("--no-cors", serve.no_cors, "Do not send CORS headers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze);
    if (legend_cmd->parsed()) return cmd_legend(legend);
    return cmd_serve(serve);
  } catch (const ExitError& e) {
    std::cerr << "mosaic: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "mosaic: " << e.what() << '\n';
    return kExitIo;
  }
}
