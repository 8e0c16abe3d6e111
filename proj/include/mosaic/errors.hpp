#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mosaic {

/// A lexicon row that could not be accepted. `line` is 1-based; `column` is
/// 1-based over the tab-separated fields (0 when the whole row is at fault).
class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(format(line, column, what)), line_(line), column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& what) {
    std::string msg = "lexicon line " + std::to_string(line);
    if (column != 0) msg += ", column " + std::to_string(column);
    return msg + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An invalid mapping configuration value or combination.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::invalid_argument(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

  [[nodiscard]] const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// A colour that is not in the image of the configured mapping.
class OutOfGamutError : public std::domain_error {
 public:
  OutOfGamutError(char component, const std::string& what)
      : std::domain_error(std::string("out of gamut (") + component + "): " + what),
        component_(component) {}

  /// One of 'h', 's', 'l'.
  [[nodiscard]] char component() const noexcept { return component_; }

 private:
  char component_;
};

/// A broken internal precondition (e.g. segment containment).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mosaic
