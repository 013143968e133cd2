#include "psindex/config.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "psindex/error.hpp"

namespace psindex {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view value, int line) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError,
                "invalid number '" + std::string(value) + "'", line, 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DepthExhausted: return "DepthExhausted";
    case ErrorKind::NotElliptic: return "NotElliptic";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::BandwidthExceeded: return "BandwidthExceeded";
    case ErrorKind::NonIntegerWinding: return "NonIntegerWinding";
    case ErrorKind::NoPlateau: return "NoPlateau";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (item.empty()) {
      throw Error(ErrorKind::ParseError, "empty entry in integer list", 1, 1);
    }
    out.push_back(parse_number<int>(item, 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Config parse_config(std::string_view text) {
  Config config;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view view = raw;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "expected 'key = value'", line, 1);
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key == "depth") {
      config.depth = parse_number<int>(value, line);
    } else if (key == "prune_tol") {
      config.numeric.prune_tol = parse_number<double>(value, line);
    } else if (key == "inversion_floor") {
      config.numeric.inversion_floor = parse_number<double>(value, line);
    } else if (key == "inverse_tol") {
      config.numeric.inverse_tol = parse_number<double>(value, line);
    } else if (key == "band_cap") {
      config.numeric.band_cap = parse_number<int>(value, line);
    } else if (key == "condition_limit") {
      config.numeric.condition_limit = parse_number<double>(value, line);
    } else if (key == "oracle_tol") {
      config.oracle_tol = parse_number<double>(value, line);
    } else if (key == "oracle_modes") {
      config.oracle_modes = parse_int_list(value);
    } else if (key == "q") {
      config.q_mode = std::string(value);
    } else if (key == "format") {
      if (value != "kv" && value != "text") {
        throw Error(ErrorKind::ParseError, "format must be kv or text", line,
                    static_cast<int>(eq) + 2);
      }
      config.format = std::string(value);
    } else if (key == "seed") {
      config.seed = parse_number<unsigned long long>(value, line);
    } else {
      throw Error(ErrorKind::ParseError,
                  "unknown configuration key '" + std::string(key) + "'", line,
                  1);
    }
  }
  if (config.depth < 1) {
    throw Error(ErrorKind::InvalidArgument, "depth must be positive");
  }
  return config;
}

void apply_environment(Config& config) {
  if (const char* seed = std::getenv("PSINDEX_SEED"); seed != nullptr) {
    config.seed = parse_number<unsigned long long>(seed, 0);
  }
}

}  // namespace psindex
