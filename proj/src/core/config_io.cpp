#include "config_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace mcis {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(Errc::invalid_argument,
              "invalid value '" + std::string(value) + "' for key '" + std::string(key) + "'");
}

template <class T>
T parse_integer(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) bad_value(key, value);
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out)) bad_value(key, value);
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "off" || value == "no") return false;
  bad_value(key, value);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "n", "b", "b0", "C", "C_A", "C_I", "m", "W", "W_A", "W_I", "H", "delta", "r", "seed",
      "c_service", "threshold_scale", "margin", "enforce_connectivity", "hop_time"};
  return keys;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void apply_setting(NetworkConfig& cfg, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "n") cfg.n = parse_integer<std::size_t>(key, value);
  else if (key == "b") cfg.b = parse_integer<std::size_t>(key, value);
  else if (key == "b0") cfg.b0 = parse_integer<std::size_t>(key, value);
  else if (key == "C") cfg.C = parse_integer<int>(key, value);
  else if (key == "C_A") cfg.C_A = parse_integer<int>(key, value);
  else if (key == "C_I") cfg.C_I = parse_integer<int>(key, value);
  else if (key == "m") cfg.m = parse_integer<int>(key, value);
  else if (key == "W") cfg.W = parse_real(key, value);
  else if (key == "W_A") cfg.W_A = parse_real(key, value);
  else if (key == "W_I") cfg.W_I = parse_real(key, value);
  else if (key == "H") cfg.H = parse_integer<int>(key, value);
  else if (key == "delta") cfg.delta = parse_real(key, value);
  else if (key == "r") cfg.r = value == "auto" ? 0.0 : parse_real(key, value);
  else if (key == "seed") cfg.seed = parse_integer<std::uint64_t>(key, value);
  else if (key == "c_service") cfg.c_service = parse_real(key, value);
  else if (key == "threshold_scale") cfg.threshold_scale = parse_real(key, value);
  else if (key == "margin") cfg.margin = parse_real(key, value);
  else if (key == "enforce_connectivity") cfg.enforce_connectivity = parse_bool(key, value);
  else if (key == "hop_time") cfg.hop_time = parse_real(key, value);
  else throw Error(Errc::invalid_argument, "unknown config key '" + std::string(key) + "'");
}

NetworkConfig parse_config_text(std::string_view text, NetworkConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::invalid_argument, "line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

NetworkConfig load_config_file(const std::string& path, NetworkConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(buf.str(), std::move(base));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string format_setting(const NetworkConfig& cfg, std::string_view key) {
  using std::to_string;
  if (key == "n") return to_string(cfg.n);
  if (key == "b") return to_string(cfg.b);
  if (key == "b0") return to_string(cfg.b0);
  if (key == "C") return to_string(cfg.C);
  if (key == "C_A") return to_string(cfg.C_A);
  if (key == "C_I") return to_string(cfg.C_I);
  if (key == "m") return to_string(cfg.m);
  if (key == "W") return format_double(cfg.W);
  if (key == "W_A") return format_double(cfg.W_A);
  if (key == "W_I") return format_double(cfg.W_I);
  if (key == "H") return to_string(cfg.H);
  if (key == "delta") return format_double(cfg.delta);
  if (key == "r") return cfg.r > 0.0 ? format_double(cfg.r) : "auto";
  if (key == "seed") return to_string(cfg.seed);
  if (key == "c_service") return format_double(cfg.c_service);
  if (key == "threshold_scale") return format_double(cfg.threshold_scale);
  if (key == "margin") return format_double(cfg.margin);
  if (key == "enforce_connectivity") return cfg.enforce_connectivity ? "true" : "false";
  if (key == "hop_time") return format_double(cfg.hop_time);
  throw Error(Errc::invalid_argument, "unknown config key '" + std::string(key) + "'");
}

std::string to_config_text(const NetworkConfig& cfg) {
  std::string out;
  for (const auto& key : config_keys()) out += key + " = " + format_setting(cfg, key) + "\n";
  return out;
}

}  // namespace mcis
