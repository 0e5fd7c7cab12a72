#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace mcis {

// Key names accepted by the flat key=value config format, in canonical order.
const std::vector<std::string>& config_keys();

// Sets one field from its textual value. Unknown keys and malformed numbers
// throw Error(Errc::invalid_argument). `r` also accepts "auto".
void apply_setting(NetworkConfig& cfg, std::string_view key, std::string_view value);

// Reads `key = value` lines ('#' starts a comment) on top of `base`.
NetworkConfig parse_config_text(std::string_view text, NetworkConfig base = {});
NetworkConfig load_config_file(const std::string& path, NetworkConfig base = {});

std::string format_setting(const NetworkConfig& cfg, std::string_view key);
std::string to_config_text(const NetworkConfig& cfg);

// Shortest round-trip decimal for a double.
std::string format_double(double value);

}  // namespace mcis
