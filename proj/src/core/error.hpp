#pragma once

#include <stdexcept>
#include <string>

namespace mcis {

enum class Errc {
  invalid_argument,
  channel_split,
  bandwidth_split,
  odd_interfaces,
  interface_count,
  non_square_bs,
  guard_zone,
  hop_count,
  node_count,
  range,
  domain,
  io,
  infeasible,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mcis
