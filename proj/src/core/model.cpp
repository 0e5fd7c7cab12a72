#include "model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace mcis {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::channel_split: return "channel_split";
    case Errc::bandwidth_split: return "bandwidth_split";
    case Errc::odd_interfaces: return "odd_interfaces";
    case Errc::interface_count: return "interface_count";
    case Errc::non_square_bs: return "non_square_bs";
    case Errc::guard_zone: return "guard_zone";
    case Errc::hop_count: return "hop_count";
    case Errc::node_count: return "node_count";
    case Errc::range: return "range";
    case Errc::domain: return "domain";
    case Errc::io: return "io";
    case Errc::infeasible: return "infeasible";
  }
  return "unknown";
}

BoundsConstants BoundsConstants::from(const NetworkConfig& cfg) {
  BoundsConstants k;
  const double grow = 1.0 + cfg.delta;
  k.k5 = 4.0 * grow * grow;
  k.k8 = static_cast<int>(std::ceil(k.k5 - 1e-12));
  k.threshold_scale = cfg.threshold_scale;
  k.margin = cfg.margin;
  return k;
}

std::size_t exact_sqrt(std::size_t b) {
  auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(b))));
  for (std::size_t c = root > 0 ? root - 1 : 0; c <= root + 1; ++c) {
    if (c * c == b) return c;
  }
  return 0;
}

double connectivity_radius(std::size_t n, double margin) {
  if (n < 2) throw Error(Errc::node_count, "connectivity radius needs n >= 2");
  if (!(margin > 0.0)) throw Error(Errc::range, "connectivity margin must be positive");
  const double nn = static_cast<double>(n);
  return margin * std::sqrt(std::log(nn) / (std::numbers::pi * nn));
}

double transmission_range(const NetworkConfig& cfg) {
  return cfg.r > 0.0 ? cfg.r : connectivity_radius(cfg.n, cfg.margin);
}

NetworkConfig validate_config(NetworkConfig cfg) {
  using std::to_string;
  if (cfg.n < 2) throw Error(Errc::node_count, "n must be at least 2, got " + to_string(cfg.n));
  if (cfg.H < 1) throw Error(Errc::hop_count, "H must be at least 1, got " + to_string(cfg.H));
  if (!(cfg.delta > 0.0)) throw Error(Errc::guard_zone, "guard zone delta must be positive");
  if (cfg.C_A < 1) throw Error(Errc::channel_split, "C_A must be at least 1");
  if (cfg.C_I < 0) throw Error(Errc::channel_split, "C_I must be nonnegative");
  if (cfg.C != cfg.C_A + cfg.C_I) {
    throw Error(Errc::channel_split, "channel split violated: C_A + C_I = " +
                                         to_string(cfg.C_A + cfg.C_I) + " but C = " + to_string(cfg.C));
  }
  if (!(cfg.W >= 0.0 && cfg.W_A >= 0.0 && cfg.W_I >= 0.0)) {
    throw Error(Errc::bandwidth_split, "bandwidths must be nonnegative");
  }
  const double split = cfg.W_A + 2.0 * cfg.W_I;
  if (std::abs(cfg.W - split) > 1e-12 * std::max(1.0, std::abs(cfg.W))) {
    throw Error(Errc::bandwidth_split, "bandwidth split violated: W_A + 2 W_I = " +
                                           std::to_string(split) + " but W = " + std::to_string(cfg.W));
  }
  if (cfg.m < 0 || cfg.m % 2 != 0) {
    throw Error(Errc::odd_interfaces, "interface count m must be even, got " + to_string(cfg.m));
  }
  if (cfg.infrastructure_enabled()) {
    if (cfg.m < 2) throw Error(Errc::interface_count, "infrastructure needs m >= 2");
    if (cfg.C_I < 1) throw Error(Errc::channel_split, "infrastructure needs C_I >= 1");
  }
  const std::size_t root = exact_sqrt(cfg.b);
  if (cfg.b < 1 || root == 0) {
    throw Error(Errc::non_square_bs, "b must be a positive perfect square, got " + to_string(cfg.b));
  }
  if (cfg.b0 != 0 && cfg.b0 != root) {
    throw Error(Errc::non_square_bs, "b0 = " + to_string(cfg.b0) + " does not match b = " + to_string(cfg.b));
  }
  cfg.b0 = root;
  if (!(cfg.c_service > 0.0)) throw Error(Errc::invalid_argument, "c_service must be positive");
  if (!(cfg.threshold_scale > 0.0)) throw Error(Errc::invalid_argument, "threshold_scale must be positive");
  if (!(cfg.margin > 0.0)) throw Error(Errc::range, "margin must be positive");
  if (!(cfg.hop_time > 0.0)) throw Error(Errc::invalid_argument, "hop_time must be positive");
  if (cfg.r < 0.0 || cfg.r > 1.0) throw Error(Errc::range, "r must lie in [0, 1]");
  if (cfg.enforce_connectivity && cfg.r > 0.0 && cfg.r < connectivity_radius(cfg.n)) {
    throw Error(Errc::range, "r = " + std::to_string(cfg.r) + " is below the connectivity radius " +
                                 std::to_string(connectivity_radius(cfg.n)));
  }
  return cfg;
}

}  // namespace mcis
