#pragma once

#include <cstddef>
#include <cstdint>

namespace mcis {

// All network parameters. Bandwidths are in bits/sec, ranges in unit-square
// lengths. `r == 0` means "derive from connectivity_radius(n, margin)".
struct NetworkConfig {
  std::size_t n = 1000;   // common nodes
  std::size_t b = 4;      // base stations, b = b0 * b0
  std::size_t b0 = 0;     // 0: derived from b
  int C = 3;              // total channels
  int C_A = 2;            // ad hoc channels
  int C_I = 1;            // infrastructure channels
  int m = 2;              // interfaces per base station (even)
  double W = 4.0;         // total bandwidth
  double W_A = 2.0;       // ad hoc bandwidth
  double W_I = 1.0;       // per-direction infrastructure bandwidth
  int H = 2;              // max ad hoc hop count
  double delta = 1.0;     // guard zone
  double r = 0.0;         // transmission range; 0 = automatic
  std::uint64_t seed = 1;
  double c_service = 1.0;        // infrastructure service time (seconds)
  double threshold_scale = 1.0;  // constant applied to asymptotic formulas
  double margin = 1.0;           // factor on the connectivity radius
  bool enforce_connectivity = true;
  double hop_time = 1.0;         // seconds per ad hoc hop (one TDMA period)

  bool infrastructure_enabled() const { return W_I > 0.0; }
  bool operator==(const NetworkConfig&) const = default;
};

// Constants of the constructive schemes that depend only on the guard zone.
struct BoundsConstants {
  double k5 = 0.0;  // 4(1 + delta)^2, interfering cells of a cell
  int k8 = 0;       // interfering BS-cells, ceil(4(1 + delta)^2)
  double threshold_scale = 1.0;
  double margin = 1.0;

  static BoundsConstants from(const NetworkConfig& cfg);
};

// Throws mcis::Error with a distinct code per violated invariant.
NetworkConfig validate_config(NetworkConfig cfg);

// margin * sqrt(ln n / (pi n)).
double connectivity_radius(std::size_t n, double margin = 1.0);

// cfg.r when set, otherwise connectivity_radius(cfg.n, cfg.margin).
double transmission_range(const NetworkConfig& cfg);

// Integer square root of b when b is a perfect square, 0 otherwise.
std::size_t exact_sqrt(std::size_t b);

}  // namespace mcis
