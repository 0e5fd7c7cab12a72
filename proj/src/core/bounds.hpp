#pragma once

#include <cstddef>

#include "model.hpp"

namespace mcis {

enum class Condition { Connectivity, Interference, DestinationBottleneck, InterfaceBottleneck };
const char* condition_name(Condition c);

// Sub-case 2 -> Connectivity, 4 -> Interference, 6 -> DestinationBottleneck,
// 1, 3, 5 -> InterfaceBottleneck.
Condition condition_of_subcase(int sub_case);

struct Thresholds {
  double F1 = 0.0;  // ln n
  double F2 = 0.0;  // n (lnln(H^2 ln n) / ln(H^2 ln n))^2
  double G1 = 0.0;  // n^{1/3} / ln^{2/3} n
  double G2 = 0.0;  // n^{1/3} C_A^{1/6} / ln^{1/2} n
  double G3 = 0.0;  // n^{1/2} / ln^{1/2} n
};

struct Classification {
  int case_index = 0;  // 1..3, by C_A
  int sub_case = 0;    // 1..6, by H
  Condition condition = Condition::InterfaceBottleneck;
  Thresholds thresholds;
};

// Throws Errc::domain unless n >= 3, C_A >= 1, H >= 1 and H^2 ln n > e.
Thresholds regime_thresholds(double n, int C_A, double H, double scale = 1.0);

// Case 1 if C_A <= F1, Case 3 if C_A > F2, Case 2 otherwise; inside a case
// the lower sub-case when H <= G. Boundaries go to the lower index.
Classification classify_condition(double n, int C_A, double H, double scale = 1.0);

// Per-node ad hoc rate for the dominating condition, times `scale`.
double adhoc_per_node_bound(Condition c, double n, double H, int C_A, double W_A, double scale = 1.0);

// Aggregate ad hoc throughput, times `scale`. Equals H^2 ln n times the
// per-node bound in every condition.
double adhoc_aggregate(Condition c, double n, double H, int C_A, double W_A, double scale = 1.0);

// b W_I when C_I <= m, b (m / C_I) W_I otherwise; 0 when W_I or m is 0.
double infra_capacity(std::size_t b, int m, int C_I, double W_I);

// T_A / n + min(b/n, b m / (n C_I)) W_I. Throws Errc::domain when W_I > 0 but
// min(C_I, m) = 0.
double per_node_throughput(Condition c, const NetworkConfig& cfg);

enum class DelayForm {
  Corollary,    // infrastructure packets cost c / min(C_I, m)
  Proposition,  // ... c / (b min(C_I, m))
};

// Mixture of N_t = min(pi H^2 ln n, n) ad hoc packets of H hops and n - N_t
// infrastructure packets, averaged over n. H alone without infrastructure.
double average_delay(const NetworkConfig& cfg, DelayForm form = DelayForm::Corollary);

struct BoundsReport {
  Classification cls;
  double lambda_a = 0.0;
  double T_A = 0.0;
  double T_I = 0.0;
  double lambda = 0.0;
  double D = 0.0;
  double D_proposition = 0.0;
};

BoundsReport evaluate_bounds(const NetworkConfig& cfg);

enum class SpecialCase { SC_AH, MC_AH, SC_IS };
const char* special_case_name(SpecialCase kind);

struct Reduction {
  NetworkConfig cfg;        // reducing config (integer H = ceil)
  Condition condition = Condition::Connectivity;
  double reference = 0.0;   // the target network's optimal per-node order
  double bound = 0.0;       // evaluated per-node bound with cfg.H
  double bound_exact = 0.0; // same with the real-valued H = sqrt(n / ln n)
  double ratio = 0.0;       // bound_exact / reference
  double delay = 0.0;
  double delay_reference = 0.0;
};

// SC-AH: H = sqrt(n / ln n), C_A = 1, W_A = W, W_I = 0.
// MC-AH: same H with C_A = channels.
// SC-IS: C_A = C_I = 1, m = 2, W_A = 0, W_I = W / 2, b = floor(sqrt n)^2, H = 1.
Reduction reduce_special_case(SpecialCase kind, std::size_t n, double W, int channels = 1);

}  // namespace mcis
