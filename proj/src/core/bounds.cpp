#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace mcis {
namespace {

struct Logs {
  double ln_n;
  double inner;     // ln(H^2 ln n)
  double inner_ln;  // lnln(H^2 ln n)
};

Logs logs_for(double n, double H) {
  if (!(n >= 3.0)) throw Error(Errc::domain, "bounds need n >= 3");
  if (!(H >= 1.0)) throw Error(Errc::domain, "bounds need H >= 1");
  const double ln_n = std::log(n);
  const double arg = H * H * ln_n;
  if (!(arg > std::numbers::e)) {
    throw Error(Errc::domain, "H^2 ln n = " + std::to_string(arg) + " must exceed e");
  }
  const double inner = std::log(arg);
  return {ln_n, inner, std::log(inner)};
}

}  // namespace

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::Connectivity: return "Connectivity";
    case Condition::Interference: return "Interference";
    case Condition::DestinationBottleneck: return "DestinationBottleneck";
    case Condition::InterfaceBottleneck: return "InterfaceBottleneck";
  }
  return "?";
}

Condition condition_of_subcase(int sub_case) {
  switch (sub_case) {
    case 2: return Condition::Connectivity;
    case 4: return Condition::Interference;
    case 6: return Condition::DestinationBottleneck;
    case 1:
    case 3:
    case 5: return Condition::InterfaceBottleneck;
    default: throw Error(Errc::invalid_argument, "sub-case must be in 1..6, got " + std::to_string(sub_case));
  }
}

Thresholds regime_thresholds(double n, int C_A, double H, double scale) {
  if (C_A < 1) throw Error(Errc::domain, "bounds need C_A >= 1");
  if (!(scale > 0.0)) throw Error(Errc::domain, "threshold scale must be positive");
  const Logs lg = logs_for(n, H);
  const double ratio = lg.inner_ln / lg.inner;
  Thresholds t;
  t.F1 = scale * lg.ln_n;
  t.F2 = scale * n * ratio * ratio;
  t.G1 = scale * std::cbrt(n) / std::pow(lg.ln_n, 2.0 / 3.0);
  t.G2 = scale * std::cbrt(n) * std::pow(static_cast<double>(C_A), 1.0 / 6.0) / std::sqrt(lg.ln_n);
  t.G3 = scale * std::sqrt(n / lg.ln_n);
  return t;
}

Classification classify_condition(double n, int C_A, double H, double scale) {
  Classification out;
  out.thresholds = regime_thresholds(n, C_A, H, scale);
  const auto& t = out.thresholds;
  const double ca = C_A;
  if (ca <= t.F1) {
    out.case_index = 1;
    out.sub_case = H <= t.G1 ? 1 : 2;
  } else if (ca > t.F2) {
    out.case_index = 3;
    out.sub_case = H <= t.G3 ? 5 : 6;
  } else {
    out.case_index = 2;
    out.sub_case = H <= t.G2 ? 3 : 4;
  }
  out.condition = condition_of_subcase(out.sub_case);
  return out;
}

double adhoc_per_node_bound(Condition c, double n, double H, int C_A, double W_A, double scale) {
  if (C_A < 1) throw Error(Errc::domain, "bounds need C_A >= 1");
  const double ca = C_A;
  if (c == Condition::InterfaceBottleneck) return scale * W_A / ca;
  const Logs lg = logs_for(n, H);
  const double h3 = H * H * H;
  switch (c) {
    case Condition::Connectivity:
      return scale * n * W_A / (h3 * lg.ln_n * lg.ln_n * ca);
    case Condition::Interference:
      return scale * n * W_A / (std::sqrt(ca) * h3 * std::pow(lg.ln_n, 1.5));
    case Condition::DestinationBottleneck:
      return scale * std::pow(n, 1.5) * lg.inner_ln * W_A / (ca * h3 * std::pow(lg.ln_n, 1.5) * lg.inner);
    case Condition::InterfaceBottleneck: break;
  }
  return scale * W_A / ca;
}

double adhoc_aggregate(Condition c, double n, double H, int C_A, double W_A, double scale) {
  if (C_A < 1) throw Error(Errc::domain, "bounds need C_A >= 1");
  const Logs lg = logs_for(n, H);
  const double ca = C_A;
  switch (c) {
    case Condition::Connectivity:
      return scale * n * W_A / (H * lg.ln_n * ca);
    case Condition::Interference:
      return scale * n * W_A / (std::sqrt(ca) * H * std::sqrt(lg.ln_n));
    case Condition::DestinationBottleneck:
      return scale * std::pow(n, 1.5) * lg.inner_ln * W_A / (ca * H * std::sqrt(lg.ln_n) * lg.inner);
    case Condition::InterfaceBottleneck:
      return scale * H * H * lg.ln_n * W_A / ca;
  }
  return 0.0;
}

double infra_capacity(std::size_t b, int m, int C_I, double W_I) {
  if (!(W_I > 0.0) || m <= 0 || C_I <= 0) return 0.0;
  const double bb = static_cast<double>(b);
  return C_I <= m ? bb * W_I : bb * (static_cast<double>(m) / C_I) * W_I;
}

namespace {

double infra_share(const NetworkConfig& cfg) {
  if (!(cfg.W_I > 0.0)) return 0.0;
  if (std::min(cfg.C_I, cfg.m) <= 0) throw Error(Errc::domain, "infrastructure bandwidth needs min(C_I, m) >= 1");
  const double n = static_cast<double>(cfg.n), b = static_cast<double>(cfg.b);
  return std::min(b / n, b * cfg.m / (n * cfg.C_I)) * cfg.W_I;
}

}  // namespace

double per_node_throughput(Condition c, const NetworkConfig& cfg) {
  const double n = static_cast<double>(cfg.n);
  const double adhoc = cfg.W_A > 0.0 ? adhoc_aggregate(c, n, cfg.H, cfg.C_A, cfg.W_A, cfg.threshold_scale) / n : 0.0;
  return adhoc + infra_share(cfg);
}

double average_delay(const NetworkConfig& cfg, DelayForm form) {
  const double H = cfg.H;
  if (!cfg.infrastructure_enabled()) return H;
  const int servers = std::min(cfg.C_I, cfg.m);
  if (servers <= 0) throw Error(Errc::domain, "infrastructure delay needs min(C_I, m) >= 1");
  const double n = static_cast<double>(cfg.n);
  const double adhoc = std::min(std::numbers::pi * H * H * std::log(n), n);
  double infra = cfg.c_service / servers;
  if (form == DelayForm::Proposition) infra /= static_cast<double>(cfg.b);
  return (adhoc * H + (n - adhoc) * infra) / n;
}

BoundsReport evaluate_bounds(const NetworkConfig& cfg) {
  BoundsReport r;
  const double n = static_cast<double>(cfg.n);
  r.cls = classify_condition(n, cfg.C_A, cfg.H, cfg.threshold_scale);
  r.lambda_a = adhoc_per_node_bound(r.cls.condition, n, cfg.H, cfg.C_A, cfg.W_A, cfg.threshold_scale);
  r.T_A = adhoc_aggregate(r.cls.condition, n, cfg.H, cfg.C_A, cfg.W_A, cfg.threshold_scale);
  r.T_I = infra_capacity(cfg.b, cfg.m, cfg.C_I, cfg.W_I);
  r.lambda = per_node_throughput(r.cls.condition, cfg);
  r.D = average_delay(cfg, DelayForm::Corollary);
  r.D_proposition = average_delay(cfg, DelayForm::Proposition);
  return r;
}

const char* special_case_name(SpecialCase kind) {
  switch (kind) {
    case SpecialCase::SC_AH: return "scah";
    case SpecialCase::MC_AH: return "mcah";
    case SpecialCase::SC_IS: return "scis";
  }
  return "?";
}

Reduction reduce_special_case(SpecialCase kind, std::size_t n, double W, int channels) {
  if (n < 3) throw Error(Errc::domain, "special-case reduction needs n >= 3");
  if (!(W > 0.0)) throw Error(Errc::invalid_argument, "W must be positive");
  const double nn = static_cast<double>(n);
  const double ln_n = std::log(nn);

  Reduction out;
  NetworkConfig& cfg = out.cfg;
  cfg.n = n;
  cfg.W = W;

  if (kind == SpecialCase::SC_IS) {
    const auto b0 = static_cast<std::size_t>(std::floor(std::sqrt(nn)));
    cfg.b = b0 * b0;
    cfg.b0 = b0;
    cfg.C = 2;
    cfg.C_A = 1;
    cfg.C_I = 1;
    cfg.m = 2;
    cfg.W_A = 0.0;
    cfg.W_I = W / 2.0;
    cfg.H = 1;
    out.condition = Condition::InterfaceBottleneck;
    out.bound = infra_share(cfg);
    out.bound_exact = out.bound;
    out.reference = W;
    out.ratio = out.bound_exact / out.reference;
    out.delay = average_delay(cfg);
    out.delay_reference = cfg.c_service;
    validate_config(cfg);
    return out;
  }

  if (channels < 1) throw Error(Errc::invalid_argument, "channel count must be at least 1");
  const double h_exact = std::sqrt(nn / ln_n);
  cfg.b = 1;
  cfg.b0 = 1;
  cfg.C_A = kind == SpecialCase::SC_AH ? 1 : channels;
  cfg.C = cfg.C_A;
  cfg.C_I = 0;
  cfg.m = 0;
  cfg.W_A = W;
  cfg.W_I = 0.0;
  cfg.H = static_cast<int>(std::ceil(h_exact));

  out.condition = kind == SpecialCase::SC_AH ? Condition::Connectivity
                                             : classify_condition(nn, cfg.C_A, h_exact).condition;
  out.bound = adhoc_per_node_bound(out.condition, nn, cfg.H, cfg.C_A, W);
  out.bound_exact = adhoc_per_node_bound(out.condition, nn, h_exact, cfg.C_A, W);
  out.reference = W / std::sqrt(nn * ln_n);
  out.ratio = out.bound_exact / out.reference;
  out.delay = average_delay(cfg);
  out.delay_reference = cfg.c_service * h_exact;
  validate_config(cfg);
  return out;
}

}  // namespace mcis
