#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bounds.hpp"
#include "harness.hpp"
#include "interference.hpp"
#include "routing.hpp"
#include "scheduling.hpp"
#include "topology.hpp"

namespace mcis {

using Value = std::variant<std::int64_t, std::uint64_t, double, std::string, bool>;

// Rows of named columns; the one shape every output format is rendered from,
// so csv and json always carry the same fields.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Value>> rows;
};

enum class Format { Text, Csv, Json };
Format parse_format(std::string_view name);

// csv: header line then rows. json: one flat object per row and line.
// text: aligned columns, or `key  value` lines for a single row.
std::string render(const Table& table, Format format);
std::string render_value(const Value& v);

const std::vector<std::string>& results_header();
Table results_table(const std::vector<TrialResult>& rows);

Table classification_table(double n, int C_A, double H, const Classification& cls);
// "Case 1 / Sub-case 1 / InterfaceBottleneck"
std::string classification_line(const Classification& cls);

Table bounds_table(const NetworkConfig& cfg, const BoundsReport& report);
Table topology_table(const Topology& topo);
Table flows_table(const FlowSet& flows);
Table schedule_table(const Schedule& schedule, const RoutingGraph& graph);
Table interference_table(const std::vector<std::pair<std::size_t, std::size_t>>& edges);
Table fit_table(const Fit& fit, std::string_view column);
Table failures_table(const std::vector<TrialFailure>& failures);

}  // namespace mcis
