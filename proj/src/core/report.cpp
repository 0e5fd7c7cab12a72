#include "report.hpp"

#include <algorithm>
#include <json.hpp>

#include "config_io.hpp"
#include "error.hpp"

namespace mcis {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json to_json(const Value& v) {
  return std::visit([](const auto& x) -> ordered_json { return x; }, v);
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) out += (i ? "," : "") + csv_escape(t.header[i]);
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(render_value(row[i]));
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t) {
  std::string out;
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) obj[t.header[i]] = to_json(row[i]);
    out += obj.dump() + '\n';
  }
  return out;
}

std::string render_text(const Table& t) {
  std::string out;
  if (t.rows.size() == 1) {
    std::size_t w = 0;
    for (const auto& h : t.header) w = std::max(w, h.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      out += t.header[i] + std::string(w - t.header[i].size() + 2, ' ') + render_value(t.rows[0][i]) + '\n';
    }
    return out;
  }
  std::vector<std::size_t> width(t.header.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& row : t.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(render_value(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out += line[i];
      if (i + 1 < line.size()) out += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out += '\n';
  };
  emit(t.header);
  for (const auto& line : cells) emit(line);
  return out;
}

std::uint64_t u(std::size_t v) { return static_cast<std::uint64_t>(v); }
std::int64_t i64(int v) { return static_cast<std::int64_t>(v); }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(Errc::invalid_argument, "unknown format '" + std::string(name) + "' (text, csv, json)");
}

std::string render_value(const Value& v) {
  struct {
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(std::uint64_t x) const { return std::to_string(x); }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(const std::string& x) const { return x; }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, v);
}

std::string render(const Table& table, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(table);
    case Format::Json: return render_json(table);
    case Format::Text: return render_text(table);
  }
  return {};
}

const std::vector<std::string>& results_header() {
  static const std::vector<std::string> header = {
      "trial", "seed", "n", "b", "C_A", "C_I", "m", "H", "W_A", "W_I", "delta", "lambda_min", "lambda_mean", "T_A",
      "T_I", "D", "adhoc_sources", "max_dest_flows", "max_lines_cell", "edge_colors", "vertex_colors", "condition"};
  return header;
}

Table results_table(const std::vector<TrialResult>& rows) {
  Table t{results_header(), {}};
  for (const auto& r : rows) {
    const auto& c = r.cfg;
    t.rows.push_back({u(r.trial), c.seed, u(c.n), u(c.b), i64(c.C_A), i64(c.C_I), i64(c.m), i64(c.H), c.W_A, c.W_I,
                      c.delta, r.lambda_min, r.lambda_mean, r.T_A, r.T_I, r.D, u(r.adhoc_sources),
                      u(r.max_dest_flows), u(r.max_lines_cell), u(r.edge_colors), u(r.vertex_colors), r.condition});
  }
  return t;
}

std::string classification_line(const Classification& cls) {
  return "Case " + std::to_string(cls.case_index) + " / Sub-case " + std::to_string(cls.sub_case) + " / " +
         condition_name(cls.condition);
}

Table classification_table(double n, int C_A, double H, const Classification& cls) {
  const auto& th = cls.thresholds;
  return {{"n", "C_A", "H", "case", "sub_case", "condition", "F1", "F2", "G1", "G2", "G3"},
          {{n, i64(C_A), H, i64(cls.case_index), i64(cls.sub_case), std::string(condition_name(cls.condition)), th.F1,
            th.F2, th.G1, th.G2, th.G3}}};
}

Table bounds_table(const NetworkConfig& cfg, const BoundsReport& r) {
  return {{"n", "b", "C_A", "C_I", "m", "H", "W_A", "W_I", "c_service", "case", "sub_case", "condition", "lambda_a",
           "T_A", "T_I", "lambda", "D", "D_proposition"},
          {{u(cfg.n), u(cfg.b), i64(cfg.C_A), i64(cfg.C_I), i64(cfg.m), i64(cfg.H), cfg.W_A, cfg.W_I, cfg.c_service,
            i64(r.cls.case_index), i64(r.cls.sub_case), std::string(condition_name(r.cls.condition)), r.lambda_a, r.T_A,
            r.T_I, r.lambda, r.D, r.D_proposition}}};
}

Table topology_table(const Topology& topo) {
  Table t{{"kind", "x", "y", "cell", "bscell"}, {}};
  t.rows.reserve(topo.nodes.size() + topo.bs.size());
  for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
    t.rows.push_back({std::string("node"), topo.nodes[i].x, topo.nodes[i].y, u(topo.node_cell[i]), u(topo.node_bscell[i])});
  }
  for (std::size_t k = 0; k < topo.bs.size(); ++k) {
    t.rows.push_back({std::string("bs"), topo.bs[k].x, topo.bs[k].y, u(topo.cells.cell_of(topo.bs[k])), u(k)});
  }
  return t;
}

Table flows_table(const FlowSet& flows) {
  Table t{{"id", "src", "dst", "mode", "hops", "length"}, {}};
  t.rows.reserve(flows.flows.size());
  for (const Flow& f : flows.flows) {
    t.rows.push_back({u(f.id), u(f.src), u(f.dst), std::string(mode_name(f.mode)), u(f.hops()), f.length});
  }
  return t;
}

Table schedule_table(const Schedule& schedule, const RoutingGraph& graph) {
  Table t{{"node", "eslot", "mslot", "channel", "role", "flow"}, {}};
  for (const auto& e : schedule.entries(graph)) {
    t.rows.push_back({u(e.node), std::uint64_t{e.eslot}, std::uint64_t{e.mslot}, std::uint64_t{e.channel},
                      std::string(role_name(e.role)), u(e.flow)});
  }
  return t;
}

Table interference_table(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Table t{{"u", "v"}, {}};
  for (auto [a, b] : edges) t.rows.push_back({u(a), u(b)});
  return t;
}

Table fit_table(const Fit& fit, std::string_view column) {
  return {{"column", "points", "slope", "intercept", "r2"},
          {{std::string(column), u(fit.points), fit.slope, fit.intercept, fit.r2}}};
}

Table failures_table(const std::vector<TrialFailure>& failures) {
  Table t{{"trial", "seed", "point", "message"}, {}};
  for (const auto& f : failures) t.rows.push_back({u(f.trial), f.seed, f.point, f.message});
  return t;
}

}  // namespace mcis
