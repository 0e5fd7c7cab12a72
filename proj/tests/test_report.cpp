#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "harness.hpp"
#include "report.hpp"

using namespace mcis;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// CSV and JSON carry the same fields with the same values.
void check_parity(const Table& t) {
  const auto csv = lines(render(t, Format::Csv));
  const auto json = lines(render(t, Format::Json));
  REQUIRE(csv.size() == t.rows.size() + 1);
  REQUIRE(json.size() == t.rows.size());
  const auto header = split(csv[0]);
  CHECK(header == t.header);
  for (std::size_t i = 0; i < json.size(); ++i) {
    const auto row = split(csv[i + 1]);
    const auto obj = nlohmann::ordered_json::parse(json[i]);
    REQUIRE(obj.size() == header.size());
    std::size_t k = 0;
    for (const auto& [key, value] : obj.items()) {
      CHECK(key == header[k]);
      if (value.is_number()) {
        CHECK(value.get<double>() == std::stod(row[k]));
      } else {
        CHECK((value.is_string() ? value.get<std::string>() : value.dump()) == row[k]);
      }
      ++k;
    }
  }
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("text") == Format::Text);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("values render in shortest round-trip form") {
  CHECK(render_value(Value{0.1}) == "0.1");
  CHECK(render_value(Value{std::int64_t{-3}}) == "-3");
  CHECK(render_value(Value{std::uint64_t{18446744073709551615ULL}}) == "18446744073709551615");
  CHECK(render_value(Value{true}) == "true");
  CHECK(render_value(Value{std::string("x")}) == "x");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(render_value(Value{third})) == third);
}

TEST_CASE("results table header is fixed") {
  CHECK(results_header() == std::vector<std::string>{
                                "trial", "seed", "n", "b", "C_A", "C_I", "m", "H", "W_A", "W_I", "delta",
                                "lambda_min", "lambda_mean", "T_A", "T_I", "D", "adhoc_sources", "max_dest_flows",
                                "max_lines_cell", "edge_colors", "vertex_colors", "condition"});
  const auto csv = render(results_table({}), Format::Csv);
  CHECK(csv ==
        "trial,seed,n,b,C_A,C_I,m,H,W_A,W_I,delta,lambda_min,lambda_mean,T_A,T_I,D,adhoc_sources,max_dest_flows,"
        "max_lines_cell,edge_colors,vertex_colors,condition\n");
  CHECK(render(results_table({}), Format::Json).empty());
}

TEST_CASE("csv and json agree on every table") {
  NetworkConfig cfg;
  cfg.n = 300;
  cfg.seed = 3;
  const Trial t = run_trial(cfg);
  check_parity(results_table({t.result, t.result}));
  check_parity(flows_table(t.flows));
  check_parity(schedule_table(t.schedule, t.flows.graph));
  check_parity(topology_table(t.topo));
  check_parity(interference_table({{0, 1}, {2, 5}}));
  const auto cls = classify_condition(1e6, 4, 5);
  check_parity(classification_table(1e6, 4, 5, cls));
  check_parity(bounds_table(cfg, evaluate_bounds(validate_config(cfg))));
  check_parity(fit_table(Fit{-0.5, 1.0, 0.99, 5}, "lambda_min"));
  check_parity(failures_table({{3, 9, "n=1", "n must be at least 2"}}));
}

TEST_CASE("table shapes") {
  NetworkConfig cfg;
  cfg.n = 200;
  const Trial t = run_trial(cfg);
  CHECK(flows_table(t.flows).header == std::vector<std::string>{"id", "src", "dst", "mode", "hops", "length"});
  CHECK(schedule_table(t.schedule, t.flows.graph).header ==
        std::vector<std::string>{"node", "eslot", "mslot", "channel", "role", "flow"});
  CHECK(topology_table(t.topo).header == std::vector<std::string>{"kind", "x", "y", "cell", "bscell"});
  CHECK(topology_table(t.topo).rows.size() == t.topo.nodes.size() + t.topo.bs.size());
  CHECK(schedule_table(t.schedule, t.flows.graph).rows.size() == 2 * t.flows.graph.edges.size());
}

TEST_CASE("text rendering") {
  const auto cls = classify_condition(1e6, 4, 5);
  CHECK(classification_line(cls) == "Case 1 / Sub-case 1 / InterfaceBottleneck");
  const auto text = render(classification_table(1e6, 4, 5, cls), Format::Text);
  CHECK(text.find("condition") != std::string::npos);
  CHECK(text.find("InterfaceBottleneck") != std::string::npos);

  const Table wide{{"a", "bb"}, {{std::int64_t{1}, std::string("x")}, {std::int64_t{22}, std::string("yy")}}};
  const auto rows = lines(render(wide, Format::Text));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].find("bb") != std::string::npos);
  CHECK(rows[1].find('x') == rows[2].find("yy"));
}
