#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "dgnet/config_io.hpp"

using dgnet::JunctionFluxKind;
using dgnet::parse_config;
using dgnet::parse_config_json;
using dgnet::ParsedConfig;
using nlohmann::json;

namespace {

json minimal_config() {
  return json::parse(R"({
    "diagram": {"v_max": 1.0, "u_max": 1.0},
    "roads": [
      {
        "id": 1,
        "interval": [0.0, 1.0],
        "elements": 10,
        "initial": [{"from": 0.0, "to": 1.0, "value": 0.4}],
        "boundary": {"left": "closed-inlet", "right": "free-outflow"}
      }
    ],
    "solver": {"dt": 0.001, "t_end": 0.5},
    "flux": {"kind": "alpha-outside"}
  })");
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST(ConfigParse, BundledExperimentConfig) {
  const ParsedConfig cfg =
      parse_config(std::filesystem::path(DGNET_CONFIG_DIR) / "experiment1.json");
  EXPECT_DOUBLE_EQ(cfg.diagram.v_max, 1.0);
  EXPECT_DOUBLE_EQ(cfg.diagram.u_max, 1.0);
  ASSERT_EQ(cfg.network.roads.size(), 3u);
  EXPECT_EQ(cfg.network.roads[0].id, 1);
  EXPECT_EQ(cfg.network.roads[0].num_elements, 150);
  ASSERT_TRUE(cfg.network.roads[0].left_boundary.has_value());
  EXPECT_EQ(cfg.network.roads[0].left_boundary->kind, dgnet::BoundaryKind::ClosedInlet);
  EXPECT_FALSE(cfg.network.roads[0].right_boundary.has_value());
  ASSERT_EQ(cfg.network.roads[1].initial.size(), 2u);
  EXPECT_DOUBLE_EQ(cfg.network.roads[1].initial[0].value, 0.75);
  ASSERT_EQ(cfg.network.junctions.size(), 1u);
  EXPECT_EQ(cfg.network.junctions[0].incoming, (std::vector<int>{1}));
  EXPECT_EQ(cfg.network.junctions[0].outgoing, (std::vector<int>{2, 3}));
  EXPECT_DOUBLE_EQ(cfg.network.junctions[0].distribution(0, 0), 0.75);
  EXPECT_DOUBLE_EQ(cfg.network.junctions[0].distribution(1, 0), 0.25);
  EXPECT_DOUBLE_EQ(cfg.solver.dt, 1e-4);
  EXPECT_DOUBLE_EQ(cfg.solver.t_end, 3.0);
  EXPECT_EQ(cfg.solver.integrator, dgnet::Integrator::Euler);
  EXPECT_EQ(cfg.solver.output_every, 3000);
  EXPECT_EQ(cfg.flux_kind, JunctionFluxKind::AlphaInside);
  // The parsed network passes semantic validation as-is.
  EXPECT_NO_THROW(dgnet::validate_network(cfg.network, cfg.diagram.u_max));
}

TEST(ConfigParse, SolverDefaultsApply) {
  const ParsedConfig cfg = parse_config_json(minimal_config());
  EXPECT_EQ(cfg.solver.integrator, dgnet::Integrator::Euler);
  EXPECT_DOUBLE_EQ(cfg.solver.limiter_m, 0.0);
  EXPECT_EQ(cfg.solver.bounds_mode, dgnet::BoundsMode::Report);
  EXPECT_EQ(cfg.solver.output_every, 1);
  EXPECT_TRUE(cfg.network.junctions.empty());
}

TEST(ConfigParse, BoundaryModeForms) {
  json root = minimal_config();
  root["roads"][0]["boundary"]["left"] = 0.3;
  ParsedConfig cfg = parse_config_json(root);
  EXPECT_EQ(cfg.network.roads[0].left_boundary->kind, dgnet::BoundaryKind::Dirichlet);
  EXPECT_DOUBLE_EQ(cfg.network.roads[0].left_boundary->value, 0.3);

  root["roads"][0]["boundary"]["left"] = {{"dirichlet", 0.25}};
  cfg = parse_config_json(root);
  EXPECT_EQ(cfg.network.roads[0].left_boundary->kind, dgnet::BoundaryKind::Dirichlet);
  EXPECT_DOUBLE_EQ(cfg.network.roads[0].left_boundary->value, 0.25);

  root["roads"][0]["boundary"]["left"] = "closed-outlet";
  cfg = parse_config_json(root);
  EXPECT_EQ(cfg.network.roads[0].left_boundary->kind, dgnet::BoundaryKind::ClosedOutlet);

  root["roads"][0]["boundary"]["left"] = "sticky";
  EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  root["roads"][0]["boundary"]["left"] = json::array();
  EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
}

TEST(ConfigParse, UnknownKeysRejectedEverywhere) {
  {
    json root = minimal_config();
    root["extra"] = 1;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["diagram"]["rho_max"] = 1.0;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["roads"][0]["name"] = "main street";
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["roads"][0]["initial"][0]["width"] = 1.0;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["solver"]["cfl"] = 0.5;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["flux"]["alpha"] = 0.5;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
}

TEST(ConfigParse, MissingRequiredKeys) {
  for (const char* key : {"diagram", "roads", "solver", "flux"}) {
    json root = minimal_config();
    root.erase(key);
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError) << key;
  }
  {
    json root = minimal_config();
    root["solver"].erase("dt");
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["junctions"] = json::array({{{"in", {1}}, {"out", {1}}}});  // no matrix
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
}

TEST(ConfigParse, SemanticChecks) {
  {
    json root = minimal_config();
    root["solver"]["dt"] = 0.0;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["solver"]["t_end"] = -1.0;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["solver"]["output_every"] = 0;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["diagram"]["u_max"] = -1.0;
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["solver"]["integrator"] = "leapfrog";
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
  {
    json root = minimal_config();
    root["flux"]["kind"] = "upwind";
    EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
  }
}

TEST(ConfigParse, RaggedMatrixRejected) {
  json root = minimal_config();
  root["junctions"] = json::array(
      {{{"in", {1}}, {"out", {1, 1}}, {"matrix", {{0.5}, {0.5, 0.5}}}}});
  EXPECT_THROW(parse_config_json(root), dgnet::ParseError);
}

TEST(ConfigParse, SyntaxErrorReportsLineAndColumn) {
  const auto path = write_temp("dgnet_bad_config.json", "{\n  \"diagram\": {,\n}\n");
  try {
    parse_config(path);
    FAIL() << "expected ParseError";
  } catch (const dgnet::ParseError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find(path.string()), std::string::npos);
    EXPECT_NE(what.find(":2:"), std::string::npos) << what;
  }
  std::filesystem::remove(path);
}

TEST(ConfigParse, StructuralErrorNamesFile) {
  const auto path = write_temp("dgnet_structural_config.json", R"({"roads": []})");
  try {
    parse_config(path);
    FAIL() << "expected ParseError";
  } catch (const dgnet::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(path.string()), std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST(ConfigParse, MissingFileThrowsIoError) {
  EXPECT_THROW(parse_config("/nonexistent/nowhere.json"), dgnet::IoError);
}

TEST(ConfigEcho, RoundTripIsStable) {
  const ParsedConfig cfg =
      parse_config(std::filesystem::path(DGNET_CONFIG_DIR) / "experiment1.json");
  const json echoed = dgnet::config_to_json(cfg);
  const ParsedConfig reparsed = parse_config_json(echoed);
  EXPECT_EQ(dgnet::config_to_json(reparsed), echoed);
  EXPECT_EQ(reparsed.network.roads.size(), cfg.network.roads.size());
  EXPECT_EQ(reparsed.flux_kind, cfg.flux_kind);
  EXPECT_DOUBLE_EQ(reparsed.solver.dt, cfg.solver.dt);
}
