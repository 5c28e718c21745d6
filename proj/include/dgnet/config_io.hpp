#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>
#include <string_view>

#include "dgnet/errors.hpp"
#include "dgnet/fundamental_diagram.hpp"
#include "dgnet/junction_flux.hpp"
#include "dgnet/network.hpp"
#include "dgnet/time_integration.hpp"

namespace dgnet {

/// A fully resolved run description: network, flow-density relation, solver
/// settings and junction coupling rule.
struct ParsedConfig {
  NetworkSpec network;
  Greenshields diagram;
  SolverConfig solver;
  JunctionFluxKind flux_kind = JunctionFluxKind::AlphaOutside;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown_keys(const json& obj,
                                std::initializer_list<std::string_view> allowed,
                                const std::string& ctx) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError(ctx + ": unknown key \"" + key + "\"");
  }
}

inline const json& require_key(const json& obj, const char* key,
                               const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ctx + ": missing required key \"" + key + "\"");
  return *it;
}

inline double as_number(const json& value, const std::string& ctx) {
  if (!value.is_number()) throw ParseError(ctx + ": expected a number");
  return value.get<double>();
}

inline int as_int(const json& value, const std::string& ctx) {
  if (!value.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  return value.get<int>();
}

inline std::string as_string(const json& value, const std::string& ctx) {
  if (!value.is_string()) throw ParseError(ctx + ": expected a string");
  return value.get<std::string>();
}

inline const json& as_object(const json& value, const std::string& ctx) {
  if (!value.is_object()) throw ParseError(ctx + ": expected an object");
  return value;
}

inline const json& as_array(const json& value, const std::string& ctx) {
  if (!value.is_array()) throw ParseError(ctx + ": expected an array");
  return value;
}

inline BoundaryMode parse_boundary_mode(const json& value, const std::string& ctx) {
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    if (text == "closed-inlet") return BoundaryMode::closed_inlet();
    if (text == "closed-outlet") return BoundaryMode::closed_outlet();
    if (text == "free-outflow") return BoundaryMode::free_outflow();
    throw ParseError(ctx + ": unknown boundary mode \"" + text +
                     "\" (expected closed-inlet, closed-outlet, free-outflow, "
                     "a density, or {\"dirichlet\": density})");
  }
  if (value.is_number()) return BoundaryMode::dirichlet(value.get<double>());
  if (value.is_object()) {
    reject_unknown_keys(value, {"dirichlet"}, ctx);
    return BoundaryMode::dirichlet(as_number(require_key(value, "dirichlet", ctx), ctx + ".dirichlet"));
  }
  throw ParseError(ctx + ": expected a boundary mode string, a density, or "
                   "{\"dirichlet\": density}");
}

inline RoadSpec parse_road(const json& value, const std::string& ctx) {
  const json& obj = as_object(value, ctx);
  reject_unknown_keys(obj, {"id", "interval", "elements", "initial", "boundary"}, ctx);
  RoadSpec road;
  road.id = as_int(require_key(obj, "id", ctx), ctx + ".id");
  const json& interval = as_array(require_key(obj, "interval", ctx), ctx + ".interval");
  if (interval.size() != 2) throw ParseError(ctx + ".interval: expected [begin, end]");
  road.begin = as_number(interval[0], ctx + ".interval[0]");
  road.end = as_number(interval[1], ctx + ".interval[1]");
  road.num_elements = as_int(require_key(obj, "elements", ctx), ctx + ".elements");
  const json& initial = as_array(require_key(obj, "initial", ctx), ctx + ".initial");
  for (std::size_t p = 0; p < initial.size(); ++p) {
    const std::string pctx = ctx + ".initial[" + std::to_string(p) + "]";
    const json& piece = as_object(initial[p], pctx);
    reject_unknown_keys(piece, {"from", "to", "value"}, pctx);
    road.initial.push_back({as_number(require_key(piece, "from", pctx), pctx + ".from"),
                            as_number(require_key(piece, "to", pctx), pctx + ".to"),
                            as_number(require_key(piece, "value", pctx), pctx + ".value")});
  }
  if (auto it = obj.find("boundary"); it != obj.end()) {
    const std::string bctx = ctx + ".boundary";
    const json& boundary = as_object(*it, bctx);
    reject_unknown_keys(boundary, {"left", "right"}, bctx);
    if (auto side = boundary.find("left"); side != boundary.end()) {
      road.left_boundary = parse_boundary_mode(*side, bctx + ".left");
    }
    if (auto side = boundary.find("right"); side != boundary.end()) {
      road.right_boundary = parse_boundary_mode(*side, bctx + ".right");
    }
  }
  return road;
}

inline JunctionSpec parse_junction(const json& value, const std::string& ctx) {
  const json& obj = as_object(value, ctx);
  reject_unknown_keys(obj, {"in", "out", "matrix"}, ctx);
  JunctionSpec junction;
  for (const json& id : as_array(require_key(obj, "in", ctx), ctx + ".in")) {
    junction.incoming.push_back(as_int(id, ctx + ".in"));
  }
  for (const json& id : as_array(require_key(obj, "out", ctx), ctx + ".out")) {
    junction.outgoing.push_back(as_int(id, ctx + ".out"));
  }
  const json& matrix = as_array(require_key(obj, "matrix", ctx), ctx + ".matrix");
  const std::size_t rows = matrix.size();
  std::size_t cols = 0;
  for (std::size_t j = 0; j < rows; ++j) {
    const std::string rctx = ctx + ".matrix[" + std::to_string(j) + "]";
    const json& row = as_array(matrix[j], rctx);
    if (j == 0) {
      cols = row.size();
      junction.distribution.resize(rows, cols);
    } else if (row.size() != cols) {
      throw ParseError(rctx + ": ragged matrix rows");
    }
    for (std::size_t i = 0; i < cols; ++i) {
      junction.distribution(j, i) = as_number(row[i], rctx + "[" + std::to_string(i) + "]");
    }
  }
  return junction;
}

}  // namespace detail

/// Parse a configuration document. Unknown keys are rejected at every level;
/// structural problems raise ParseError, while semantic network checks are
/// left to validate_network.
inline ParsedConfig parse_config_json(const nlohmann::json& root) {
  using detail::as_array;
  using detail::as_int;
  using detail::as_number;
  using detail::as_object;
  using detail::as_string;
  using detail::reject_unknown_keys;
  using detail::require_key;

  const nlohmann::json& top = as_object(root, "config");
  reject_unknown_keys(top, {"diagram", "roads", "junctions", "solver", "flux"}, "config");

  ParsedConfig cfg;

  const nlohmann::json& diagram = as_object(require_key(top, "diagram", "config"), "diagram");
  reject_unknown_keys(diagram, {"v_max", "u_max"}, "diagram");
  cfg.diagram.v_max = as_number(require_key(diagram, "v_max", "diagram"), "diagram.v_max");
  cfg.diagram.u_max = as_number(require_key(diagram, "u_max", "diagram"), "diagram.u_max");
  if (!(cfg.diagram.v_max > 0.0)) throw ParseError("diagram.v_max must be positive");
  if (!(cfg.diagram.u_max > 0.0)) throw ParseError("diagram.u_max must be positive");

  const nlohmann::json& roads = as_array(require_key(top, "roads", "config"), "roads");
  for (std::size_t r = 0; r < roads.size(); ++r) {
    cfg.network.roads.push_back(
        detail::parse_road(roads[r], "roads[" + std::to_string(r) + "]"));
  }

  if (auto it = top.find("junctions"); it != top.end()) {
    const nlohmann::json& junctions = as_array(*it, "junctions");
    for (std::size_t j = 0; j < junctions.size(); ++j) {
      cfg.network.junctions.push_back(
          detail::parse_junction(junctions[j], "junctions[" + std::to_string(j) + "]"));
    }
  }

  const nlohmann::json& solver = as_object(require_key(top, "solver", "config"), "solver");
  reject_unknown_keys(solver,
                      {"dt", "t_end", "integrator", "limiter_M", "bounds_mode", "output_every"},
                      "solver");
  cfg.solver.dt = as_number(require_key(solver, "dt", "solver"), "solver.dt");
  cfg.solver.t_end = as_number(require_key(solver, "t_end", "solver"), "solver.t_end");
  if (auto it = solver.find("integrator"); it != solver.end()) {
    cfg.solver.integrator = parse_integrator(as_string(*it, "solver.integrator"));
  }
  if (auto it = solver.find("limiter_M"); it != solver.end()) {
    cfg.solver.limiter_m = as_number(*it, "solver.limiter_M");
  }
  if (auto it = solver.find("bounds_mode"); it != solver.end()) {
    cfg.solver.bounds_mode = parse_bounds_mode(as_string(*it, "solver.bounds_mode"));
  }
  if (auto it = solver.find("output_every"); it != solver.end()) {
    cfg.solver.output_every = as_int(*it, "solver.output_every");
  }
  if (!(cfg.solver.dt > 0.0)) throw ParseError("solver.dt must be positive");
  if (!(cfg.solver.t_end >= 0.0)) throw ParseError("solver.t_end must be >= 0");
  if (!(cfg.solver.limiter_m >= 0.0)) throw ParseError("solver.limiter_M must be >= 0");
  if (cfg.solver.output_every < 1) throw ParseError("solver.output_every must be >= 1");

  const nlohmann::json& flux = as_object(require_key(top, "flux", "config"), "flux");
  reject_unknown_keys(flux, {"kind"}, "flux");
  cfg.flux_kind = parse_flux_kind(as_string(require_key(flux, "kind", "flux"), "flux.kind"));

  return cfg;
}

inline ParsedConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is a 1-based offset into the input; convert to line/column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(path.string() + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": " + e.what());
  }
  try {
    return parse_config_json(root);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace detail {

inline json boundary_mode_to_json(const BoundaryMode& mode) {
  switch (mode.kind) {
    case BoundaryKind::ClosedInlet: return "closed-inlet";
    case BoundaryKind::ClosedOutlet: return "closed-outlet";
    case BoundaryKind::FreeOutflow: return "free-outflow";
    case BoundaryKind::Dirichlet: return json{{"dirichlet", mode.value}};
  }
  return "free-outflow";
}

}  // namespace detail

/// Canonical serialization of a resolved configuration. Parsing the result
/// reproduces an equivalent ParsedConfig (used for the manifest's config echo).
inline nlohmann::json config_to_json(const ParsedConfig& cfg) {
  nlohmann::json root;
  root["diagram"] = {{"v_max", cfg.diagram.v_max}, {"u_max", cfg.diagram.u_max}};
  root["roads"] = nlohmann::json::array();
  for (const RoadSpec& road : cfg.network.roads) {
    nlohmann::json r;
    r["id"] = road.id;
    r["interval"] = {road.begin, road.end};
    r["elements"] = road.num_elements;
    r["initial"] = nlohmann::json::array();
    for (const InitialPiece& piece : road.initial) {
      r["initial"].push_back(
          {{"from", piece.from}, {"to", piece.to}, {"value", piece.value}});
    }
    if (road.left_boundary || road.right_boundary) {
      nlohmann::json b;
      if (road.left_boundary) b["left"] = detail::boundary_mode_to_json(*road.left_boundary);
      if (road.right_boundary) b["right"] = detail::boundary_mode_to_json(*road.right_boundary);
      r["boundary"] = std::move(b);
    }
    root["roads"].push_back(std::move(r));
  }
  root["junctions"] = nlohmann::json::array();
  for (const JunctionSpec& junction : cfg.network.junctions) {
    nlohmann::json j;
    j["in"] = junction.incoming;
    j["out"] = junction.outgoing;
    j["matrix"] = nlohmann::json::array();
    for (Eigen::Index row = 0; row < junction.distribution.rows(); ++row) {
      nlohmann::json jrow = nlohmann::json::array();
      for (Eigen::Index col = 0; col < junction.distribution.cols(); ++col) {
        jrow.push_back(junction.distribution(row, col));
      }
      j["matrix"].push_back(std::move(jrow));
    }
    root["junctions"].push_back(std::move(j));
  }
  root["solver"] = {{"dt", cfg.solver.dt},
                    {"t_end", cfg.solver.t_end},
                    {"integrator", to_string(cfg.solver.integrator)},
                    {"limiter_M", cfg.solver.limiter_m},
                    {"bounds_mode", to_string(cfg.solver.bounds_mode)},
                    {"output_every", cfg.solver.output_every}};
  root["flux"] = {{"kind", to_string(cfg.flux_kind)}};
  return root;
}

}  // namespace dgnet
