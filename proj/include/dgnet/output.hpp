#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "dgnet/config_io.hpp"
#include "dgnet/diagnostics.hpp"
#include "dgnet/errors.hpp"
#include "dgnet/system.hpp"
#include "dgnet/time_integration.hpp"
#include "dgnet/version.hpp"

namespace dgnet {

/// Shortest decimal representation that round-trips the exact double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// FNV-1a 64-bit content fingerprint (regression marker, not a security hash).
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

inline std::string checksum_string(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return std::string("fnv1a64:") + buf;
}

struct WriteOptions {
  bool emit_traces = false;
  std::string command = "simulate";
  double runtime_seconds = 0.0;
};

struct FileEntry {
  std::string name;
  std::string checksum;
  long rows = 0;  // data rows, header excluded
};

struct RunManifest {
  nlohmann::json document;
  std::vector<FileEntry> files;
};

namespace detail {

inline FileEntry store_file(const std::filesystem::path& dir, const std::string& name,
                            const std::string& content, long rows,
                            std::vector<FileEntry>& files) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw IoError("cannot write " + (dir / name).string());
  out << content;
  if (!out) throw IoError("failed writing " + (dir / name).string());
  FileEntry entry{name, checksum_string(content), rows};
  files.push_back(entry);
  return entry;
}

}  // namespace detail

/// Write the run's CSV artifacts and manifest.json into out_dir. Row order is
/// time-major everywhere; numbers use shortest round-trip formatting, so
/// identical runs produce byte-identical data files.
template <FundamentalDiagram D>
RunManifest write_outputs(const NetworkSystem<D>& sys, const RunResult& result,
                          const ParsedConfig& cfg, const std::filesystem::path& out_dir,
                          const WriteOptions& options = {}) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto roads = sys.network.roads();
  const auto& snapshots = result.trajectory.snapshots;
  if (result.diagnostics.size() != snapshots.size()) {
    throw DimensionError("diagnostics records do not align with the trajectory");
  }

  RunManifest manifest;

  for (std::size_t r = 0; r < roads.size(); ++r) {
    std::string csv = "t,x,u\n";
    long rows = 0;
    for (const Snapshot& snap : snapshots) {
      const DGState& state = snap.states[r];
      for (int k = 0; k < state.num_elements(); ++k) {
        csv += format_double(snap.t);
        csv += ',';
        csv += format_double(sys.meshes[r].element_center(k));
        csv += ',';
        csv += format_double(state.evaluate(k, 0.0));
        csv += '\n';
        ++rows;
      }
    }
    detail::store_file(out_dir, "road_" + std::to_string(roads[r].id) + ".csv", csv,
                       rows, manifest.files);

    if (options.emit_traces) {
      std::string tcsv = "t,x,u\n";
      long trows = 0;
      for (const Snapshot& snap : snapshots) {
        const DGState& state = snap.states[r];
        for (int k = 0; k < state.num_elements(); ++k) {
          tcsv += format_double(snap.t);
          tcsv += ',';
          tcsv += format_double(sys.meshes[r].nodes[k]);
          tcsv += ',';
          tcsv += format_double(state.left_trace(k));
          tcsv += '\n';
          tcsv += format_double(snap.t);
          tcsv += ',';
          tcsv += format_double(sys.meshes[r].nodes[k + 1]);
          tcsv += ',';
          tcsv += format_double(state.right_trace(k));
          tcsv += '\n';
          trows += 2;
        }
      }
      detail::store_file(out_dir, "road_" + std::to_string(roads[r].id) + "_traces.csv",
                         tcsv, trows, manifest.files);
    }
  }

  {
    std::string csv = "t,road_id,mass\n";
    long rows = 0;
    for (const Snapshot& snap : snapshots) {
      for (std::size_t r = 0; r < roads.size(); ++r) {
        csv += format_double(snap.t);
        csv += ',';
        csv += std::to_string(roads[r].id);
        csv += ',';
        csv += format_double(total_mass(snap.states[r], sys.meshes[r]));
        csv += '\n';
        ++rows;
      }
    }
    detail::store_file(out_dir, "summary.csv", csv, rows, manifest.files);
  }

  {
    Eigen::Index n_max = 0, m_max = 0;
    for (const Junction& j : sys.network.junctions()) {
      n_max = std::max(n_max, static_cast<Eigen::Index>(j.incoming.size()));
      m_max = std::max(m_max, static_cast<Eigen::Index>(j.outgoing.size()));
    }
    std::string csv = "t,junction,residual";
    for (Eigen::Index j = 1; j <= m_max; ++j) csv += ",E_" + std::to_string(j);
    for (Eigen::Index i = 1; i <= n_max; ++i) csv += ",H_in_" + std::to_string(i);
    for (Eigen::Index j = 1; j <= m_max; ++j) csv += ",H_out_" + std::to_string(j);
    csv += '\n';
    long rows = 0;
    for (const DiagnosticsRecord& rec : result.diagnostics) {
      for (std::size_t j = 0; j < rec.junctions.size(); ++j) {
        const JunctionAudit& audit = rec.junctions[j];
        csv += format_double(rec.t);
        csv += ',';
        csv += std::to_string(j);
        csv += ',';
        csv += format_double(audit.residual);
        for (Eigen::Index c = 0; c < m_max; ++c) {
          csv += ',';
          if (c < audit.distribution_errors.size()) {
            csv += format_double(audit.distribution_errors(c));
          }
        }
        for (Eigen::Index c = 0; c < n_max; ++c) {
          csv += ',';
          if (c < audit.inflow.size()) csv += format_double(audit.inflow(c));
        }
        for (Eigen::Index c = 0; c < m_max; ++c) {
          csv += ',';
          if (c < audit.outflow.size()) csv += format_double(audit.outflow(c));
        }
        csv += '\n';
        ++rows;
      }
    }
    detail::store_file(out_dir, "junctions.csv", csv, rows, manifest.files);
  }

  nlohmann::json doc;
  doc["version"] = version;
  doc["command"] = options.command;
  doc["flux"] = to_string(sys.flux_kind);
  doc["config"] = config_to_json(cfg);
  doc["runtime_seconds"] = options.runtime_seconds;
  doc["events"] = {{"cfl_number", result.cfl_number},
                   {"cfl_warnings", result.cfl_warnings},
                   {"mass_violations", result.bounds.violations},
                   {"mass_correction", result.bounds.mass_correction},
                   {"slope_rescales", result.bounds.rescales}};
  doc["files"] = nlohmann::json::object();
  for (const FileEntry& entry : manifest.files) {
    doc["files"][entry.name] = {{"checksum", entry.checksum}, {"rows", entry.rows}};
  }
  manifest.document = doc;

  std::ofstream out(out_dir / "manifest.json", std::ios::binary);
  if (!out) throw IoError("cannot write " + (out_dir / "manifest.json").string());
  out << doc.dump(2) << '\n';
  return manifest;
}

}  // namespace dgnet
