#pragma once

#include <string>
#include <vector>

#include "ksc/certificate.hpp"
#include "ksc/dynamics.hpp"
#include "ksc/graph.hpp"
#include "ksc/sync.hpp"

namespace ksc {

inline constexpr const char* kVersion = "0.1.0";

// %.17g so reruns are diffable.
std::string g17(double v);

// Graph files: JSON {"n": ..., "edges": [{"i","j","w"}, ...]} or CSV edge
// list with header "i,j,w". Vertex indices are 0-based. The format is picked
// by extension, with content sniffing as fallback.
WeightedGraph load_graph(const std::string& path);
WeightedGraph parse_graph_json(const std::string& text);
WeightedGraph parse_graph_csv(const std::string& text);

// Vector specs used by the CLI: "zero", a comma list, "@file" (JSON array
// or single-row CSV), or for phase states on ring graphs "splay:<k>".
Eigen::VectorXd parse_vector_spec(const std::string& spec, int n,
                                  const WeightedGraph* ring_for_splay = nullptr);

// Splay state on a ring graph: equal gaps 2 pi k / n along the unique basis
// cycle, winding number k. Requires |k| < n/2.
PhaseState ring_splay_state(const WeightedGraph& g, int k);

// Winding vector spec: "zero" or a comma list of c integers.
WindingVector parse_winding_spec(const std::string& spec, int c);

// CSV writers. Every file starts with a comment line carrying the library
// version and the full invocation, then a header row.
void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const std::string& invocation,
                          const CycleBasis* track_winding = nullptr);
void write_scan_csv(const std::string& path, const ScanGrid& grid,
                    const std::string& invocation);
void write_bounds_csv(const std::string& path,
                      const std::vector<BoundsRow>& rows,
                      const std::string& invocation);

// JSON reports.
std::string graph_info_json(const WeightedGraph& g, const CycleBasis& basis);
std::string certificate_json(const CertificateReport& r);
std::string uniqueness_json(const UniquenessReport& r);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ksc
