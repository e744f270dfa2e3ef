#include "ksc/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace ksc {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& s) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in: " + s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not a number: " + s);
  }
}

int parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in: " + s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not an integer: " + s);
  }
}

}  // namespace

WeightedGraph parse_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON needs fields 'n' and 'edges'");
  std::vector<Edge> edges;
  try {
    for (const auto& je : j["edges"])
      edges.push_back({je.at("i").get<int>(), je.at("j").get<int>(),
                       je.at("w").get<double>()});
    return WeightedGraph(j["n"].get<int>(), std::move(edges));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
}

WeightedGraph parse_graph_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  int n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "i,j,w") throw ParseError("edge list must start with 'i,j,w'");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 3) throw ParseError("edge row needs 3 fields: " + line);
    Edge e{parse_int(trim(f[0])), parse_int(trim(f[1])),
           parse_double(trim(f[2]))};
    n = std::max(n, std::max(e.i, e.j) + 1);
    edges.push_back(e);
  }
  if (!header_seen) throw ParseError("empty edge list");
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph load_graph(const std::string& path) {
  const std::string text = read_text_file(path);
  const bool json_ext = path.size() > 5 && path.substr(path.size() - 5) == ".json";
  const std::string body = trim(text);
  if (json_ext || (!body.empty() && body[0] == '{'))
    return parse_graph_json(text);
  return parse_graph_csv(text);
}

PhaseState ring_splay_state(const WeightedGraph& g, int k) {
  const int n = g.n();
  if (g.m() != n) throw InvalidRange("splay states need a ring graph (m == n)");
  for (const auto& nbrs : g.adjacency())
    if (nbrs.size() != 2)
      throw InvalidRange("splay states need a ring graph (all degrees 2)");
  if (2 * std::abs(k) >= n)
    throw InvalidRange("splay winding must satisfy |k| < n/2");
  const CycleBasis basis = cycle_basis(g);
  const std::vector<int>& cyc = basis.cycles.at(0);
  PhaseState x = PhaseState::Zero(n);
  const double gap = 2.0 * std::numbers::pi * k / n;
  // d_cc(x_{c_{j-1}}, x_{c_j}) = +gap each, so the cycle sum is 2 pi k.
  for (size_t j = 1; j + 1 < cyc.size(); ++j) x[cyc[j]] = x[cyc[j - 1]] - gap;
  return x;
}

Eigen::VectorXd parse_vector_spec(const std::string& spec, int n,
                                  const WeightedGraph* ring_for_splay) {
  if (spec == "zero") return Eigen::VectorXd::Zero(n);
  if (spec.rfind("splay:", 0) == 0) {
    if (ring_for_splay == nullptr)
      throw ParseError("splay:<k> is only valid for phase states");
    return ring_splay_state(*ring_for_splay, parse_int(spec.substr(6)));
  }
  if (!spec.empty() && spec[0] == '@') {
    const std::string text = trim(read_text_file(spec.substr(1)));
    if (!text.empty() && text[0] == '[') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        throw ParseError(std::string("bad vector JSON: ") + e.what());
      }
      if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("vector JSON must be an array of length n");
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v[i] = j[i].get<double>();
      return v;
    }
    // Single-row CSV.
    const auto f = split(split(text, '\n')[0], ',');
    if (static_cast<int>(f.size()) != n)
      throw ParseError("vector CSV row must have n fields");
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = parse_double(trim(f[i]));
    return v;
  }
  const auto f = split(spec, ',');
  if (static_cast<int>(f.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " comma-separated values");
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = parse_double(trim(f[i]));
  return v;
}

WindingVector parse_winding_spec(const std::string& spec, int c) {
  if (spec == "zero") return WindingVector::Zero(c);
  const auto f = split(spec, ',');
  if (static_cast<int>(f.size()) != c)
    throw ParseError("winding vector needs " + std::to_string(c) + " entries");
  WindingVector u(c);
  for (int i = 0; i < c; ++i) u[i] = parse_int(trim(f[i]));
  return u;
}

namespace {

void write_comment(std::ostream& out, const std::string& invocation) {
  out << "# ksc " << kVersion << " | " << invocation << "\n";
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const std::string& invocation,
                          const CycleBasis* track_winding) {
  std::ostringstream out;
  write_comment(out, invocation);
  const int n = traj.states.empty() ? 0 : static_cast<int>(traj.states[0].size());
  out << "t";
  for (int i = 0; i < n; ++i) out << ",x_" << i;
  if (track_winding)
    for (int s = 0; s < track_winding->count(); ++s) out << ",u_" << s;
  out << "\n";
  for (size_t k = 0; k < traj.states.size(); ++k) {
    out << g17(traj.times[static_cast<Eigen::Index>(k)]);
    for (int i = 0; i < n; ++i) out << "," << g17(traj.states[k][i]);
    if (track_winding) {
      const WindingVector u = winding_vector(*track_winding, traj.states[k]);
      for (int s = 0; s < u.size(); ++s) out << "," << u[s];
    }
    out << "\n";
  }
  write_text_file(path, out.str());
}

void write_scan_csv(const std::string& path, const ScanGrid& grid,
                    const std::string& invocation) {
  std::ostringstream out;
  write_comment(out, invocation);
  const int c = grid.windings.empty() ? 0
                                      : static_cast<int>(grid.windings[0].size());
  out << "s,t,mu";
  for (int s = 0; s < c; ++s) out << ",u_" << s;
  out << ",cohesive\n";
  for (int is = 0; is < grid.res; ++is)
    for (int it = 0; it < grid.res; ++it) {
      out << g17(grid.s_at(is)) << "," << g17(grid.t_at(it)) << ","
          << g17(grid.mu(is, it));
      const WindingVector& u = grid.windings[grid.flat(is, it)];
      for (int s = 0; s < u.size(); ++s) out << "," << u[s];
      out << "," << int(grid.cohesive[grid.flat(is, it)]) << "\n";
    }
  write_text_file(path, out.str());
}

void write_bounds_csv(const std::string& path,
                      const std::vector<BoundsRow>& rows,
                      const std::string& invocation) {
  std::ostringstream out;
  write_comment(out, invocation);
  out << "ratio,phi,gamma_bar\n";
  for (const BoundsRow& r : rows)
    out << g17(r.ratio) << "," << g17(r.phi) << "," << g17(r.gamma_bar) << "\n";
  write_text_file(path, out.str());
}

std::string graph_info_json(const WeightedGraph& g, const CycleBasis& basis) {
  json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["lambda2"] = algebraic_connectivity(g);
  j["d_max"] = max_weighted_degree(g);
  j["cycle_count"] = basis.count();
  return j.dump(2) + "\n";
}

std::string certificate_json(const CertificateReport& r) {
  json j;
  j["phi"] = r.phi;
  j["gamma"] = r.gamma;
  j["gamma_bar"] = r.gamma_bar;
  j["lambda2"] = r.lambda2;
  j["d_max"] = r.d_max;
  j["odd_bound"] = r.odd_bound;
  j["even_bound"] = r.even_bound;
  j["rate_c"] = r.rate_c;
  j["verdict"] = r.verdict == Verdict::Semicontracting ? "Semicontracting"
                                                       : "NotCertified";
  j["limit_case"] = r.limit_case;
  return j.dump(2) + "\n";
}

std::string uniqueness_json(const UniquenessReport& r) {
  json j;
  j["u"] = std::vector<int>(r.u.data(), r.u.data() + r.u.size());
  j["gamma"] = r.gamma;
  j["seed"] = r.seed;
  j["n_starts"] = r.n_starts;
  j["sampled"] = r.sampled;
  j["converged"] = r.converged;
  j["diverged"] = r.diverged;
  j["escaped"] = r.escaped;
  j["classes"] = r.classes;
  j["alarm"] = r.alarm;
  if (r.representative.size() > 0) {
    j["representative"] = std::vector<double>(
        r.representative.data(),
        r.representative.data() + r.representative.size());
    j["omega_s"] = r.omega_s;
    j["max_residual"] = r.max_residual;
  }
  return j.dump(2) + "\n";
}

}  // namespace ksc
