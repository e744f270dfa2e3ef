#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "ksc/certificate.hpp"
#include "ksc/dynamics.hpp"
#include "ksc/io.hpp"
#include "ksc/sync.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitRange = 4;
constexpr int kExitNonFinite = 5;
constexpr int kExitAlarm = 6;

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    ksc::write_text_file(out_path, text);
}

// Direction spec: "e<k>" for a coordinate axis or a comma list of n reals.
Eigen::VectorXd parse_direction(const std::string& spec, int n) {
  if (spec.size() > 1 && spec[0] == 'e') {
    bool digits = true;
    for (size_t i = 1; i < spec.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(spec[i]));
    if (digits) {
      const int k = std::stoi(spec.substr(1));
      if (k < 0 || k >= n) throw ksc::ParseError("axis index out of range: " + spec);
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      v[k] = 1.0;
      return v;
    }
  }
  return ksc::parse_vector_spec(spec, n);
}

struct ScanArgs {
  std::string graph_file, origin = "zero", dirs = "e0;e1", out;
  std::string range = "0:6.283185307179586";
  double phi = 0.0;
  int res = 100, jobs = 0;
  bool degrees = false;
};

std::pair<double, double> parse_range(const std::string& spec) {
  const auto pos = spec.find(':');
  if (pos == std::string::npos)
    throw ksc::ParseError("--range needs the form lo:hi");
  try {
    return {std::stod(spec.substr(0, pos)), std::stod(spec.substr(pos + 1))};
  } catch (const std::exception&) {
    throw ksc::ParseError("bad --range: " + spec);
  }
}

struct SyncArgs {
  std::string graph_file, omega = "zero", u = "zero", out;
  double phi = 0.0;
  std::optional<double> gamma;
  int starts = 50, jobs = 0;
  std::uint64_t seed = 0;
  bool degrees = false;
};

double to_radians(double v, bool degrees) {
  return degrees ? v * std::numbers::pi / 180.0 : v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semicontraction certificates and synchronous states for "
               "Kuramoto-Sakaguchi oscillator networks"};
  app.require_subcommand(1);
  const std::string invocation = join_args(argc, argv);

  // graph-info
  std::string gi_file;
  auto* gi = app.add_subcommand("graph-info", "Spectral and structural summary");
  gi->add_option("graph", gi_file, "graph file (.json or .csv)")->required();

  // certify
  std::string ct_file, ct_out;
  double ct_phi = 0.0;
  std::optional<double> ct_gamma;
  bool ct_degrees = false;
  auto* ct = app.add_subcommand("certify", "Semicontraction certificate");
  ct->add_option("graph", ct_file)->required();
  ct->add_option("--phi", ct_phi, "frustration in [0, pi/2]")->required();
  ct->add_option("--gamma", ct_gamma, "cohesiveness level (default 0.9*gamma_bar)");
  ct->add_flag("--degrees", ct_degrees, "interpret angle flags in degrees");
  ct->add_option("--out", ct_out, "write JSON here instead of stdout");

  // scan
  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Log-seminorm slice scan (CSV)");
  scan->add_option("graph", sc.graph_file)->required();
  scan->add_option("--phi", sc.phi)->required();
  scan->add_option("--origin", sc.origin, "phase state spec (default zero)");
  scan->add_option("--dirs", sc.dirs, "two direction specs separated by ';'");
  scan->add_option("--range", sc.range, "slice parameter range lo:hi");
  scan->add_option("--res", sc.res, "grid points per axis");
  scan->add_option("--jobs", sc.jobs, "worker threads (0 = all cores)");
  scan->add_flag("--degrees", sc.degrees);
  scan->add_option("--out", sc.out)->required();

  // bounds
  std::string bd_ratios = "0.25,0.5,1,2,4", bd_out;
  double bd_phi_min = 0.01, bd_phi_max = std::numbers::pi / 2;
  int bd_steps = 100;
  auto* bd = app.add_subcommand("bounds", "gamma_bar curves per lambda2/d_max ratio");
  bd->add_option("--ratios", bd_ratios, "comma list of ratios");
  bd->add_option("--phi-min", bd_phi_min);
  bd->add_option("--phi-max", bd_phi_max);
  bd->add_option("--steps", bd_steps);
  bd->add_option("--out", bd_out)->required();

  // simulate
  std::string sm_file, sm_omega = "zero", sm_x0 = "zero", sm_out;
  double sm_phi = 0.0, sm_dt = 0.0, sm_t = 1.0;
  bool sm_track = false, sm_degrees = false;
  auto* sm = app.add_subcommand("simulate", "Fixed-step RK4 trajectory (CSV)");
  sm->add_option("graph", sm_file)->required();
  sm->add_option("--phi", sm_phi)->required();
  sm->add_option("--omega", sm_omega, "zero | comma list | @file");
  sm->add_option("--x0", sm_x0, "zero | comma list | @file | splay:<k>");
  sm->add_option("--dt", sm_dt, "step (default 1e-3 / d_max)");
  sm->add_option("--t", sm_t, "horizon")->required();
  sm->add_flag("--track-winding", sm_track, "append winding-vector columns");
  sm->add_flag("--degrees", sm_degrees);
  sm->add_option("--out", sm_out)->required();

  // sync
  SyncArgs sy;
  auto* sync = app.add_subcommand("sync", "Multistart synchronous-state search");
  sync->add_option("graph", sy.graph_file)->required();
  sync->add_option("--phi", sy.phi)->required();
  sync->add_option("--omega", sy.omega, "zero | comma list | @file");
  sync->add_option("--u", sy.u, "winding cell: zero | comma list");
  sync->add_option("--gamma", sy.gamma, "cohesiveness level (default 0.9*gamma_bar)");
  sync->add_option("--starts", sy.starts);
  sync->add_option("--seed", sy.seed);
  sync->add_option("--jobs", sy.jobs);
  sync->add_flag("--degrees", sy.degrees);
  sync->add_option("--out", sy.out, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (gi->parsed()) {
      const ksc::WeightedGraph g = ksc::load_graph(gi_file);
      std::cout << ksc::graph_info_json(g, ksc::cycle_basis(g));
      return kExitOk;
    }

    if (ct->parsed()) {
      const ksc::WeightedGraph g = ksc::load_graph(ct_file);
      const double phi = to_radians(ct_phi, ct_degrees);
      const double gamma = ct_gamma ? to_radians(*ct_gamma, ct_degrees)
                                    : 0.9 * ksc::gamma_bar(g, phi);
      emit(ksc::certificate_json(ksc::certify(g, phi, gamma)), ct_out);
      return kExitOk;
    }

    if (scan->parsed()) {
      const ksc::WeightedGraph g = ksc::load_graph(sc.graph_file);
      const ksc::CycleBasis basis = ksc::cycle_basis(g);
      const double phi = to_radians(sc.phi, sc.degrees);
      const auto dir_specs = [&] {
        const auto pos = sc.dirs.find(';');
        if (pos == std::string::npos)
          throw ksc::ParseError("--dirs needs two specs separated by ';'");
        return std::pair{sc.dirs.substr(0, pos), sc.dirs.substr(pos + 1)};
      }();
      const ksc::ModelParams p(g, phi, Eigen::VectorXd::Zero(g.n()));
      const auto [range_lo, range_hi] = parse_range(sc.range);
      const ksc::ScanGrid grid = ksc::scan_slice(
          p, basis, ksc::parse_vector_spec(sc.origin, g.n(), &g),
          parse_direction(dir_specs.first, g.n()),
          parse_direction(dir_specs.second, g.n()), range_lo, range_hi,
          sc.res, sc.jobs);
      ksc::write_scan_csv(sc.out, grid, invocation);
      return kExitOk;
    }

    if (bd->parsed()) {
      std::vector<double> ratios;
      for (const auto& tok : [&] {
             std::vector<std::string> t;
             std::string item;
             std::istringstream ss(bd_ratios);
             while (std::getline(ss, item, ',')) t.push_back(item);
             return t;
           }())
        ratios.push_back(std::stod(tok));
      if (bd_steps < 1 || !(bd_phi_min > 0.0) || !(bd_phi_max >= bd_phi_min))
        throw ksc::InvalidRange("bad phi grid");
      std::vector<double> phis(bd_steps);
      for (int k = 0; k < bd_steps; ++k)
        phis[k] = bd_steps == 1 ? bd_phi_min
                                : bd_phi_min + (bd_phi_max - bd_phi_min) * k /
                                                   (bd_steps - 1);
      ksc::write_bounds_csv(bd_out, ksc::bounds_curve(ratios, phis), invocation);
      return kExitOk;
    }

    if (sm->parsed()) {
      const ksc::WeightedGraph g = ksc::load_graph(sm_file);
      const double phi = to_radians(sm_phi, sm_degrees);
      const ksc::ModelParams p(g, phi, ksc::parse_vector_spec(sm_omega, g.n()));
      const double dt = sm_dt > 0.0 ? sm_dt : ksc::default_step(g);
      const ksc::Trajectory traj =
          ksc::integrate(p, ksc::parse_vector_spec(sm_x0, g.n(), &g), dt, sm_t);
      const ksc::CycleBasis basis =
          sm_track ? ksc::cycle_basis(g) : ksc::CycleBasis{};
      ksc::write_trajectory_csv(sm_out, traj, invocation,
                                sm_track ? &basis : nullptr);
      return kExitOk;
    }

    if (sync->parsed()) {
      const ksc::WeightedGraph g = ksc::load_graph(sy.graph_file);
      const double phi = to_radians(sy.phi, sy.degrees);
      const ksc::ModelParams p(g, phi, ksc::parse_vector_spec(sy.omega, g.n()));
      ksc::PolytopeMap map(g, ksc::cycle_basis(g));
      const ksc::WindingVector u =
          ksc::parse_winding_spec(sy.u, map.basis().count());
      const double gamma = sy.gamma ? to_radians(*sy.gamma, sy.degrees)
                                    : 0.9 * ksc::gamma_bar(g, phi);
      const ksc::UniquenessReport rep =
          ksc::uniqueness_check(p, map, u, gamma, sy.starts, sy.seed, sy.jobs);
      emit(ksc::uniqueness_json(rep), sy.out);
      return rep.alarm ? kExitAlarm : kExitOk;
    }
  } catch (const ksc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ksc::InvalidGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ksc::NotConnected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const ksc::NonFiniteState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonFinite;
  } catch (const ksc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  }
  return kExitOk;
}
