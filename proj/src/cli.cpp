// Copyright 2026 The photonq authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "photonq/dipole.hpp"
#include "photonq/multiport.hpp"
#include "photonq/qfilter.hpp"
#include "photonq/rng.hpp"
#include "photonq/rus.hpp"
#include "photonq/scattering.hpp"
#include "photonq/stategen.hpp"
#include "photonq/timeresolved.hpp"

namespace photonq {

namespace {

constexpr const char* kVersion = "photonq 1.0.0";
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Emits the provenance header, a column header and rows in csv or jsonl.
class TableWriter {
 public:
  TableWriter(std::ostream& os, bool jsonl, const ExperimentConfig& cfg)
      : os_(os), jsonl_(jsonl) {
    if (jsonl_) {
      nlohmann::json meta{{"record", "provenance"},
                          {"experiment", cfg.experiment},
                          {"version", kVersion}};
      if (cfg.seed) meta["seed"] = *cfg.seed;
      for (const auto& [k, v] : cfg.parameters) meta["param." + k] = v;
      os_ << meta.dump() << '\n';
    } else {
      os_ << "# " << kVersion << " experiment=" << cfg.experiment;
      if (cfg.seed) os_ << " seed=" << *cfg.seed;
      for (const auto& [k, v] : cfg.parameters) os_ << ' ' << k << '=' << v;
      os_ << '\n';
    }
  }

  void note(const std::string& key, const std::string& value) {
    if (jsonl_)
      os_ << nlohmann::json{{"record", "note"}, {"key", key}, {"value", value}}
                 .dump()
          << '\n';
    else
      os_ << "# " << key << '=' << value << '\n';
  }

  void columns(std::vector<std::string> names) {
    names_ = std::move(names);
    if (!jsonl_) {
      for (std::size_t i = 0; i < names_.size(); ++i)
        os_ << (i ? "," : "") << names_[i];
      os_ << '\n';
    }
  }

  void row(const std::vector<std::string>& values) {
    if (jsonl_) {
      nlohmann::json obj{{"record", "row"}};
      for (std::size_t i = 0; i < values.size(); ++i) obj[names_[i]] = values[i];
      os_ << obj.dump() << '\n';
    } else {
      for (std::size_t i = 0; i < values.size(); ++i)
        os_ << (i ? "," : "") << values[i];
      os_ << '\n';
    }
  }

 private:
  std::ostream& os_;
  bool jsonl_;
  std::vector<std::string> names_;
};

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& p) : params_(p) {}

  int get_int(const std::string& key, int fallback) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      return std::stoi(it->second);
    } catch (const std::exception&) {
      throw ConfigError("parameter " + key + " expects an integer");
    }
  }

  double get_double(const std::string& key, double fallback) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw ConfigError("parameter " + key + " expects a number");
    }
  }

  std::string get_enum(const std::string& key, const std::string& fallback,
                       const std::set<std::string>& allowed) {
    used_.insert(key);
    auto it = params_.find(key);
    std::string v = it == params_.end() ? fallback : it->second;
    if (!allowed.count(v))
      throw ConfigError("parameter " + key + " has unsupported value " + v);
    return v;
  }

  void reject_unknown() const {
    for (const auto& [k, v] : params_)
      if (!used_.count(k)) throw ConfigError("unknown parameter: " + k);
  }

 private:
  const std::map<std::string, std::string>& params_;
  std::set<std::string> used_;
};

std::uint64_t require_seed(const ExperimentConfig& cfg) {
  if (!cfg.seed)
    throw ConfigError("experiment " + cfg.experiment + " requires --seed");
  return *cfg.seed;
}

// ---------------------------------------------------------------------------
// experiment bodies

void run_wstate_sweep(const ExperimentConfig&, Params& p, TableWriter& w) {
  const int n_max = p.get_int("N_max", 14);
  p.reject_unknown();
  w.columns({"N", "p_success", "is_zero"});
  for (const auto& r : wstate_sweep(n_max))
    w.row({std::to_string(r.n), fmt(r.p_success), r.is_zero ? "1" : "0"});
}

void write_coincidence(const CoincidenceResult& res, TableWriter& w) {
  w.columns({"record", "term", "re", "im"});
  w.row({"probability", "", fmt(res.probability), fmt(0.0)});
  for (const auto& [f, a] : res.projected.terms()) {
    std::string term;
    for (const auto& [m, n] : f.occupations()) {
      if (!term.empty()) term += ' ';
      term += std::to_string(m.port);
      term += '.';
      term += label_name(m.label);
      term += '^';
      term += std::to_string(n);
    }
    w.row({"amplitude", term, fmt(a.real()), fmt(a.imag())});
  }
}

void run_hom(const ExperimentConfig&, Params& p, TableWriter& w) {
  const int n = p.get_int("N", 4);
  const std::string stats =
      p.get_enum("statistics", "boson", {"boson", "fermion"});
  p.reject_unknown();
  const double pc = coincidence_probability(
      bell_multiport(n),
      stats == "boson" ? Statistics::Boson : Statistics::Fermion);
  w.columns({"N", "statistics", "p_coinc"});
  w.row({std::to_string(n), stats, fmt(pc)});
}

void run_symmetric4(const ExperimentConfig&, Params& p, TableWriter& w) {
  const int points = p.get_int("points", 50);
  p.reject_unknown();
  w.columns({"phi", "p_coinc", "closed_form"});
  for (int k = 0; k < points; ++k) {
    const double phi = kPi * k / (points - 1);
    const double pc = coincidence_probability(symmetric4(phi), Statistics::Boson);
    w.row({fmt(phi), fmt(pc), fmt((1.0 + std::cos(2.0 * phi)) / 8.0)});
  }
}

void write_filter_table(const std::vector<FilterOutcome>& outcomes,
                        const PureState& target, TableWriter& w) {
  const PureState target_hat =
      target.squared_norm() > 0 ? target.normalize() : target;
  w.columns({"syndrome", "probability", "fidelity"});
  for (const auto& o : outcomes) {
    std::string fid;
    if (o.success)
      fid = fmt(std::norm(inner_product(target_hat, o.output)));
    w.row({syndrome_string(o.syndrome), fmt(o.probability), fid});
  }
}

PureState filter_input(const std::string& kind, int n) {
  if (kind == "uniform") return uniform_input(n);
  // bell: (|H...H> + |V...V>)/sqrt2 on the odd ports
  std::vector<std::pair<ModeIndex, int>> h, v;
  for (int k = 0; k < n; ++k) {
    h.push_back({{2 * k + 1, Label::H}, 1});
    v.push_back({{2 * k + 1, Label::V}, 1});
  }
  PureState st(Statistics::Boson);
  const double s = 1.0 / std::sqrt(2.0);
  st.add_term(FockState(Statistics::Boson, std::move(h)), s);
  st.add_term(FockState(Statistics::Boson, std::move(v)), s);
  return st;
}

void run_filter(const ExperimentConfig&, Params& p, TableWriter& w) {
  const int n = p.get_int("N", 2);
  const std::string input = p.get_enum("input", "bell", {"bell", "uniform"});
  p.reject_unknown();
  PureState in = filter_input(input, n);
  auto outcomes = parity_filter(in, n);
  // P_N keeps the all-H and all-V components.
  PureState target(Statistics::Boson);
  for (const auto& [f, a] : in.terms()) {
    bool allh = true, allv = true;
    for (const auto& [m, c] : f.occupations()) {
      allh = allh && m.label == Label::H;
      allv = allv && m.label == Label::V;
    }
    if (allh || allv) target.add_term(f, a);
  }
  write_filter_table(outcomes, target, w);
}

void run_cz_filter(const ExperimentConfig&, Params& p, TableWriter& w) {
  const std::string input =
      p.get_enum("input", "uniform", {"uniform", "hh", "vv", "hv", "vh"});
  p.reject_unknown();
  Complex a = 0, b = 0, g = 0, d = 0;
  if (input == "uniform") a = b = g = d = 0.5;
  if (input == "hh") a = 1;
  if (input == "vv") b = 1;
  if (input == "hv") g = 1;
  if (input == "vh") d = 1;
  PureState in = two_photon_input(a, b, g, d);
  auto outcomes = cz_filter(in);
  PureState target = two_photon_input(a, -b, g, d);  // P_CZ acting on input
  write_filter_table(outcomes, target, w);
}

void run_filter_fidelity(const ExperimentConfig&, Params& p,
                         TableWriter& w) {
  const double lo = p.get_double("pd_min", 0.5);
  const double hi = p.get_double("pd_max", 1.0);
  const int points = p.get_int("points", 26);
  p.reject_unknown();
  w.columns({"p_d", "F_closed", "F_povm", "one_minus_F"});
  for (int k = 0; k < points; ++k) {
    const double pd = points == 1 ? lo : lo + (hi - lo) * k / (points - 1);
    const double fc = filter_fidelity(pd);
    w.row({fmt(pd), fmt(fc), fmt(filter_fidelity_povm(pd)), fmt(1.0 - fc)});
  }
}

void run_rus(const ExperimentConfig& cfg, Params& p, TableWriter& w) {
  const std::uint64_t seed = require_seed(cfg);
  const int trials = p.get_int("trials", 100);
  const int max_rounds = p.get_int("max_rounds", 100);
  const double pd = p.get_double("pd", 1.0);
  p.reject_unknown();
  RandomStream inputs(seed, "rus-inputs");
  w.columns({"trial", "seed", "rounds", "status", "outcomes", "overlap"});
  double total_rounds = 0;
  int successes = 0;
  for (int t = 0; t < trials; ++t) {
    TwoQubitState q = TwoQubitState::random(inputs);
    const std::uint64_t run_seed = seed + 1000003ull * t;
    RusResult r = rus_simulate(q, run_seed, max_rounds, pd);
    Eigen::Vector4cd want = kCz * q.amps;
    const double overlap = std::abs(want.dot(r.final_state.amps));
    std::string outs;
    for (int o : r.outcome_sequence) {
      if (!outs.empty()) outs += ';';
      outs += std::to_string(o);
    }
    const char* status = r.status == RusResult::Status::Success ? "success"
                         : r.status == RusResult::Status::PhotonLoss
                             ? "photon_loss"
                             : "max_rounds";
    if (r.status == RusResult::Status::Success) {
      total_rounds += r.rounds_used;
      ++successes;
    }
    w.row({std::to_string(t), std::to_string(run_seed),
           std::to_string(r.rounds_used), status, outs, fmt(overlap)});
  }
  w.note("mean_rounds", successes ? fmt(total_rounds / successes) : "nan");
  w.note("success_fraction", fmt(double(successes) / trials));
}

void run_teleport(const ExperimentConfig& cfg, Params& p, TableWriter& w) {
  const std::uint64_t seed = require_seed(cfg);
  const int trials = p.get_int("trials", 100);
  p.reject_unknown();
  RandomStream inputs(seed, "teleport-inputs");
  w.columns({"trial", "rounds", "overlap"});
  double total_rounds = 0;
  for (int t = 0; t < trials; ++t) {
    Eigen::Vector2cd q(Complex(inputs.gaussian(), inputs.gaussian()),
                       Complex(inputs.gaussian(), inputs.gaussian()));
    q.normalize();
    TeleportResult r =
        teleport_with_insurance(q(0), q(1), seed + 999983ull * t);
    total_rounds += r.rounds_used;
    w.row({std::to_string(t), std::to_string(r.rounds_used),
           fmt(std::abs(q.dot(r.final_state)))});
  }
  w.note("mean_rounds", fmt(total_rounds / trials));
}

void run_timeresolve(const ExperimentConfig&, Params& p, TableWriter& w) {
  const double ratio = p.get_double("kappa_ratio", 0.5);
  const int grid = p.get_int("grid", 21);
  p.reject_unknown();
  PulseParams p1 = reference_driving(ratio);
  PulseParams p2 = reference_driving(1.0);
  w.note("F_av", fmt(average_fidelity(p1, p2, 0.0, p1.support_end)));
  w.columns({"t3", "t4", "F", "density"});
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double t3 = p1.support_end * i / (grid - 1);
      const double t4 = p1.support_end * j / (grid - 1);
      auto f = fidelity_t(p1, p2, t3, t4);
      w.row({fmt(t3), fmt(t4), f ? fmt(*f) : "",
             fmt(joint_density(p1, p2, t3, t4))});
    }
}

void run_dipole(const ExperimentConfig&, Params& p, TableWriter& w) {
  const int points = p.get_int("theta_points", 21);
  const double phi = p.get_double("phi", 0.0);
  const double r_override = p.get_double("r", 0.0);
  p.reject_unknown();
  w.columns({"r_over_lambda", "theta", "phi", "C_pm", "C_hv"});
  const DetectorSpec bob = detector_bob();
  std::vector<double> separations = {25.0, 26.0, 27.0};
  if (r_override > 0.0) separations = {r_override};
  for (double r : separations) {
    DipoleConfig cfg_r = DipoleConfig::standard(r);
    if (cfg_r.below_regime())
      w.note("regime_warning",
             "separation below 25 wavelengths; dipole-dipole coupling "
             "neglected");
    for (int k = 0; k < points; ++k) {
      const double theta_req = kPi / 2.0 - 0.5 + 1.0 * k / (points - 1);
      // Snap to the nearest placement satisfying the half-fringe condition
      // for r = 25 and keep the detectors there for all separations.
      const double c = std::cos(theta_req);
      double odd = 2.0 * std::floor(std::abs(c) * 25.0) + 1.0;
      double cs = std::copysign(odd / 50.0, c);
      const double theta = std::acos(cs);
      DetectorSpec alice = detector_from_angles(theta, phi);
      w.row({fmt(r), fmt(theta), fmt(phi),
             fmt(correlation(cfg_r, alice, bob, PolarizationBasis::Circular)),
             fmt(correlation(cfg_r, alice, bob, PolarizationBasis::Linear))});
    }
  }
}

void run_infer_singlet(const ExperimentConfig&, Params& p,
                       TableWriter& w) {
  p.reject_unknown();
  TwoQubitDensity rho = infer_singlet();
  w.columns({"record", "i", "j", "re", "im"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      w.row({"rho", std::to_string(i), std::to_string(j),
             fmt(rho.matrix()(i, j).real()), fmt(rho.matrix()(i, j).imag())});
  w.note("singlet_check", singlet_constraints_hold(rho) ? "1" : "0");
  Eigen::Matrix4cd mixed = Eigen::Matrix4cd::Zero();
  mixed(1, 1) = 0.5;
  mixed(2, 2) = 0.5;
  w.note("mixed_check",
         singlet_constraints_hold(TwoQubitDensity(mixed)) ? "1" : "0");
}

void run_reck(const ExperimentConfig& cfg, Params& p, TableWriter& w) {
  const int n_max = p.get_int("N_max", 8);
  const int trials = p.get_int("trials", 20);
  p.reject_unknown();
  w.columns({"source", "N", "layers", "error"});
  auto check = [&w](const std::string& name, const Unitary& u) {
    ReckDecomposition d = reck_decompose(u);
    const double err =
        (reck_recompose(d, int(u.dim())).matrix() - u.matrix()).norm();
    w.row({name, std::to_string(u.dim()), std::to_string(d.layers.size()),
           fmt(err)});
  };
  for (int n = 2; n <= n_max; ++n) check("bell", bell_multiport(n));
  RandomStream rng(cfg.seed.value_or(1), "reck-haar");
  for (int t = 0; t < trials; ++t)
    check("haar", haar_random(2 + t % (n_max - 1), rng));
}

}  // namespace

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
      line.pop_back();
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line is not key=value: " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "experiment")
      cfg.experiment = value;
    else if (key == "seed")
      cfg.seed = std::stoull(value);
    else if (key == "out")
      cfg.out_path = value;
    else if (key == "format")
      cfg.format = value;
    else
      cfg.parameters[key] = value;
  }
  return cfg;
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& err) {
  using Runner = std::function<void(const ExperimentConfig&, Params&,
                                    TableWriter&)>;
  static const std::map<std::string, Runner> registry = {
      {"wstate-sweep", run_wstate_sweep},
      {"ghz4",
       [](const ExperimentConfig&, Params& p, TableWriter& w) {
         p.reject_unknown();
         write_coincidence(generate_ghz4(), w);
       }},
      {"double-singlet",
       [](const ExperimentConfig&, Params& p, TableWriter& w) {
         p.reject_unknown();
         write_coincidence(generate_double_singlet(), w);
       }},
      {"hom", run_hom},
      {"symmetric4-scan", run_symmetric4},
      {"filter", run_filter},
      {"cz-filter", run_cz_filter},
      {"filter-fidelity", run_filter_fidelity},
      {"rus", run_rus},
      {"teleport", run_teleport},
      {"timeresolve", run_timeresolve},
      {"dipole-correlation", run_dipole},
      {"infer-singlet", run_infer_singlet},
      {"reck-roundtrip", run_reck},
  };
  try {
    auto it = registry.find(cfg.experiment);
    if (it == registry.end())
      throw ConfigError("unknown experiment: " + cfg.experiment);
    if (cfg.format != "csv" && cfg.format != "jsonl")
      throw ConfigError("format must be csv or jsonl");
    std::ofstream file;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file) throw ConfigError("cannot write output: " + cfg.out_path);
    }
    std::ostream& os = cfg.out_path.empty() ? std::cout : file;
    TableWriter writer(os, cfg.format == "jsonl", cfg);
    Params params(cfg.parameters);
    it->second(cfg, params, writer);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace photonq
