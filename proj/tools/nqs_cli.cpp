// Command-line front end: ground-state runs, circuit simulation, tomography,
// entanglement reports, RBM-to-MPS conversion and exact diagonalization.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "nqs/config.hpp"
#include "nqs/dbm_circuit.hpp"
#include "nqs/entanglement.hpp"
#include "nqs/model_io.hpp"
#include "nqs/statevector.hpp"
#include "nqs/tensor.hpp"

namespace fs = std::filesystem;
using namespace nqs;

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool oracle = true;
};

std::uint64_t fnv1a(std::uint64_t h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string inputs_hash(const CommonFlags& flags, const std::vector<std::string>& extra_files) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, read_file_bytes(flags.config_path));
  for (const std::string& f : extra_files) h = fnv1a(h, read_file_bytes(f));
  if (flags.seed) h = fnv1a(h, std::to_string(*flags.seed));
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_summary(const CommonFlags& flags, const std::string& command,
                   const std::string& hash, const nlohmann::ordered_json& metrics, bool pass) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs_hash"] = hash;
  j["metrics"] = metrics;
  j["pass"] = pass;
  write_json_file((fs::path(flags.out_dir) / "summary.json").string(), j);
}

std::ofstream open_output(const CommonFlags& flags, const std::string& name) {
  const fs::path p = fs::path(flags.out_dir) / name;
  std::ofstream os(p);
  if (!os) throw ConfigError("cannot write output file: " + p.string());
  return os;
}

PauliStringHamiltonian hamiltonian_from_config(const RunConfig& cfg) {
  const std::string model = cfg.get_string("hamiltonian.model");
  const int n = static_cast<int>(cfg.get_int("hamiltonian.n"));
  const Boundary boundary = boundary_from_name(cfg.get_string("hamiltonian.boundary", "periodic"));
  if (model == "tfim") {
    return build_tfim(n, cfg.get_double("hamiltonian.J", 1.0), cfg.get_double("hamiltonian.B", 1.0),
                      boundary);
  }
  if (model == "afh") {
    return build_afh(n, cfg.get_double("hamiltonian.J", 1.0), boundary);
  }
  if (model == "j1j2") {
    return build_j1j2(n, cfg.get_double("hamiltonian.J1", 1.0),
                      cfg.get_double("hamiltonian.J2", 0.0), boundary);
  }
  throw ConfigError("unknown config value for key hamiltonian.model: " + model);
}

SpinConvention convention_key(const RunConfig& cfg, const std::string& key,
                              const std::string& fallback) {
  const std::string name = cfg.get_string(key, fallback);
  if (name == "zero-one") return SpinConvention::kZeroOne;
  if (name == "plus-minus-one") return SpinConvention::kPlusMinusOne;
  throw ConfigError("config key " + key + " must be zero-one or plus-minus-one");
}

std::uint64_t required_seed(const RunConfig& cfg, const std::string& key,
                            const CommonFlags& flags) {
  if (flags.seed) return *flags.seed;
  if (!cfg.has(key)) {
    throw ConfigError("missing config key: " + key + " (seeds are mandatory; or pass --seed)");
  }
  return static_cast<std::uint64_t>(cfg.get_int(key));
}

// Loads an RBM from [X.model] or builds the random-local instance described
// by X.n / X.window / X.per_window / X.scale / X.seed.
RbmState rbm_source(const RunConfig& cfg, const std::string& prefix, const CommonFlags& flags,
                    std::vector<std::string>& hash_files) {
  if (cfg.has(prefix + ".model")) {
    const std::string path = cfg.get_string(prefix + ".model");
    hash_files.push_back(path);
    const auto j = read_json_file(path);
    RbmState s = rbm_from_json(j);
    if (s.visible_domain() != SpinConvention::kZeroOne ||
        s.hidden_domain() != SpinConvention::kZeroOne) {
      return convert_convention(s, SpinConvention::kZeroOne, SpinConvention::kZeroOne).state;
    }
    return s;
  }
  const int n = static_cast<int>(cfg.get_int(prefix + ".n"));
  const int window = static_cast<int>(cfg.get_int(prefix + ".window"));
  const int per_window = static_cast<int>(cfg.get_int(prefix + ".per_window", 1));
  const double scale = cfg.get_double(prefix + ".scale", 0.5);
  const std::uint64_t seed = required_seed(cfg, prefix + ".seed", flags);
  return RbmState::random_local(n, window, per_window, scale, seed);
}

int cmd_gs(const RunConfig& cfg, const CommonFlags& flags) {
  cfg.restrict_keys({"model.family", "model.n_visible", "model.n_hidden", "model.visible_domain",
                     "model.hidden_domain", "model.init_scale", "model.init_seed",
                     "hamiltonian.model", "hamiltonian.n", "hamiltonian.J", "hamiltonian.B",
                     "hamiltonian.J1", "hamiltonian.J2", "hamiltonian.boundary",
                     "train.learning_rate", "train.sweeps", "train.samples_per_step",
                     "train.seed", "train.gradient_clip", "train.sector", "train.move",
                     "train.chains", "train.target_rel_error"});
  const std::string family = cfg.get_string("model.family");
  if (family != "rbm") {
    throw ConfigError("unknown config value for key model.family: " + family);
  }
  const PauliStringHamiltonian h = hamiltonian_from_config(cfg);
  const int n = h.n_sites();
  if (cfg.has("model.n_visible") && cfg.get_int("model.n_visible") != n) {
    throw ConfigError("model.n_visible disagrees with hamiltonian.n");
  }
  const int n_hidden = static_cast<int>(cfg.get_int("model.n_hidden"));

  TrainConfig train;
  train.learning_rate = cfg.get_double("train.learning_rate");
  train.sweeps = static_cast<int>(cfg.get_int("train.sweeps"));
  train.samples_per_step = static_cast<int>(cfg.get_int("train.samples_per_step", 0));
  train.seed = required_seed(cfg, "train.seed", flags);
  train.gradient_clip = cfg.get_optional_double("train.gradient_clip");
  if (const auto sector = cfg.get_optional_int("train.sector")) {
    train.sector = static_cast<int>(*sector);
  }
  const std::string move = cfg.get_string("train.move", "single-flip");
  if (move == "exchange") {
    train.move = ProposalMove::kExchange;
  } else if (move != "single-flip") {
    throw ConfigError("train.move must be single-flip or exchange");
  }
  train.n_chains = static_cast<int>(cfg.get_int("train.chains", 1));

  const std::uint64_t init_seed =
      cfg.has("model.init_seed") && !flags.seed
          ? static_cast<std::uint64_t>(cfg.get_int("model.init_seed"))
          : train.seed + 1;
  RbmState psi = RbmState::random(n, n_hidden, cfg.get_double("model.init_scale", 0.01),
                                  init_seed, convention_key(cfg, "model.hidden_domain", "zero-one"),
                                  convention_key(cfg, "model.visible_domain", "zero-one"));

  const TrainResult result = solve_ground_state(h, psi, train);
  {
    auto os = open_output(flags, "trace.csv");
    write_trace_csv(result.trace, os);
  }
  write_json_file((fs::path(flags.out_dir) / "model.json").string(), model_to_json(psi));

  nlohmann::ordered_json metrics;
  metrics["best_energy"] = result.best_energy;
  metrics["best_iter"] = result.best_iter;
  metrics["iterations"] = static_cast<int>(result.trace.size());
  bool pass = true;
  if (flags.oracle && n <= kMaxDenseSites) {
    const double exact = ground_state_exact(h).energy;
    const double rel = std::abs(result.best_energy - exact) / std::abs(exact);
    metrics["exact_energy"] = exact;
    metrics["rel_error"] = rel;
    pass = rel <= cfg.get_double("train.target_rel_error", 1e-2);
  }
  write_summary(flags, "gs", inputs_hash(flags, {}), metrics, pass);
  std::cout << "gs: best energy " << result.best_energy
            << (metrics.contains("rel_error")
                    ? " (rel err " + std::to_string(metrics["rel_error"].get<double>()) + ")"
                    : "")
            << "\n";
  return pass ? 0 : 1;
}

int cmd_circuit(const RunConfig& cfg, const CommonFlags& flags) {
  cfg.restrict_keys({"circuit.file", "circuit.n_qubits", "circuit.initial", "circuit.tolerance"});
  const std::string file = cfg.get_string("circuit.file");
  const int n = static_cast<int>(cfg.get_int("circuit.n_qubits"));
  const std::string initial = cfg.get_string("circuit.initial", std::string(n, '0'));
  const Circuit circuit = parse_circuit_file(file, n);

  DbmCircuitGraph graph = DbmCircuitGraph::init_graph(n, initial);
  for (const Gate& g : circuit.gates) graph.apply(g);

  Eigen::VectorXcd amps(Eigen::Index{1} << n);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    amps(static_cast<Eigen::Index>(idx)) =
        graph.exact_amplitude(SpinConfiguration::from_index(idx, n));
  }

  nlohmann::ordered_json metrics;
  metrics["gates"] = static_cast<int>(circuit.gates.size());
  metrics["hidden_units"] = graph.gate_hidden_count();
  metrics["ledger_abs"] = std::abs(graph.ledger());
  bool pass = true;
  Eigen::VectorXcd oracle;
  if (flags.oracle) {
    oracle = statevector_oracle(circuit, initial).amplitudes;
    // normalize both, align the global phase, compare against the peak
    Eigen::VectorXcd a = amps / amps.norm();
    Eigen::VectorXcd b = oracle / oracle.norm();
    const Complex overlap = b.dot(a);
    if (std::abs(overlap) > 0.0) a *= std::conj(overlap) / std::abs(overlap);
    const double dev = (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
    metrics["max_rel_deviation"] = dev;
    pass = dev <= cfg.get_double("circuit.tolerance", 1e-10);
  }

  auto os = open_output(flags, "amplitudes.csv");
  os << (flags.oracle ? "index,re,im,oracle_re,oracle_im\n" : "index,re,im\n");
  char buf[200];
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (flags.oracle) {
      std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g,%.17g\n",
                    static_cast<long long>(i), amps(i).real(), amps(i).imag(),
                    oracle(i).real(), oracle(i).imag());
    } else {
      std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g\n", static_cast<long long>(i),
                    amps(i).real(), amps(i).imag());
    }
    os << buf;
  }
  write_summary(flags, "circuit", inputs_hash(flags, {file}), metrics, pass);
  std::cout << "circuit: " << circuit.gates.size() << " gates"
            << (metrics.contains("max_rel_deviation")
                    ? ", max rel deviation " +
                          std::to_string(metrics["max_rel_deviation"].get<double>())
                    : "")
            << "\n";
  return pass ? 0 : 1;
}

DenseState w_state(int n) {
  DenseState s{Eigen::VectorXcd::Zero(Eigen::Index{1} << n), n};
  for (int q = 0; q < n; ++q) {
    s.amplitudes(Eigen::Index{1} << (n - 1 - q)) = 1.0 / std::sqrt(static_cast<double>(n));
  }
  return s;
}

DenseState bell_state() {
  DenseState s{Eigen::VectorXcd::Zero(4), 2};
  s.amplitudes(0) = 1.0 / std::sqrt(2.0);
  s.amplitudes(3) = 1.0 / std::sqrt(2.0);
  return s;
}

int cmd_tomo(const RunConfig& cfg, const CommonFlags& flags) {
  cfg.restrict_keys({"tomo.mode", "tomo.target", "tomo.records", "tomo.n_sites", "tomo.bases",
                     "tomo.fidelity_target", "tomo.trace_distance_target", "tomo.depolarize",
                     "tomo.divergence_target", "model.n_hidden", "model.n_env",
                     "model.init_scale", "model.init_seed", "train.learning_rate",
                     "train.sweeps", "train.seed"});
  const std::string mode = cfg.get_string("tomo.mode");
  if (mode != "pure" && mode != "mixed") throw ConfigError("tomo.mode must be pure or mixed");
  const std::string target_kind = cfg.get_string("tomo.target");

  TrainConfig train;
  train.learning_rate = cfg.get_double("train.learning_rate");
  train.sweeps = static_cast<int>(cfg.get_int("train.sweeps"));
  train.seed = required_seed(cfg, "train.seed", flags);
  const std::uint64_t init_seed =
      cfg.has("model.init_seed") && !flags.seed
          ? static_cast<std::uint64_t>(cfg.get_int("model.init_seed"))
          : train.seed + 1;
  const double init_scale = cfg.get_double("model.init_scale", 0.01);
  const int n_hidden = static_cast<int>(cfg.get_int("model.n_hidden"));

  std::vector<std::string> hash_files;
  std::vector<MeasurementRecord> records;
  std::optional<DenseState> pure_target;
  std::optional<Eigen::MatrixXcd> mixed_target;
  int n_sites = static_cast<int>(cfg.get_int("tomo.n_sites", 0));

  if (target_kind == "records") {
    const std::string path = cfg.get_string("tomo.records");
    hash_files.push_back(path);
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open records file: " + path);
    records = read_records_jsonl(is);
    if (records.empty()) throw ConfigError("records file is empty");
    n_sites = static_cast<int>(records.front().basis.size());
  } else {
    if (target_kind == "bell") {
      pure_target = bell_state();
    } else if (target_kind == "w") {
      if (n_sites < 2) throw ConfigError("tomo.n_sites must be >= 2 for the w target");
      pure_target = w_state(n_sites);
    } else if (target_kind == "maximally-mixed") {
      if (n_sites < 1) throw ConfigError("tomo.n_sites must be >= 1");
      mixed_target = Eigen::MatrixXcd::Identity(Eigen::Index{1} << n_sites,
                                                Eigen::Index{1} << n_sites) /
                     static_cast<double>(Eigen::Index{1} << n_sites);
    } else if (target_kind == "depolarized-bell") {
      const double p = cfg.get_double("tomo.depolarize", 0.3);
      const DenseState bell = bell_state();
      mixed_target = (1.0 - p) * (bell.amplitudes * bell.amplitudes.adjoint()) +
                     p * Eigen::MatrixXcd::Identity(4, 4) / 4.0;
    } else {
      throw ConfigError("unknown config value for key tomo.target: " + target_kind);
    }
    if (pure_target) n_sites = pure_target->n_sites;
    if (mixed_target && n_sites == 0) n_sites = 2;

    std::vector<std::string> bases;
    const std::string bases_spec = cfg.get_string("tomo.bases", "all");
    if (bases_spec == "all") {
      bases = all_pauli_bases(n_sites);
    } else {
      std::stringstream ss(bases_spec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) bases.push_back(item);
      }
    }
    records = pure_target ? exact_records(*pure_target, bases)
                          : exact_records(*mixed_target, bases);
  }

  nlohmann::ordered_json metrics;
  bool pass = true;
  TomoResult result;
  if (mode == "pure") {
    if (mixed_target) throw ConfigError("pure mode cannot fit a mixed target");
    PureTomoModel model = PureTomoModel::random(n_sites, n_hidden, init_scale, init_seed);
    result = tomo_pure(records, model, train, pure_target ? &*pure_target : nullptr);
    write_json_file((fs::path(flags.out_dir) / "model.json").string(), model_to_json(model));
    if (pure_target) {
      const double fid = fidelity(model.materialize(), *pure_target);
      metrics["fidelity"] = fid;
      pass = fid >= cfg.get_double("tomo.fidelity_target", 0.99);
    }
  } else {
    const int n_env = static_cast<int>(cfg.get_int("model.n_env"));
    PurifiedRbm model = PurifiedRbm::random(n_sites, n_hidden, n_env, init_scale, init_seed);
    result = tomo_mixed(records, model, train, mixed_target ? &*mixed_target : nullptr);
    write_json_file((fs::path(flags.out_dir) / "model.json").string(), model_to_json(model));
    if (mixed_target) {
      const double dist = trace_distance(model.density_matrix(), *mixed_target);
      metrics["trace_distance"] = dist;
      pass = dist <= cfg.get_double("tomo.trace_distance_target", 0.05);
    }
  }
  metrics["final_divergence"] = result.final_divergence;
  metrics["epochs"] = result.epochs_run;
  if (cfg.has("tomo.divergence_target")) {
    pass = pass && result.final_divergence <= cfg.get_double("tomo.divergence_target");
  }

  auto os = open_output(flags, "divergence.csv");
  os << (result.metric.empty() ? "epoch,divergence\n" : "epoch,divergence,metric\n");
  char buf[120];
  for (std::size_t k = 0; k < result.divergence.size(); ++k) {
    if (result.metric.size() == result.divergence.size()) {
      std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", k, result.divergence[k],
                    result.metric[k]);
    } else {
      std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", k, result.divergence[k]);
    }
    os << buf;
  }
  write_summary(flags, "tomo", inputs_hash(flags, hash_files), metrics, pass);
  std::cout << "tomo: final divergence " << result.final_divergence << "\n";
  return pass ? 0 : 1;
}

int cmd_entropy(const RunConfig& cfg, const CommonFlags& flags) {
  cfg.restrict_keys({"entropy.model", "entropy.n", "entropy.window", "entropy.per_window",
                     "entropy.scale", "entropy.seed", "entropy.cuts"});
  std::vector<std::string> hash_files;
  const RbmState s = rbm_source(cfg, "entropy", flags, hash_files);
  std::vector<int> cuts;
  if (cfg.get_string("entropy.cuts", "all") == "all") {
    for (int c = 1; c < s.n_visible(); ++c) cuts.push_back(c);
  } else {
    cuts = cfg.get_int_list("entropy.cuts");
  }
  const AreaLawReport report = arealaw_probe(s, cuts);
  {
    auto os = open_output(flags, "report.csv");
    write_arealaw_csv(report, os);
  }
  double max_s2 = 0.0;
  for (const AreaLawRow& row : report.rows) max_s2 = std::max(max_s2, row.s2);
  nlohmann::ordered_json metrics;
  metrics["cuts"] = static_cast<int>(report.rows.size());
  metrics["max_s2"] = max_s2;
  metrics["all_within_bound"] = report.all_within_bound;
  write_summary(flags, "entropy", inputs_hash(flags, hash_files), metrics,
                report.all_within_bound);
  std::cout << "entropy: max S2 " << max_s2 << " over " << report.rows.size() << " cuts\n";
  return report.all_within_bound ? 0 : 1;
}

int cmd_convert(const RunConfig& cfg, const CommonFlags& flags) {
  cfg.restrict_keys({"convert.model", "convert.n", "convert.window", "convert.per_window",
                     "convert.scale", "convert.seed", "convert.svd_cutoff", "convert.max_bond",
                     "convert.tolerance"});
  std::vector<std::string> hash_files;
  const RbmState s = rbm_source(cfg, "convert", flags, hash_files);
  MpsOptions opt;
  opt.svd_cutoff = cfg.get_double("convert.svd_cutoff", 1e-12);
  opt.max_bond = static_cast<int>(cfg.get_int("convert.max_bond", 256));
  const RbmMpsConversion conv = rbm_to_mps(s, opt);
  write_json_file((fs::path(flags.out_dir) / "mps.json").string(),
                  mps_to_json(conv.mps, conv.log_scale));

  nlohmann::ordered_json metrics;
  metrics["bond_dims"] = conv.bond_dims;
  int max_bond = 1;
  for (int d : conv.bond_dims) max_bond = std::max(max_bond, d);
  metrics["max_bond"] = max_bond;
  bool pass = true;
  if (flags.oracle && s.n_visible() <= 12) {
    // projective equality: all amplitude ratios agree
    const DenseState dense = materialize(s);
    double max_dev = 0.0;
    const double scale = dense.amplitudes.cwiseAbs().maxCoeff();
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << s.n_visible()); ++idx) {
      const auto v = SpinConfiguration::from_index(idx, s.n_visible());
      const Complex rebuilt = std::exp(conv.log_scale) * mps_amplitude(conv.mps, v);
      max_dev = std::max(max_dev,
                         std::abs(rebuilt - dense.amplitudes(static_cast<Eigen::Index>(idx))) /
                             scale);
    }
    metrics["max_rel_deviation"] = max_dev;
    pass = max_dev <= cfg.get_double("convert.tolerance", 1e-10);
  }
  write_summary(flags, "convert", inputs_hash(flags, hash_files), metrics, pass);
  std::cout << "convert: max bond " << max_bond << "\n";
  return pass ? 0 : 1;
}

int cmd_ed(const RunConfig& cfg, const CommonFlags& flags) {
  cfg.restrict_keys({"hamiltonian.model", "hamiltonian.n", "hamiltonian.J", "hamiltonian.B",
                     "hamiltonian.J1", "hamiltonian.J2", "hamiltonian.boundary",
                     "ed.export_state"});
  const PauliStringHamiltonian h = hamiltonian_from_config(cfg);
  const GroundStateResult gs = ground_state_exact(h);
  if (cfg.get_bool("ed.export_state", true)) {
    auto os = open_output(flags, "state.csv");
    write_csv(gs.state, os);
  }
  nlohmann::ordered_json metrics;
  metrics["energy"] = gs.energy;
  metrics["n_sites"] = h.n_sites();
  write_summary(flags, "ed", inputs_hash(flags, {}), metrics, true);
  std::cout << "ed: ground energy " << gs.energy << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neural-network quantum states: training, circuits, tomography"};
  app.require_subcommand(1);

  CommonFlags flags;
  long long seed_flag = -1;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config_path, "run configuration file")->required();
    sub->add_option("--out", flags.out_dir, "output directory")->required();
    sub->add_option("--seed", seed_flag, "override the configured seed");
    sub->add_flag("--oracle,!--no-oracle", flags.oracle, "compare against the exact oracle");
  };

  CLI::App* gs = app.add_subcommand("gs", "variational ground-state search");
  CLI::App* circuit = app.add_subcommand("circuit", "simulate a circuit by DBM graph growth");
  CLI::App* tomo = app.add_subcommand("tomo", "state tomography by KL minimization");
  CLI::App* entropy = app.add_subcommand("entropy", "Renyi entropy area-law probe");
  CLI::App* convert = app.add_subcommand("convert", "RBM to MPS conversion");
  CLI::App* ed = app.add_subcommand("ed", "exact diagonalization");
  for (CLI::App* sub : {gs, circuit, tomo, entropy, convert, ed}) add_common(sub);

  CLI11_PARSE(app, argc, argv);
  if (seed_flag >= 0) flags.seed = static_cast<std::uint64_t>(seed_flag);

  try {
    std::filesystem::create_directories(flags.out_dir);
    const RunConfig cfg = RunConfig::parse_file(flags.config_path);
    if (gs->parsed()) return cmd_gs(cfg, flags);
    if (circuit->parsed()) return cmd_circuit(cfg, flags);
    if (tomo->parsed()) return cmd_tomo(cfg, flags);
    if (entropy->parsed()) return cmd_entropy(cfg, flags);
    if (convert->parsed()) return cmd_convert(cfg, flags);
    if (ed->parsed()) return cmd_ed(cfg, flags);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
