// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime budgets are pinned in code.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nqs/dbm_circuit.hpp"
#include "nqs/entanglement.hpp"
#include "nqs/mps.hpp"
#include "nqs/statevector.hpp"
#include "nqs/tomography.hpp"
#include "nqs/train.hpp"
#include "oracles.hpp"

using namespace nqs;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  bool pass = true;
  std::ostringstream detail;
  double budget_seconds = 0.0;
};

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// --- 1. amplitude oracles ---------------------------------------------------
void amplitude_oracles(Criterion& c) {
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t seed = 11000 + static_cast<std::uint64_t>(t);
    const int n = 2 + t % 3;
    const auto hd = t % 2 == 0 ? SpinConvention::kZeroOne : SpinConvention::kPlusMinusOne;
    const auto vd = t % 5 == 0 ? SpinConvention::kPlusMinusOne : SpinConvention::kZeroOne;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      const auto v = SpinConfiguration::from_index(idx, n);
      Complex got, want;
      if (t % 3 == 0) {
        const RbmState s = RbmState::random(n, 1 + t % 6, 0.6, seed, hd, vd);
        got = s.log_amplitude(v).value();
        want = test::rbm_enumeration(s, v);
      } else if (t % 3 == 1) {
        const BmState s = BmState::random(n, 1 + t % 6, 0.5, seed, hd, vd);
        got = s.log_amplitude(v).value();
        want = test::bm_enumeration(s, v);
      } else {
        const DbmState s = DbmState::random(n, 1 + t % 3, 1 + (t / 3) % 3, 0.5, seed, hd, vd);
        got = s.log_amplitude(v).value();
        want = test::dbm_enumeration(s, v);
      }
      worst = std::max(worst, rel_err(got, want));
    }
  }
  c.pass = worst <= 1e-10;
  c.detail << "max rel err " << worst << " over 100 instances";
}

// --- 2. gradient checks -----------------------------------------------------
void gradient_checks(Criterion& c) {
  double worst_logderiv = 0.0;
  for (int t = 0; t < 25; ++t) {
    const auto hd = t % 2 == 0 ? SpinConvention::kZeroOne : SpinConvention::kPlusMinusOne;
    RbmState s = RbmState::random(3, 2 + t % 3, 0.5, 2200 + static_cast<std::uint64_t>(t), hd);
    const auto v = SpinConfiguration::from_index(static_cast<std::uint64_t>(t) % 8, 3);
    const Eigen::VectorXcd grad = s.log_derivatives(v);
    const Eigen::VectorXcd params = s.parameters();
    const double eps = 1e-6;
    for (int k = 0; k < s.n_parameters(); ++k) {
      for (int part = 0; part < 2; ++part) {
        const Complex delta = part == 0 ? Complex(eps, 0) : Complex(0, eps);
        Eigen::VectorXcd up = params, dn = params;
        up(k) += delta;
        dn(k) -= delta;
        s.set_parameters(up);
        const Complex lu = s.log_amplitude(v).log;
        s.set_parameters(dn);
        const Complex ld = s.log_amplitude(v).log;
        s.set_parameters(params);
        const Complex fd = (lu - ld) / (2.0 * eps);
        const Complex expected = part == 0 ? grad(k) : Complex(0, 1) * grad(k);
        worst_logderiv = std::max(
            worst_logderiv, std::abs(fd - expected) / std::max(1.0, std::abs(expected)));
      }
    }
  }

  double worst_energy_grad = 0.0;
  for (int t = 0; t < 25; ++t) {
    const int n = 3 + t % 2;
    const auto h = t % 2 == 0 ? build_tfim(n, 1.0, 1.0, Boundary::kPeriodic)
                              : build_afh(n, 1.0, Boundary::kOpen);
    RbmState s = RbmState::random(n, n, 0.4, 3300 + static_cast<std::uint64_t>(t),
                                  SpinConvention::kPlusMinusOne, SpinConvention::kPlusMinusOne);
    const GradientEstimate g = full_sum_gradient(s, h);
    const Eigen::VectorXcd params = s.parameters();
    const double eps = 1e-5;
    for (int k = 0; k < s.n_parameters(); k += 4) {
      for (int part = 0; part < 2; ++part) {
        const Complex delta = part == 0 ? Complex(eps, 0) : Complex(0, eps);
        Eigen::VectorXcd up = params, dn = params;
        up(k) += delta;
        dn(k) -= delta;
        s.set_parameters(up);
        const double eu = full_sum_energy(s, h).mean.real();
        s.set_parameters(dn);
        const double ed = full_sum_energy(s, h).mean.real();
        s.set_parameters(params);
        const double fd = (eu - ed) / (2.0 * eps);
        const double expected = part == 0 ? g.gradient(k).real() : g.gradient(k).imag();
        worst_energy_grad = std::max(worst_energy_grad,
                                     std::abs(fd - expected) / std::max(1.0, std::abs(expected)));
      }
    }
  }
  c.pass = worst_logderiv <= 1e-5 && worst_energy_grad <= 1e-4;
  c.detail << "log-deriv max rel " << worst_logderiv << ", energy-grad max rel "
           << worst_energy_grad;
}

// --- 3. ground-state surrogates ----------------------------------------------
double train_relative_error(const PauliStringHamiltonian& h, int n_hidden, int sweeps,
                            double eta, std::optional<int> sector, std::uint64_t seed) {
  RbmState psi = RbmState::random(h.n_sites(), n_hidden, 0.01, seed,
                                  SpinConvention::kPlusMinusOne, SpinConvention::kPlusMinusOne);
  TrainConfig cfg;
  cfg.learning_rate = eta;
  cfg.sweeps = sweeps;
  cfg.samples_per_step = 0;  // exact full-sum gradients at desk scale
  cfg.seed = seed;
  cfg.sector = sector;
  const TrainResult result = solve_ground_state(h, psi, cfg);
  const double exact = ground_state_exact(h).energy;
  return std::abs(result.best_energy - exact) / std::abs(exact);
}

void ground_states(Criterion& c) {
  const double tfim = train_relative_error(build_tfim(10, 1.0, 1.0, Boundary::kPeriodic), 20,
                                           1500, 0.1, std::nullopt, 12);
  const double afh = train_relative_error(build_afh(10, 1.0, Boundary::kPeriodic), 20, 2000,
                                          0.1, 5, 12);
  const double j1j2 = train_relative_error(build_j1j2(8, 1.0, 0.5, Boundary::kPeriodic), 16,
                                           1500, 0.1, 4, 12);
  c.pass = tfim <= 1e-3 && afh <= 5e-3 && j1j2 <= 5e-3;
  c.detail << "rel err tfim(10) " << tfim << " (<=1e-3), afh(10) " << afh
           << " (<=5e-3), j1j2(8) " << j1j2 << " (<=5e-3)";
}

// --- 4. circuit simulation ----------------------------------------------------
void circuits(Criterion& c) {
  double worst_identity = 0.0;
  const double r = 1.0 / std::sqrt(2.0);
  for (int v = 0; v <= 1; ++v) {
    for (int vp = 0; vp <= 1; ++vp) {
      const double want = (v == 1 && vp == 1) ? -r : r;
      worst_identity = std::max(worst_identity, std::abs(hadamard_transfer(v, vp) - want));
      worst_identity = std::max(worst_identity, std::abs(cz_transfer(v, vp) -
                                                         Complex(v == 1 && vp == 1 ? -r : r, 0)));
    }
  }
  for (double theta : {0.17, 1.0, kPi / 2, kPi, 3.9, 5.8}) {
    worst_identity = std::max(worst_identity, std::abs(zrot_transfer(theta, 0, 0) - 1.0));
    worst_identity =
        std::max(worst_identity,
                 std::abs(zrot_transfer(theta, 1, 1) - std::exp(Complex(0, theta))));
    worst_identity = std::max(worst_identity, std::abs(zrot_transfer(theta, 0, 1)));
  }

  double worst_dev = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Circuit circuit = random_circuit(6, 10, 5000 + static_cast<std::uint64_t>(t));
    DbmCircuitGraph graph = DbmCircuitGraph::init_graph(6, "000000");
    for (const Gate& g : circuit.gates) graph.apply(g);
    const DenseState oracle = statevector_oracle(circuit, "000000");
    Eigen::VectorXcd amps(64);
    for (std::uint64_t idx = 0; idx < 64; ++idx) {
      amps(static_cast<Eigen::Index>(idx)) =
          graph.exact_amplitude(SpinConfiguration::from_index(idx, 6));
    }
    Eigen::VectorXcd a = amps / amps.norm();
    Eigen::VectorXcd b = oracle.amplitudes / oracle.amplitudes.norm();
    const Complex overlap = b.dot(a);
    if (std::abs(overlap) > 0.0) a *= std::conj(overlap) / std::abs(overlap);
    worst_dev = std::max(worst_dev, (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff());
  }
  c.pass = worst_identity <= 1e-12 && worst_dev <= 1e-10;
  c.detail << "gate identities " << worst_identity << " (<=1e-12), amplitudes " << worst_dev
           << " (<=1e-10) over 20 circuits";
}

// --- 5. tensor bridge ---------------------------------------------------------
void tensor_bridge(Criterion& c) {
  double worst_dev = 0.0;
  bool schmidt_ok = true;
  for (int t = 0; t < 50; ++t) {
    const int window = 1 + t % 2;
    const RbmState s =
        RbmState::random_local(6, window, 1, 0.6, 6000 + static_cast<std::uint64_t>(t));
    const RbmMpsConversion conv = rbm_to_mps(s);
    const DenseState dense = materialize(s);
    const double scale = dense.amplitudes.cwiseAbs().maxCoeff();
    for (std::uint64_t idx = 0; idx < 64; ++idx) {
      const auto v = SpinConfiguration::from_index(idx, 6);
      const Complex rebuilt = std::exp(conv.log_scale) * mps_amplitude(conv.mps, v);
      worst_dev = std::max(worst_dev,
                           std::abs(rebuilt - dense.amplitudes(static_cast<Eigen::Index>(idx))) /
                               scale);
    }
    for (int cut = 1; cut < 6; ++cut) {
      const Bipartition part = Bipartition::prefix(cut, 6);
      const int crossings = crossing_count(s, part);
      Eigen::MatrixXcd m(1 << cut, 1 << (6 - cut));
      for (std::uint64_t idx = 0; idx < 64; ++idx) {
        m(static_cast<Eigen::Index>(idx >> (6 - cut)),
          static_cast<Eigen::Index>(idx & ((1u << (6 - cut)) - 1))) =
            dense.amplitudes(static_cast<Eigen::Index>(idx));
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      int rank = 0;
      for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        if (svd.singularValues()(k) > 1e-8 * svd.singularValues()(0)) ++rank;
      }
      if (rank > (1 << crossings)) schmidt_ok = false;
      if (conv.bond_dims[static_cast<std::size_t>(cut - 1)] > (1 << crossings)) {
        schmidt_ok = false;
      }
    }
  }
  c.pass = worst_dev <= 1e-10 && schmidt_ok;
  c.detail << "max projective deviation " << worst_dev
           << " (<=1e-10) over 50 RBMs, Schmidt bound " << (schmidt_ok ? "held" : "VIOLATED");
}

// --- 6. tomography ------------------------------------------------------------
void tomography(Criterion& c) {
  DenseState bell{Eigen::VectorXcd::Zero(4), 2};
  bell.amplitudes(0) = bell.amplitudes(3) = 1.0 / std::sqrt(2.0);
  PureTomoModel bell_model = PureTomoModel::random(2, 4, 0.01, 3);
  TrainConfig bell_cfg;
  bell_cfg.learning_rate = 0.5;
  bell_cfg.sweeps = 12000;
  bell_cfg.seed = 1;
  tomo_pure(exact_records(bell, {"ZZ", "XX", "YY"}), bell_model, bell_cfg);
  const double bell_fid = fidelity(bell_model.materialize(), bell);

  DenseState w{Eigen::VectorXcd::Zero(16), 4};
  for (int q = 0; q < 4; ++q) w.amplitudes(Eigen::Index{1} << (3 - q)) = 0.5;
  PureTomoModel w_model = PureTomoModel::random(4, 8, 0.01, 3);
  TrainConfig w_cfg;
  w_cfg.learning_rate = 0.05;
  w_cfg.sweeps = 15000;
  w_cfg.seed = 1;
  tomo_pure(exact_records(w, all_pauli_bases(4)), w_model, w_cfg);
  const double w_fid = fidelity(w_model.materialize(), w);

  const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  PurifiedRbm mixed_model = PurifiedRbm::random(1, 2, 1, 0.05, 7);
  TrainConfig mixed_cfg;
  mixed_cfg.learning_rate = 0.2;
  mixed_cfg.sweeps = 4000;
  mixed_cfg.seed = 1;
  tomo_mixed(exact_records(mixed, {"Z", "X", "Y"}), mixed_model, mixed_cfg);
  const double dist = trace_distance(mixed_model.density_matrix(), mixed);

  c.pass = bell_fid >= 0.999 && w_fid >= 0.99 && dist <= 0.05;
  c.detail << "bell fidelity " << bell_fid << " (>=0.999), w4 fidelity " << w_fid
           << " (>=0.99), mixed trace distance " << dist << " (<=0.05)";
}

// --- 7. entanglement ----------------------------------------------------------
void entanglement(Criterion& c) {
  bool bound_ok = true;
  double worst_sym = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t seed = 7000 + static_cast<std::uint64_t>(t);
    const int n = 4 + t % 7;  // 4..10
    RbmState s = t % 5 == 4 ? RbmState::random(std::min(n, 8), std::min(n, 8), 0.5, seed)
                            : RbmState::random_local(n, 1 + t % 3, 1, 0.6, seed);
    const int sites = s.n_visible();
    const DenseState dense = materialize(s);
    for (int cut = 1; cut < sites; ++cut) {
      // evaluate on the smaller side; spectra coincide for pure states
      Bipartition part;
      part.n_sites = sites;
      if (cut <= sites - cut) {
        for (int i = 0; i < cut; ++i) part.region_a.push_back(i);
      } else {
        for (int i = cut; i < sites; ++i) part.region_a.push_back(i);
      }
      const int crossings = crossing_count(s, Bipartition::prefix(cut, sites));
      const double s2 = renyi_entropy(reduced_density(dense, part), 2.0);
      if (s2 > crossings * std::log(2.0) + 1e-9) bound_ok = false;
    }
    // S_alpha(A) = S_alpha(A^c) at the central cut
    Bipartition a = Bipartition::prefix(sites / 2, sites);
    Bipartition ac;
    ac.n_sites = sites;
    for (int i = sites / 2; i < sites; ++i) ac.region_a.push_back(i);
    for (double alpha : {0.5, 1.0, 2.0}) {
      worst_sym = std::max(worst_sym,
                           std::abs(renyi_entropy(reduced_density(dense, a), alpha) -
                                    renyi_entropy(reduced_density(dense, ac), alpha)));
    }
  }
  c.pass = bound_ok && worst_sym <= 1e-10;
  c.detail << "Schmidt bound " << (bound_ok ? "held" : "VIOLATED")
           << " on all cuts of 100 RBMs, complement symmetry max dev " << worst_sym;
}

// --- 8. CLI determinism ---------------------------------------------------------
void write_text(const fs::path& p, const std::string& text) {
  std::ofstream os(p);
  os << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

bool run_twice_identical(const std::string& cli, const std::string& sub, const fs::path& cfg,
                         const fs::path& dir, std::string& note) {
  const fs::path a = dir / (sub + "_a");
  const fs::path b = dir / (sub + "_b");
  for (const fs::path& out : {a, b}) {
    const std::string cmd =
        cli + " " + sub + " --config " + cfg.string() + " --out " + out.string() +
        " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      note += sub + ": nonzero exit; ";
      return false;
    }
  }
  bool same = true;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path other = b / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
      note += sub + ": " + entry.path().filename().string() + " differs; ";
      same = false;
    }
  }
  return same;
}

void determinism(Criterion& c) {
  const char* cli_env = std::getenv("NQS_CLI");
  const std::string cli = cli_env != nullptr ? cli_env : NQS_CLI_PATH;
  const fs::path dir = fs::temp_directory_path() / "nqs_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);

  write_text(dir / "gs.toml", R"([model]
family = "rbm"
n_hidden = 12
init_scale = 0.01
visible_domain = "plus-minus-one"
hidden_domain = "plus-minus-one"
[hamiltonian]
model = "tfim"
n = 6
J = 1.0
B = 1.0
boundary = "periodic"
[train]
learning_rate = 0.1
sweeps = 300
samples_per_step = 0
seed = 7
target_rel_error = 0.01
)");
  write_text(dir / "c.txt", "h 0\nz 1 0.7\ncz 0 1\nh 2\ncz 2 3 0.9\nh 4\ncz 3 4\nz 0 2.1\n");
  write_text(dir / "circuit.toml",
             "[circuit]\nfile = \"" + (dir / "c.txt").string() +
                 "\"\nn_qubits = 5\ninitial = \"00+0-\"\n");
  write_text(dir / "tomo.toml", R"([tomo]
mode = "pure"
target = "bell"
bases = "ZZ,XX,YY"
fidelity_target = 0.99
[model]
n_hidden = 4
init_scale = 0.01
[train]
learning_rate = 0.5
sweeps = 4000
seed = 3
)");
  write_text(dir / "entropy.toml", R"([entropy]
n = 6
window = 2
per_window = 1
scale = 0.5
seed = 5
cuts = all
)");
  write_text(dir / "convert.toml", R"([convert]
n = 6
window = 2
per_window = 1
scale = 0.5
seed = 5
)");
  write_text(dir / "ed.toml", R"([hamiltonian]
model = "afh"
n = 6
J = 1.0
boundary = "periodic"
)");

  std::string note;
  bool all = true;
  all &= run_twice_identical(cli, "gs", dir / "gs.toml", dir, note);
  all &= run_twice_identical(cli, "circuit", dir / "circuit.toml", dir, note);
  all &= run_twice_identical(cli, "tomo", dir / "tomo.toml", dir, note);
  all &= run_twice_identical(cli, "entropy", dir / "entropy.toml", dir, note);
  all &= run_twice_identical(cli, "convert", dir / "convert.toml", dir, note);
  all &= run_twice_identical(cli, "ed", dir / "ed.toml", dir, note);
  c.pass = all;
  c.detail << (all ? "all six commands byte-identical on rerun" : note);
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*fn)(Criterion&);
    double budget;
  };
  const Entry entries[] = {
      {"1 amplitude oracles", amplitude_oracles, 10.0},
      {"2 gradient checks", gradient_checks, 30.0},
      {"3 ground-state training", ground_states, 600.0},
      {"4 circuit simulation", circuits, 60.0},
      {"5 tensor bridge", tensor_bridge, 60.0},
      {"6 tomography", tomography, 300.0},
      {"7 entanglement", entanglement, 120.0},
      {"8 determinism", determinism, 600.0},
  };
  bool all_pass = true;
  for (const Entry& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.fn(c);
    } catch (const std::exception& ex) {
      c.pass = false;
      c.detail << "exception: " << ex.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > e.budget) {
      c.pass = false;
      c.detail << " [over budget " << e.budget << "s]";
    }
    all_pass &= c.pass;
    std::printf("criterion %-26s %s  (%.1fs)  %s\n", e.name, c.pass ? "PASS" : "FAIL", seconds,
                c.detail.str().c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
