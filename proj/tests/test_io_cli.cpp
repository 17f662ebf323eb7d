#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nqs/config.hpp"
#include "nqs/dense.hpp"
#include "nqs/model_io.hpp"

using namespace nqs;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("nqs_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(NQS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream os(p);
  os << text;
}

}  // namespace

TEST_CASE("rbm json round trip") {
  const RbmState s = RbmState::random(3, 2, 0.5, 42, SpinConvention::kPlusMinusOne);
  const auto j = model_to_json(s);
  CHECK(json_family(j) == "rbm");
  const RbmState back = rbm_from_json(j);
  CHECK(back.hidden_domain() == SpinConvention::kPlusMinusOne);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    const auto v = SpinConfiguration::from_index(idx, 3);
    CHECK(std::abs(s.log_amplitude(v).value() - back.log_amplitude(v).value()) < 1e-14);
  }
}

TEST_CASE("bm and dbm json round trips") {
  const BmState b = BmState::random(2, 3, 0.4, 7);
  const BmState b2 = bm_from_json(model_to_json(b));
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const auto v = SpinConfiguration::from_index(idx, 2);
    CHECK(std::abs(b.log_amplitude(v).value() - b2.log_amplitude(v).value()) < 1e-12);
  }

  const DbmState d = DbmState::random(2, 2, 2, 0.4, 8);
  const DbmState d2 = dbm_from_json(model_to_json(d));
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const auto v = SpinConfiguration::from_index(idx, 2);
    CHECK(std::abs(d.log_amplitude(v).value() - d2.log_amplitude(v).value()) < 1e-12);
  }
}

TEST_CASE("network parameter validation") {
  NetworkParameters p;
  p.family = "rbm";
  p.n_visible = 2;
  p.n_hidden = 1;
  p.biases["v0"] = Complex(1, 0);
  p.biases["v5"] = Complex(1, 0);  // out of range
  CHECK_THROWS_AS(p.validate(), ShapeError);

  NetworkParameters q;
  q.family = "rbm";
  q.n_visible = 2;
  q.n_hidden = 2;
  q.weights.emplace_back("v0", "v1", Complex(1, 0));  // intra-layer edge in an rbm
  CHECK_THROWS_AS(q.validate(), ShapeError);

  NetworkParameters dup;
  dup.family = "bm";
  dup.n_visible = 2;
  dup.n_hidden = 1;
  dup.weights.emplace_back("v0", "h0", Complex(1, 0));
  dup.weights.emplace_back("h0", "v0", Complex(2, 0));
  CHECK_THROWS_AS(dup.validate(), ShapeError);

  NetworkParameters vg;
  vg.family = "dbm";
  vg.n_visible = 2;
  vg.n_hidden = 1;
  vg.n_deep = 1;
  vg.weights.emplace_back("v0", "g0", Complex(1, 0));  // v-g edges are forbidden
  CHECK_THROWS_AS(vg.validate(), ShapeError);

  NetworkParameters bad;
  bad.family = "boltzmann";
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("ffn, purified and pure-pair json round trips") {
  std::vector<FfnLayer> layers;
  Eigen::MatrixXcd w(2, 2);
  w << Complex(0.1, 0.2), Complex(-0.3, 0.1), Complex(0.5, 0), Complex(0, -0.7);
  Eigen::VectorXcd bias(2);
  bias << Complex(0.4, -0.1), Complex(0.2, 0.3);
  layers.push_back({w, bias, {Activation::kTanh}});
  Eigen::MatrixXcd w2(2, 1);
  w2 << Complex(1, 0), Complex(0, 1);
  Eigen::VectorXcd b2(1);
  b2 << Complex(0, 0);
  layers.push_back({w2, b2, {Activation::kLogistic}});
  const FeedForwardNet net{std::move(layers)};
  const FeedForwardNet net2 = ffn_from_json(model_to_json(net));
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const auto v = SpinConfiguration::from_index(idx, 2);
    CHECK(std::abs(ffn_amplitude(net, v) - ffn_amplitude(net2, v)) < 1e-14);
  }

  const PurifiedRbm p = PurifiedRbm::random(2, 2, 1, 0.4, 9);
  const PurifiedRbm p2 = purified_from_json(model_to_json(p));
  CHECK((p.parameters() - p2.parameters()).cwiseAbs().maxCoeff() < 1e-15);

  const PureTomoModel m = PureTomoModel::random(2, 3, 0.4, 10);
  const PureTomoModel m2 = pure_pair_from_json(model_to_json(m));
  CHECK((m.materialize().amplitudes - m2.materialize().amplitudes).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("mps json round trip") {
  const RbmState s = RbmState::random_local(5, 2, 1, 0.5, 11);
  const RbmMpsConversion conv = rbm_to_mps(s);
  Complex scale;
  const MpsState back = mps_from_json(mps_to_json(conv.mps, conv.log_scale), &scale);
  CHECK(std::abs(scale - conv.log_scale) < 1e-15);
  for (std::uint64_t idx = 0; idx < 32; ++idx) {
    const auto v = SpinConfiguration::from_index(idx, 5);
    CHECK(std::abs(mps_amplitude(back, v) - mps_amplitude(conv.mps, v)) < 1e-13);
  }
}

TEST_CASE("run config parsing") {
  std::istringstream text(R"(
# a comment
[model]
family = "rbm"
n_hidden = 20
init_scale = 0.01
[train]
learning_rate = 0.1
sector = -1
use_thing = true
cuts = 1,2,3
)");
  const RunConfig cfg = RunConfig::parse(text);
  CHECK(cfg.get_string("model.family") == "rbm");
  CHECK(cfg.get_int("model.n_hidden") == 20);
  CHECK(cfg.get_double("model.init_scale") == doctest::Approx(0.01));
  CHECK(cfg.get_double("train.learning_rate") == doctest::Approx(0.1));
  CHECK(cfg.get_int("train.sector") == -1);
  CHECK(cfg.get_bool("train.use_thing", false));
  CHECK(cfg.get_int_list("train.cuts") == std::vector<int>{1, 2, 3});
  CHECK(cfg.get_int("train.missing", 7) == 7);
  CHECK_THROWS_AS(cfg.get_string("train.missing"), ConfigError);
  CHECK_THROWS_AS(cfg.get_int("model.family"), ConfigError);
  CHECK_THROWS_AS(cfg.restrict_keys({"model.family"}), ConfigError);

  std::istringstream bad("[model\nx = 1\n");
  CHECK_THROWS_AS(RunConfig::parse(bad), ConfigError);
  std::istringstream dup("a = 1\na = 2\n");
  CHECK_THROWS_AS(RunConfig::parse(dup), ConfigError);
}

TEST_CASE("cli: ed and gs round trip with determinism") {
  const fs::path dir = fresh_dir("gs");
  write_text(dir / "run.toml", R"(
[model]
family = "rbm"
n_hidden = 8
init_scale = 0.01
visible_domain = "plus-minus-one"
hidden_domain = "plus-minus-one"
[hamiltonian]
model = "tfim"
n = 4
J = 1.0
B = 1.0
boundary = "periodic"
[train]
learning_rate = 0.1
sweeps = 150
samples_per_step = 0
seed = 7
target_rel_error = 0.01
)");
  const std::string base = "gs --config " + (dir / "run.toml").string();
  CHECK(run_cli(base + " --out " + (dir / "a").string()) == 0);
  CHECK(run_cli(base + " --out " + (dir / "b").string()) == 0);
  for (const std::string f : {"trace.csv", "model.json", "summary.json"}) {
    CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
  }
  const auto summary = read_json_file((dir / "a" / "summary.json").string());
  CHECK(summary.at("pass").get<bool>());
  CHECK(summary.at("metrics").at("rel_error").get<double>() < 0.01);

  // ed on the same chain agrees with the summary's exact energy
  write_text(dir / "ed.toml", R"(
[hamiltonian]
model = "tfim"
n = 4
J = 1.0
B = 1.0
boundary = "periodic"
)");
  CHECK(run_cli("ed --config " + (dir / "ed.toml").string() + " --out " +
                (dir / "ed").string()) == 0);
  const auto ed = read_json_file((dir / "ed" / "summary.json").string());
  CHECK(ed.at("metrics").at("energy").get<double>() ==
        doctest::Approx(summary.at("metrics").at("exact_energy").get<double>()));
}

TEST_CASE("cli: invalid model family exits 2 naming the key") {
  const fs::path dir = fresh_dir("badfam");
  write_text(dir / "run.toml", R"(
[model]
family = "boltzmann"
n_hidden = 4
[hamiltonian]
model = "tfim"
n = 4
[train]
learning_rate = 0.1
sweeps = 5
seed = 1
)");
  CHECK(run_cli("gs --config " + (dir / "run.toml").string() + " --out " +
                (dir / "out").string()) == 2);
}

TEST_CASE("cli: unknown config key exits 2") {
  const fs::path dir = fresh_dir("badkey");
  write_text(dir / "run.toml", R"(
[hamiltonian]
model = "tfim"
n = 4
strength = 2.0
)");
  CHECK(run_cli("ed --config " + (dir / "run.toml").string() + " --out " +
                (dir / "out").string()) == 2);
}

TEST_CASE("cli: circuit command, oracle comparison, malformed line exit") {
  const fs::path dir = fresh_dir("circuit");
  write_text(dir / "c.txt", "h 0\nz 1 0.7\ncz 0 1\nh 1\ncz 1 2 0.4\n");
  write_text(dir / "run.toml",
             "[circuit]\nfile = \"" + (dir / "c.txt").string() +
                 "\"\nn_qubits = 3\ninitial = \"00+\"\n");
  CHECK(run_cli("circuit --config " + (dir / "run.toml").string() + " --out " +
                (dir / "a").string()) == 0);
  CHECK(run_cli("circuit --config " + (dir / "run.toml").string() + " --out " +
                (dir / "b").string()) == 0);
  CHECK(slurp(dir / "a" / "amplitudes.csv") == slurp(dir / "b" / "amplitudes.csv"));
  const auto summary = read_json_file((dir / "a" / "summary.json").string());
  CHECK(summary.at("pass").get<bool>());
  CHECK(summary.at("metrics").at("max_rel_deviation").get<double>() <= 1e-10);

  write_text(dir / "bad.txt", "h 0\nzz 1 0.4\n");
  write_text(dir / "bad.toml",
             "[circuit]\nfile = \"" + (dir / "bad.txt").string() + "\"\nn_qubits = 3\n");
  CHECK(run_cli("circuit --config " + (dir / "bad.toml").string() + " --out " +
                (dir / "c").string()) == 2);
}

TEST_CASE("cli: convert and entropy on a local rbm") {
  const fs::path dir = fresh_dir("convert");
  write_text(dir / "run.toml", R"(
[convert]
n = 6
window = 2
per_window = 1
scale = 0.5
seed = 5
)");
  CHECK(run_cli("convert --config " + (dir / "run.toml").string() + " --out " +
                (dir / "a").string()) == 0);
  const auto summary = read_json_file((dir / "a" / "summary.json").string());
  CHECK(summary.at("pass").get<bool>());
  CHECK(summary.at("metrics").at("max_rel_deviation").get<double>() <= 1e-10);

  write_text(dir / "ent.toml", R"(
[entropy]
n = 6
window = 2
per_window = 1
scale = 0.5
seed = 5
cuts = all
)");
  CHECK(run_cli("entropy --config " + (dir / "ent.toml").string() + " --out " +
                (dir / "e").string()) == 0);
  const auto ent = read_json_file((dir / "e" / "summary.json").string());
  CHECK(ent.at("metrics").at("all_within_bound").get<bool>());

  // product RBM: every bond dimension is 1
  write_text(dir / "prod.toml", R"(
[convert]
n = 4
window = 1
per_window = 1
scale = 0.5
seed = 2
)");
  CHECK(run_cli("convert --config " + (dir / "prod.toml").string() + " --out " +
                (dir / "p").string()) == 0);
  const auto prod = read_json_file((dir / "p" / "summary.json").string());
  CHECK(prod.at("metrics").at("max_bond").get<int>() == 1);
}

TEST_CASE("cli: tomo bell recipe") {
  const fs::path dir = fresh_dir("tomo");
  write_text(dir / "run.toml", R"(
[tomo]
mode = "pure"
target = "bell"
bases = "ZZ,XX,YY"
fidelity_target = 0.999
[model]
n_hidden = 4
init_scale = 0.01
[train]
learning_rate = 0.5
sweeps = 12000
seed = 3
)");
  CHECK(run_cli("tomo --config " + (dir / "run.toml").string() + " --out " +
                (dir / "a").string()) == 0);
  const auto summary = read_json_file((dir / "a" / "summary.json").string());
  CHECK(summary.at("pass").get<bool>());
  CHECK(summary.at("metrics").at("fidelity").get<double>() >= 0.999);
}
