#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nqs/dense.hpp"
#include "nqs/train.hpp"
#include "oracles.hpp"

using namespace nqs;

namespace {

// RBM with amplitude 1 on |0...0> and 0 elsewhere (one pinning unit per site).
RbmState pinned_all_zero(int n) {
  RbmState s(n, n);
  for (int i = 0; i < n; ++i) s.W(i, i) = Complex(0.0, kPi);
  return s;
}

}  // namespace

TEST_CASE("metropolis acceptance is 1 on a uniform state") {
  const RbmState uniform(4, 2);
  MetropolisChain chain = MetropolisChain::start(uniform, 3);
  for (int t = 0; t < 10000; ++t) metropolis_step(chain, uniform);
  CHECK(chain.acceptance() > 0.99);
}

TEST_CASE("pinned state never leaves its support") {
  const RbmState pinned = pinned_all_zero(3);
  MetropolisChain chain = MetropolisChain::start(pinned, 7);
  CHECK(chain.current.index() == 0);
  for (int t = 0; t < 2000; ++t) {
    metropolis_step(chain, pinned);
    REQUIRE(chain.current.index() == 0);
  }
  CHECK(chain.accept_count == 0);
}

TEST_CASE("detailed balance: uniform target sampled uniformly (chi^2 at 99%)") {
  const RbmState uniform(3, 1);
  MetropolisChain chain = MetropolisChain::start(uniform, 12345);
  SamplerOptions opt;
  std::array<int, 8> counts{};
  const int samples = 100000;
  for (int s = 0; s < samples; ++s) {
    for (int t = 0; t < 13; ++t) metropolis_step(chain, uniform);
    ++counts[chain.current.index()];
  }
  const double expected = samples / 8.0;
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 18.4753);  // 99% quantile, 7 dof
}

TEST_CASE("sampled <Z0 Z1> on the exact TFIM(6,1,1) ground state") {
  const auto h = build_tfim(6, 1.0, 1.0, Boundary::kPeriodic);
  const auto gs = ground_state_exact(h);
  const DenseVectorState psi(gs.state);

  std::vector<PauliTerm> obs_terms;
  obs_terms.push_back({Complex(1.0, 0.0), {{0, Pauli::Z}, {1, Pauli::Z}}});
  const PauliStringHamiltonian obs(6, Boundary::kOpen, std::move(obs_terms));

  const Eigen::MatrixXcd m = dense_matrix(obs);
  const double exact = rayleigh_quotient(m, gs.state);

  const EnergyEstimate est = estimate_energy(psi, obs, 100000, 99);
  CHECK(std::abs(est.mean.real() - exact) < 3.0 * est.stderr);
  CHECK(est.stderr < 0.02);
}

TEST_CASE("estimate_energy on a peaked state: classical value, zero spread") {
  const auto h = build_tfim(3, 1.0, 0.0, Boundary::kOpen);  // diagonal
  const RbmState pinned = pinned_all_zero(3);
  const EnergyEstimate est = estimate_energy(pinned, h, 500, 5);
  CHECK(est.mean.real() == doctest::Approx(-2.0));  // two aligned bonds
  CHECK(est.stderr == doctest::Approx(0.0));
}

TEST_CASE("full-sum energy equals the dense Rayleigh quotient") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const auto h = build_tfim(n, 1.0, 0.8, Boundary::kPeriodic);
    const RbmState s = RbmState::random(n, n, 0.4, 200 + trial);
    const double exact = rayleigh_quotient(test::kron_matrix(h), materialize(s));
    const EnergyEstimate est = full_sum_energy(s, h);
    CHECK(std::abs(est.mean.real() - exact) < 1e-10 * std::max(1.0, std::abs(exact)));
    CHECK(std::abs(est.mean.imag()) < 1e-10);
  }
}

TEST_CASE("full-sum and sampled estimates agree within 3 stderr") {
  const auto h = build_tfim(6, 1.0, 1.0, Boundary::kPeriodic);
  const RbmState s = RbmState::random(6, 6, 0.3, 404);
  const EnergyEstimate exact = full_sum_energy(s, h);
  const EnergyEstimate mc = estimate_energy(s, h, 40000, 11);
  CHECK(std::abs(mc.mean.real() - exact.mean.real()) < 3.0 * mc.stderr);
}

TEST_CASE("gradient vanishes on an exact eigenstate") {
  const auto h = build_tfim(3, 1.0, 0.0, Boundary::kOpen);
  const RbmState pinned = pinned_all_zero(3);  // |000> is an eigenstate of diagonal H
  const GradientEstimate g = full_sum_gradient(pinned, h);
  CHECK(g.gradient.norm() < 1e-12);
}

TEST_CASE("full-sum gradient matches finite differences of full-sum energy") {
  const auto h = build_tfim(4, 1.0, 1.0, Boundary::kPeriodic);
  RbmState s = RbmState::random(4, 3, 0.4, 616, SpinConvention::kPlusMinusOne,
                                SpinConvention::kPlusMinusOne);
  const GradientEstimate g = full_sum_gradient(s, h);
  const Eigen::VectorXcd params = s.parameters();
  const double eps = 1e-5;
  for (int k = 0; k < s.n_parameters(); k += 3) {
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
      CHECK(std::abs(fd - expected) <= 1e-4 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("hidden-bias gradient symmetric for a permutation-symmetric state") {
  const auto h = build_tfim(4, 1.0, 1.0, Boundary::kPeriodic);
  const RbmState s(4, 3);  // zero parameters: hidden units interchangeable
  const GradientEstimate g = full_sum_gradient(s, h);
  for (int j = 1; j < 3; ++j) {
    CHECK(std::abs(g.gradient(4 + j) - g.gradient(4)) < 1e-12);
  }
}

TEST_CASE("gd_update rules") {
  Eigen::VectorXcd w(1), g(1);
  w << Complex(1.0, 0.0);
  g << Complex(2.0, 0.0);
  CHECK(gd_update(w, Eigen::VectorXcd::Zero(1), 0.3)(0) == Complex(1.0, 0.0));
  CHECK(gd_update(w, g, 0.1)(0) == Complex(0.8, 0.0));

  // two half-rate steps on a fixed gradient equal one full step
  const Eigen::VectorXcd two = gd_update(gd_update(w, g, 0.05), g, 0.05);
  CHECK(std::abs(two(0) - gd_update(w, g, 0.1)(0)) < 1e-15);

  Eigen::VectorXcd bad(1);
  bad << Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(gd_update(w, bad, 0.1), TrainingError);

  // clipping rescales to the requested norm
  Eigen::VectorXcd big(1);
  big << Complex(3.0, 4.0);
  const auto clipped = gd_update(Eigen::VectorXcd::Zero(1), big, 1.0, 1.0);
  CHECK(std::abs(clipped(0) + big(0) / 5.0) < 1e-15);
}

TEST_CASE("sgd_update rules") {
  Eigen::VectorXcd w(2);
  w << Complex(1, 1), Complex(-2, 0);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Eigen::VectorXcd> batch;
  Eigen::VectorXcd mean = Eigen::VectorXcd::Zero(2);
  for (int i = 0; i < 5; ++i) {
    Eigen::VectorXcd g(2);
    g << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
    mean += g / 5.0;
    batch.push_back(g);
  }
  const auto via_batch = sgd_update(w, batch, 0.2);
  const auto via_mean = gd_update(w, mean, 0.2);
  CHECK((via_batch - via_mean).norm() < 1e-14);

  CHECK((sgd_update(w, {batch[0]}, 0.2) - gd_update(w, batch[0], 0.2)).norm() == 0.0);
  const std::vector<Eigen::VectorXcd> same(4, batch[1]);
  CHECK((sgd_update(w, same, 0.2) - gd_update(w, batch[1], 0.2)).norm() < 1e-14);
  CHECK_THROWS_AS(sgd_update(w, {}, 0.2), DomainError);
}

TEST_CASE("seeded determinism of sampled estimates") {
  const auto h = build_tfim(5, 1.0, 1.0, Boundary::kPeriodic);
  const RbmState s = RbmState::random(5, 5, 0.3, 777);
  const EnergyEstimate a = estimate_energy(s, h, 5000, 31);
  const EnergyEstimate b = estimate_energy(s, h, 5000, 31);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr == b.stderr);
  const GradientEstimate ga = estimate_gradient(s, h, 2000, 13);
  const GradientEstimate gb = estimate_gradient(s, h, 2000, 13);
  CHECK((ga.gradient - gb.gradient).norm() == 0.0);
}

TEST_CASE("exchange move preserves the magnetization sector") {
  const RbmState s = RbmState::random(6, 4, 0.3, 51);
  SamplerOptions opt;
  opt.move = ProposalMove::kExchange;
  opt.sector = 3;
  MetropolisChain chain = MetropolisChain::start(s, 17, opt.sector);
  REQUIRE(chain.current.sum_bits() == 3);
  for (int t = 0; t < 3000; ++t) {
    metropolis_step(chain, s, ProposalMove::kExchange);
    REQUIRE(chain.current.sum_bits() == 3);
  }
  CHECK(chain.accept_count > 0);
}

TEST_CASE("solve_ground_state on diagonal TFIM(2,1,0) converges to -1") {
  const auto h = build_tfim(2, 1.0, 0.0, Boundary::kOpen);
  RbmState psi = RbmState::random(2, 2, 0.05, 9001, SpinConvention::kPlusMinusOne,
                                  SpinConvention::kPlusMinusOne);
  psi.set_parameters(psi.parameters().real().cast<Complex>());  // diagonal H: real params
  // saturating landscape: finish with geometrically growing learning rates
  double best = 0.0;
  for (const double eta : {0.5, 5.0, 50.0, 500.0, 5000.0}) {
    TrainConfig cfg;
    cfg.learning_rate = eta;
    cfg.sweeps = 400;
    cfg.samples_per_step = 0;
    cfg.seed = 1;
    const TrainResult r = solve_ground_state(h, psi, cfg);
    best = r.best_energy;
  }
  CHECK(best == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("solve_ground_state trace is monotone in the best energy") {
  const auto h = build_tfim(4, 1.0, 1.0, Boundary::kPeriodic);
  RbmState psi = RbmState::random(4, 8, 0.01, 2, SpinConvention::kPlusMinusOne,
                                  SpinConvention::kPlusMinusOne);
  TrainConfig cfg;
  cfg.learning_rate = 0.1;
  cfg.sweeps = 60;
  cfg.samples_per_step = 0;
  cfg.seed = 5;
  const TrainResult r = solve_ground_state(h, psi, cfg);
  REQUIRE(r.trace.size() == 60);
  CHECK(r.best_energy <= r.trace.front().energy.real());
  // state is left loaded with the best parameters
  CHECK(full_sum_energy(psi, h).mean.real() == doctest::Approx(r.best_energy).epsilon(1e-12));
}

namespace {

// Test double whose reported derivatives push the energy uphill; exercises
// the divergence detector without relying on pathological numerics.
class UphillState final : public TrainableState {
 public:
  explicit UphillState(int n) : n_(n), p_(0.0) {}
  int n_visible() const override { return n_; }
  LogAmplitude log_amplitude(const SpinConfiguration& v) const override {
    double cls = 0.0;  // classical ZZ chain energy of v
    for (int i = 0; i + 1 < n_; ++i) {
      cls += (1.0 - 2.0 * v.bit(i)) * (1.0 - 2.0 * v.bit(i + 1));
    }
    return LogAmplitude{Complex(p_ * cls, 0.0), false};
  }
  int n_parameters() const override { return 1; }
  Eigen::VectorXcd parameters() const override {
    Eigen::VectorXcd p(1);
    p << Complex(p_, 0.0);
    return p;
  }
  void set_parameters(const Eigen::VectorXcd& p) override { p_ = p(0).real(); }
  Eigen::VectorXcd log_derivatives(const SpinConfiguration& v) const override {
    // deliberately wrong sign
    double cls = 0.0;
    for (int i = 0; i + 1 < n_; ++i) {
      cls += (1.0 - 2.0 * v.bit(i)) * (1.0 - 2.0 * v.bit(i + 1));
    }
    Eigen::VectorXcd g(1);
    g << Complex(-cls, 0.0);
    return g;
  }

 private:
  int n_;
  double p_;
};

}  // namespace

TEST_CASE("divergence detector aborts a run that climbs uphill") {
  std::vector<PauliTerm> terms;
  for (int i = 0; i + 1 < 4; ++i) {
    terms.push_back({Complex(50.0, 0.0), {{i, Pauli::Z}, {i + 1, Pauli::Z}}});
  }
  const PauliStringHamiltonian h(4, Boundary::kOpen, std::move(terms));
  UphillState psi(4);
  TrainConfig cfg;
  cfg.learning_rate = 0.05;
  cfg.sweeps = 500;
  cfg.samples_per_step = 0;
  cfg.seed = 3;
  CHECK_THROWS_AS(solve_ground_state(h, psi, cfg), TrainingError);
}

TEST_CASE("train config validation") {
  TrainConfig cfg;
  cfg.learning_rate = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg.learning_rate = 0.1;
  cfg.batch_size = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}
