#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "nqs/dense.hpp"
#include "oracles.hpp"

using namespace nqs;

TEST_CASE("materialize basics") {
  const RbmState flat(3, 2);
  const DenseState d = materialize(flat);
  REQUIRE(d.amplitudes.size() == 8);
  for (Eigen::Index i = 0; i < 8; ++i) CHECK(std::abs(d.amplitudes(i) - Complex(4, 0)) < 1e-13);

  RbmState pinned(1, 1);
  pinned.W(0, 0) = Complex(0.0, kPi);
  const DenseState p = materialize(pinned);
  CHECK(std::abs(p.amplitudes(0) - Complex(2, 0)) < 1e-12);
  CHECK(p.amplitudes(1) == Complex(0, 0));
}

TEST_CASE("materialize agrees with naive DBM enumeration pointwise") {
  const DbmState d = DbmState::random(4, 2, 2, 0.5, 313);
  const DenseState dense = materialize(d);
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const auto v = SpinConfiguration::from_index(idx, 4);
    const Complex expected = test::dbm_enumeration(d, v);
    CHECK(std::abs(dense.amplitudes(static_cast<Eigen::Index>(idx)) - expected) <
          1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("materialize capacity guard") {
  const RbmState s(15, 1);
  CHECK_THROWS_AS(materialize(s), CapacityError);
}

TEST_CASE("ground_state_exact basics") {
  CHECK(ground_state_exact(build_tfim(2, 1, 0, Boundary::kOpen)).energy ==
        doctest::Approx(-1.0));
  CHECK(ground_state_exact(build_afh(2, 1, Boundary::kOpen)).energy == doctest::Approx(-0.75));
  const auto gs = ground_state_exact(build_tfim(4, 1, 1, Boundary::kPeriodic));
  const Eigen::MatrixXcd m = dense_matrix(build_tfim(4, 1, 1, Boundary::kPeriodic));
  CHECK(rayleigh_quotient(m, gs.state) == doctest::Approx(gs.energy).epsilon(1e-12));
}

TEST_CASE("variational bound: exact ground energy below any ansatz") {
  const auto h = build_tfim(5, 1.0, 0.7, Boundary::kPeriodic);
  const double e0 = ground_state_exact(h).energy;
  const Eigen::MatrixXcd m = dense_matrix(h);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RbmState s = RbmState::random(5, 5, 0.5, 7000 + seed);
    CHECK(rayleigh_quotient(m, materialize(s)) >= e0 - 1e-10);
  }
}

TEST_CASE("fidelity") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g(0.0, 1.0);
  DenseState a{Eigen::VectorXcd(8), 3};
  for (Eigen::Index i = 0; i < 8; ++i) a.amplitudes(i) = Complex(g(rng), g(rng));
  CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-12));

  DenseState e0{Eigen::VectorXcd::Zero(8), 3}, e1{Eigen::VectorXcd::Zero(8), 3};
  e0.amplitudes(0) = 1.0;
  e1.amplitudes(5) = 1.0;
  CHECK(fidelity(e0, e1) == doctest::Approx(0.0));

  DenseState scaled = a;
  scaled.amplitudes *= Complex(-0.3, 1.7);
  CHECK(fidelity(a, scaled) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kl divergence") {
  Eigen::VectorXd p(2), q(2);
  p << 1.0, 0.0;
  q << 0.5, 0.5;
  CHECK(kl_divergence(p, p).value == doctest::Approx(0.0));
  const KlResult r = kl_divergence(p, q);
  CHECK(!r.infinite);
  CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  const KlResult inf = kl_divergence(q, p);  // support(q) not within support(p)
  CHECK(inf.infinite);

  Eigen::VectorXd bad(2);
  bad << 0.7, 0.6;
  CHECK_THROWS_AS(kl_divergence(bad, q), DomainError);
}

TEST_CASE("kl divergence nonnegative, zero iff equal, matches resummation") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int t = 0; t < 100; ++t) {
    Eigen::VectorXd p(6), q(6);
    for (int i = 0; i < 6; ++i) {
      p(i) = u(rng);
      q(i) = u(rng);
    }
    p /= p.sum();
    q /= q.sum();
    const KlResult r = kl_divergence(p, q);
    CHECK(!r.infinite);
    CHECK(r.value >= 0.0);
    double manual = 0.0;
    for (int i = 0; i < 6; ++i) manual += p(i) * (std::log(p(i)) - std::log(q(i)));
    CHECK(r.value == doctest::Approx(manual).epsilon(1e-12));
    if ((p - q).cwiseAbs().maxCoeff() > 1e-3) CHECK(r.value > 0.0);
  }
}

TEST_CASE("dense csv export") {
  DenseState s{Eigen::VectorXcd(2), 1};
  s.amplitudes << Complex(1.5, -2.0), Complex(0, 0.25);
  std::ostringstream os;
  write_csv(s, os);
  CHECK(os.str() == "index,re,im\n0,1.5,-2\n1,0,0.25\n");
}

TEST_CASE("dense vector state round trip") {
  const RbmState s = RbmState::random(4, 3, 0.5, 88);
  const DenseState d = materialize(s);
  const DenseVectorState wrapped(d);
  const DenseState d2 = materialize(wrapped);
  CHECK((d.amplitudes - d2.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
}
