#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <sstream>

#include "nqs/entanglement.hpp"

using namespace nqs;

namespace {

DenseState random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  DenseState s{Eigen::VectorXcd(Eigen::Index{1} << n), n};
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    s.amplitudes(i) = Complex(g(rng), g(rng));
  }
  return s;
}

DenseState bell_pair() {
  DenseState s{Eigen::VectorXcd::Zero(4), 2};
  s.amplitudes(0) = 1.0 / std::sqrt(2.0);
  s.amplitudes(3) = 1.0 / std::sqrt(2.0);
  return s;
}

}  // namespace

TEST_CASE("reduced density: product state stays pure") {
  DenseState prod{Eigen::VectorXcd(8), 3};
  const Eigen::Vector2cd q0(Complex(0.6, 0.1), Complex(0.2, -0.5));
  const Eigen::Vector2cd q1(Complex(0.3, 0.0), Complex(0.7, 0.2));
  const Eigen::Vector2cd q2(Complex(0.9, -0.3), Complex(0.1, 0.1));
  for (int i = 0; i < 8; ++i) {
    prod.amplitudes(i) = q0((i >> 2) & 1) * q1((i >> 1) & 1) * q2(i & 1);
  }
  for (int cut = 1; cut < 3; ++cut) {
    const auto rho = reduced_density(prod, Bipartition::prefix(cut, 3));
    CHECK(std::abs((rho * rho).trace().real() - 1.0) < 1e-12);  // purity
    CHECK(renyi_entropy(rho, 2.0) < 1e-10);
  }
}

TEST_CASE("reduced density: Bell pair gives the maximally mixed qubit") {
  const auto rho = reduced_density(bell_pair(), Bipartition::prefix(1, 2));
  CHECK(std::abs(rho(0, 0) - Complex(0.5, 0)) < 1e-14);
  CHECK(std::abs(rho(1, 1) - Complex(0.5, 0)) < 1e-14);
  CHECK(std::abs(rho(0, 1)) < 1e-14);
  CHECK(renyi_entropy(rho, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(renyi_entropy(rho, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("reduced density: complementary spectra coincide") {
  const DenseState s = random_state(6, 11);
  Bipartition a;
  a.n_sites = 6;
  a.region_a = {0, 2, 5};  // non-contiguous region
  Bipartition ac;
  ac.n_sites = 6;
  ac.region_a = {1, 3, 4};
  const auto ra = reduced_density(s, a);
  const auto rc = reduced_density(s, ac);
  CHECK(std::abs(ra.trace().real() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(ra), ec(rc);
  CHECK((ea.eigenvalues() - ec.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("renyi entropy: pure state zero, I/2 log 2, monotone in alpha") {
  const auto rho_pure = reduced_density(bell_pair(), Bipartition::prefix(1, 2)) * 0.0 +
                        Eigen::MatrixXcd::Identity(2, 2) * 0.0;
  Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(2, 2);
  pure(0, 0) = 1.0;
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) CHECK(renyi_entropy(pure, alpha) < 1e-12);

  const Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  CHECK(renyi_entropy(half, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const DenseState s = random_state(5, 500 + t);
    const auto rho = reduced_density(s, Bipartition::prefix(2, 5));
    const double s2 = renyi_entropy(rho, 2.0);
    const double s1 = renyi_entropy(rho, 1.0);
    const double sh = renyi_entropy(rho, 0.5);
    CHECK(s2 <= s1 + 1e-10);
    CHECK(s1 <= sh + 1e-10);
  }
}

TEST_CASE("entropy symmetric between A and its complement for pure states") {
  for (int t = 0; t < 5; ++t) {
    const DenseState s = random_state(6, 60 + t);
    for (int cut = 1; cut < 6; ++cut) {
      Bipartition a = Bipartition::prefix(cut, 6);
      Bipartition ac;
      ac.n_sites = 6;
      for (int i = cut; i < 6; ++i) ac.region_a.push_back(i);
      for (double alpha : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(renyi_entropy(reduced_density(s, a), alpha) -
                       renyi_entropy(reduced_density(s, ac), alpha)) < 1e-10);
      }
    }
  }
}

TEST_CASE("entropy invariant under local basis change on A") {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> g(0.0, 1.0);
  const DenseState s = random_state(4, 77);
  const auto rho = reduced_density(s, Bipartition::prefix(2, 4));
  // random unitary on A from QR of a Gaussian matrix
  Eigen::MatrixXcd m(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(g(rng), g(rng));
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  const Eigen::MatrixXcd u = qr.householderQ();
  const Eigen::MatrixXcd rotated = u * rho * u.adjoint();
  for (double alpha : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(renyi_entropy(rotated, alpha) - renyi_entropy(rho, alpha)) < 1e-9);
  }
}

TEST_CASE("crossing count and the probe on a window-1 chain") {
  const RbmState local = RbmState::random_local(6, 1, 1, 0.5, 900);
  std::vector<int> cuts{1, 2, 3, 4, 5};
  const AreaLawReport report = arealaw_probe(local, cuts);
  CHECK(report.all_within_bound);
  for (const AreaLawRow& row : report.rows) {
    CHECK(row.crossings == 0);  // window-1 units never straddle a cut
    CHECK(row.s2 < 1e-10);
    CHECK(row.bound == 0.0);
  }
}

TEST_CASE("area-law probe: random window-2 RBMs satisfy the Schmidt bound") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RbmState s = RbmState::random_local(8, 2, 1, 0.7, 1000 + seed);
    std::vector<int> cuts;
    for (int c = 1; c < 8; ++c) cuts.push_back(c);
    const AreaLawReport report = arealaw_probe(s, cuts);
    CHECK(report.all_within_bound);
    for (const AreaLawRow& row : report.rows) {
      CHECK(row.s2 <= row.bound + 1e-9);
      CHECK(row.von_neumann <= row.bound + 1e-9);  // S_vN <= log(schmidt rank) too
    }
  }
}

TEST_CASE("fully connected RBMs show volume-like entanglement (reported only)") {
  int above = 0;
  std::mt19937_64 rng(2000);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    RbmState s(10, 10);
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) s.W(i, j) = Complex(0.1 * u(rng), 2.0 * u(rng));
    }
    const AreaLawReport report = arealaw_probe(s, {5});
    if (report.rows[0].s2 > 1.0) ++above;
  }
  CHECK(above >= 1);  // descriptive: entanglement well above any area-law scale
}

TEST_CASE("csv report shape") {
  const RbmState s = RbmState::random_local(4, 2, 1, 0.4, 5);
  const AreaLawReport report = arealaw_probe(s, {1, 2, 3});
  std::ostringstream os;
  write_arealaw_csv(report, os);
  const std::string text = os.str();
  CHECK(text.rfind("cut,size_a,crossings,s2,bound,von_neumann\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("bipartition validation") {
  CHECK_THROWS_AS(Bipartition::prefix(0, 4), DomainError);
  CHECK_THROWS_AS(Bipartition::prefix(4, 4), DomainError);
  Bipartition bad;
  bad.n_sites = 4;
  bad.region_a = {2, 1};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}
