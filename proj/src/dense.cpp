#include "nqs/dense.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <ostream>

namespace nqs {

DenseState materialize(const NqsState& psi, Exec exec) {
  const int n = psi.n_visible();
  if (n > kMaxDenseSites) {
    throw CapacityError("materialize limited to " + std::to_string(kMaxDenseSites) + " sites");
  }
  const std::int64_t dim = std::int64_t{1} << n;
  DenseState out{Eigen::VectorXcd(dim), n};
  par::for_each_index(
      dim,
      [&](std::int64_t idx) {
        const SpinConfiguration v =
            SpinConfiguration::from_index(static_cast<std::uint64_t>(idx), n);
        out.amplitudes(idx) = psi.log_amplitude(v).value();
      },
      exec);
  return out;
}

Eigen::MatrixXcd dense_matrix(const PauliStringHamiltonian& h, Exec exec) {
  const int n = h.n_sites();
  if (n > kMaxDenseSites) {
    throw CapacityError("dense assembly limited to " + std::to_string(kMaxDenseSites) + " sites");
  }
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  // Column-wise: column v' collects <v|H|v'> = conj(<v'|H|v>); for Hermitian
  // strings it is simpler to accumulate <v|term|v'> by acting on |v'>.
  par::for_each_index(
      dim,
      [&](std::int64_t col) {
        SpinConfiguration v =
            SpinConfiguration::from_index(static_cast<std::uint64_t>(col), n);
        for (const PauliTerm& term : h.terms()) {
          // act on |v'>: prod of per-site matrices: P|v'> = f |v''>
          Complex f = term.coeff;
          std::uint64_t row = static_cast<std::uint64_t>(col);
          for (const auto& [site, op] : term.ops) {
            const int bit = v.bit(site);
            const double z = 1.0 - 2.0 * bit;
            switch (op) {
              case Pauli::Z:
                f *= z;
                break;
              case Pauli::X:
                row ^= std::uint64_t{1} << (n - 1 - site);
                break;
              case Pauli::Y:
                // Y|0> = i|1>, Y|1> = -i|0>
                f *= Complex(0.0, z);
                row ^= std::uint64_t{1} << (n - 1 - site);
                break;
            }
          }
          m(static_cast<std::int64_t>(row), col) += f;
        }
      },
      exec);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw InternalError("dense Hamiltonian assembly is not Hermitian");
  }
  return m;
}

GroundStateResult ground_state_exact(const PauliStringHamiltonian& h) {
  const Eigen::MatrixXcd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw InternalError("dense eigensolver failed");
  }
  GroundStateResult out;
  out.energy = solver.eigenvalues()(0);
  out.state = DenseState{solver.eigenvectors().col(0), h.n_sites()};
  return out;
}

double rayleigh_quotient(const Eigen::MatrixXcd& h, const DenseState& psi) {
  const double nrm2 = psi.amplitudes.squaredNorm();
  if (nrm2 <= 0.0) throw DomainError("Rayleigh quotient of a null vector");
  const Complex e = psi.amplitudes.dot(h * psi.amplitudes);
  return e.real() / nrm2;
}

double fidelity(const DenseState& a, const DenseState& b) {
  if (a.n_sites != b.n_sites) throw ShapeError("fidelity of states with different site counts");
  const double na = a.amplitudes.squaredNorm();
  const double nb = b.amplitudes.squaredNorm();
  if (na <= 0.0 || nb <= 0.0) throw DomainError("fidelity of a null vector");
  const Complex ov = a.amplitudes.dot(b.amplitudes);
  return std::norm(ov) / (na * nb);
}

KlResult kl_divergence(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  if (p.size() != q.size()) throw ShapeError("KL divergence needs equal-size tables");
  if (std::abs(p.sum() - 1.0) > 1e-9 || std::abs(q.sum() - 1.0) > 1e-9) {
    throw DomainError("KL divergence requires normalized tables (1e-9)");
  }
  KlResult out;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0.0 || q(i) < 0.0) throw DomainError("negative probability");
    if (p(i) == 0.0) continue;
    if (q(i) <= 0.0) {
      out.infinite = true;
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
    out.value += p(i) * std::log(p(i) / q(i));
  }
  return out;
}

void write_csv(const DenseState& s, std::ostream& os) {
  os << "index,re,im\n";
  char buf[80];
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g\n", static_cast<long long>(i),
                  s.amplitudes(i).real(), s.amplitudes(i).imag());
    os << buf;
  }
}

}  // namespace nqs
