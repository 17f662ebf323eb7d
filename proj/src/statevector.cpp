#include "nqs/statevector.hpp"

namespace nqs {

DenseState product_state(const std::string& initial) {
  const int n = static_cast<int>(initial.size());
  if (n < 1) throw ConfigError("empty initial state spec");
  const double r = 1.0 / std::sqrt(2.0);
  DenseState out{Eigen::VectorXcd::Ones(1), 0};
  for (char c : initial) {
    Eigen::Vector2cd q;
    switch (c) {
      case '0': q << 1.0, 0.0; break;
      case '1': q << 0.0, 1.0; break;
      case '+': q << r, r; break;
      case '-': q << r, -r; break;
      default:
        throw ConfigError(std::string("initial state characters must be 0/1/+/-, got '") + c +
                          "'");
    }
    Eigen::VectorXcd next(out.amplitudes.size() * 2);
    for (Eigen::Index i = 0; i < out.amplitudes.size(); ++i) {
      next(2 * i) = out.amplitudes(i) * q(0);
      next(2 * i + 1) = out.amplitudes(i) * q(1);
    }
    out.amplitudes = std::move(next);
    ++out.n_sites;
  }
  return out;
}

void apply_single_qubit(Eigen::VectorXcd& amps, int n, int q, const Eigen::Matrix2cd& u) {
  const Eigen::Index stride = Eigen::Index{1} << (n - 1 - q);
  for (Eigen::Index base = 0; base < amps.size(); base += 2 * stride) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Complex a0 = amps(base + off);
      const Complex a1 = amps(base + off + stride);
      amps(base + off) = u(0, 0) * a0 + u(0, 1) * a1;
      amps(base + off + stride) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

DenseState statevector_oracle(const Circuit& c, const std::string& initial) {
  if (static_cast<int>(initial.size()) != c.n_qubits) {
    throw ShapeError("initial state spec length != qubit count");
  }
  DenseState state = product_state(initial);
  const int n = c.n_qubits;
  const Complex i1(0.0, 1.0);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::kHadamard: {
        Eigen::Matrix2cd h;
        const double r = 1.0 / std::sqrt(2.0);
        h << r, r, r, -r;
        apply_single_qubit(state.amplitudes, n, g.q1, h);
        break;
      }
      case Gate::Kind::kZRot: {
        Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
        z(0, 0) = std::exp(-i1 * g.theta / 2.0);
        z(1, 1) = std::exp(i1 * g.theta / 2.0);
        apply_single_qubit(state.amplitudes, n, g.q1, z);
        break;
      }
      case Gate::Kind::kCz:
      case Gate::Kind::kCzTheta: {
        const Complex phase =
            g.kind == Gate::Kind::kCz ? Complex(-1.0, 0.0) : std::exp(i1 * g.theta);
        const std::uint64_t m1 = std::uint64_t{1} << (n - 1 - g.q1);
        const std::uint64_t m2 = std::uint64_t{1} << (n - 1 - g.q2);
        for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
          const std::uint64_t u = static_cast<std::uint64_t>(idx);
          if ((u & m1) && (u & m2)) state.amplitudes(idx) *= phase;
        }
        break;
      }
    }
  }
  return state;
}

}  // namespace nqs
