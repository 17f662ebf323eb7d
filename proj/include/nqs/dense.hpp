#ifndef NQS_DENSE_HPP
#define NQS_DENSE_HPP

#include <Eigen/Core>
#include <iosfwd>

#include "nqs/hamiltonian.hpp"
#include "nqs/nqs_state.hpp"
#include "nqs/parallel.hpp"

namespace nqs {

// Dense 2^N state vector. Index convention is big-endian project-wide:
// site 0 is the most significant bit of the basis index.
struct DenseState {
  Eigen::VectorXcd amplitudes;
  int n_sites = 0;

  double norm() const { return amplitudes.norm(); }
};

inline constexpr int kMaxDenseSites = 14;

// Evaluates Psi over all 2^n basis configurations.
DenseState materialize(const NqsState& psi, Exec exec = Exec::kParallel);

// Adapter exposing a dense vector as an NqsState (used to load exact states
// into samplers and estimators).
class DenseVectorState final : public NqsState {
 public:
  explicit DenseVectorState(DenseState state) : state_(std::move(state)) {}

  int n_visible() const override { return state_.n_sites; }
  LogAmplitude log_amplitude(const SpinConfiguration& v) const override {
    check_size(v);
    const Complex amp = state_.amplitudes(static_cast<Eigen::Index>(v.index()));
    if (amp == Complex(0.0, 0.0)) return LogAmplitude::zero();
    return LogAmplitude{std::log(amp), false};
  }

 private:
  DenseState state_;
};

// Dense Hermitian matrix assembled from the Pauli strings; validates the
// assembly against its own adjoint.
Eigen::MatrixXcd dense_matrix(const PauliStringHamiltonian& h, Exec exec = Exec::kParallel);

struct GroundStateResult {
  double energy;
  DenseState state;
};

// Lowest eigenpair by dense diagonalization (guarded to kMaxDenseSites).
GroundStateResult ground_state_exact(const PauliStringHamiltonian& h);

// <psi|H|psi>/<psi|psi> from the dense matrix.
double rayleigh_quotient(const Eigen::MatrixXcd& h, const DenseState& psi);

// |<A|B>|^2 / (<A|A><B|B>).
double fidelity(const DenseState& a, const DenseState& b);

struct KlResult {
  double value = 0.0;
  bool infinite = false;
};

// sum_i p_i log(p_i/q_i); requires both tables normalized within 1e-9.
// Reports the infinite flag when support(p) is not contained in support(q).
KlResult kl_divergence(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

// CSV export: one "index,re,im" row per basis state.
void write_csv(const DenseState& s, std::ostream& os);

}  // namespace nqs

#endif  // NQS_DENSE_HPP
