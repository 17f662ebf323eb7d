#ifndef NQS_SAMPLER_HPP
#define NQS_SAMPLER_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "nqs/hamiltonian.hpp"
#include "nqs/nqs_state.hpp"
#include "nqs/parallel.hpp"

namespace nqs {

// Proposal move for the Metropolis walk. The exchange move swaps two opposite
// spins and therefore preserves total magnetization (sector restriction).
enum class ProposalMove { kSingleFlip, kExchange };

struct MetropolisChain {
  SpinConfiguration current;  // zero-one
  LogAmplitude current_log_amp;
  std::mt19937_64 rng;
  std::uint64_t step_count = 0;
  std::uint64_t accept_count = 0;

  // Picks a random nonzero-amplitude start (within the magnetization sector
  // when given: `sector` counts sites with bit 1).
  static MetropolisChain start(const NqsState& psi, std::uint64_t seed,
                               std::optional<int> sector = std::nullopt);

  double acceptance() const {
    return step_count == 0 ? 0.0 : static_cast<double>(accept_count) / step_count;
  }
};

// One proposal: accepts with min(1, |Psi(v')/Psi(v)|^2); zero-amplitude
// proposals are rejected outright. Updates the cached log amplitude.
void metropolis_step(MetropolisChain& chain, const NqsState& psi,
                     ProposalMove move = ProposalMove::kSingleFlip);

struct SamplerOptions {
  ProposalMove move = ProposalMove::kSingleFlip;
  int n_chains = 1;
  double burn_in_fraction = 0.1;  // fraction of requested samples discarded
  int sweep_factor = 1;           // proposals per sample = sweep_factor * n_sites
  std::optional<int> sector;      // restrict to fixed sum of bits
};

struct EnergyEstimate {
  Complex mean{0.0, 0.0};
  double stderr = 0.0;
  double acceptance = 1.0;
};

// Monte Carlo estimate of <E_loc> over |Psi|^2 with binning standard error.
// Deterministic given the seed. Chains are combined in fixed order.
EnergyEstimate estimate_energy(const NqsState& psi, const PauliStringHamiltonian& h,
                               int n_samples, std::uint64_t seed,
                               const SamplerOptions& opt = {});

struct GradientEstimate {
  Eigen::VectorXcd gradient;  // per complex parameter: dE/dRe + i dE/dIm
  Complex energy_mean{0.0, 0.0};
  double energy_stderr = 0.0;
  double acceptance = 1.0;
};

// Stochastic estimate of the energy gradient
//   G_k = 2 [ <E_loc O_k*> - <E_loc><O_k*> ],
// where O_k are holomorphic log-derivatives; the real and imaginary parts of
// G_k are the derivatives with respect to Re/Im of parameter k.
GradientEstimate estimate_gradient(const TrainableState& psi, const PauliStringHamiltonian& h,
                                   int n_samples, std::uint64_t seed,
                                   const SamplerOptions& opt = {});

// Exact counterparts summing over every basis configuration (optionally
// restricted to a magnetization sector). Guarded to 16 sites.
EnergyEstimate full_sum_energy(const NqsState& psi, const PauliStringHamiltonian& h,
                               std::optional<int> sector = std::nullopt,
                               Exec exec = Exec::kParallel);
GradientEstimate full_sum_gradient(const TrainableState& psi, const PauliStringHamiltonian& h,
                                   std::optional<int> sector = std::nullopt,
                                   Exec exec = Exec::kParallel);

}  // namespace nqs

#endif  // NQS_SAMPLER_HPP
