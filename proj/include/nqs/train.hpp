#ifndef NQS_TRAIN_HPP
#define NQS_TRAIN_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "nqs/sampler.hpp"

namespace nqs {

struct TrainConfig {
  double learning_rate = 0.05;
  int batch_size = 1;        // N' of the averaged stochastic update
  int sweeps = 200;          // training iterations
  int samples_per_step = 0;  // 0 = exact full-sum gradients
  std::uint64_t seed = 0;
  std::optional<double> gradient_clip;  // global L2 clip
  std::optional<int> sector;            // full-sum magnetization restriction
  ProposalMove move = ProposalMove::kSingleFlip;
  int n_chains = 1;

  void validate() const;
};

// Plain gradient step w' = w - eta * g per parameter (real and imaginary
// parts move independently). Non-finite gradient entries abort the training.
Eigen::VectorXcd gd_update(const Eigen::VectorXcd& params, const Eigen::VectorXcd& grad,
                           double eta, std::optional<double> clip = std::nullopt);

// Averaged stochastic form: w' = w - (eta/N') sum_i g_i.
Eigen::VectorXcd sgd_update(const Eigen::VectorXcd& params,
                            const std::vector<Eigen::VectorXcd>& batch_grads, double eta);

struct TraceRow {
  int iter = 0;
  Complex energy{0.0, 0.0};
  double stderr = 0.0;
  double acceptance = 1.0;
};

struct TrainResult {
  std::vector<TraceRow> trace;
  double best_energy = 0.0;
  int best_iter = -1;
  Eigen::VectorXcd best_parameters;
};

// Variational minimization of <H>: repeated gradient estimation plus plain
// updates, with best-so-far bookkeeping. The state is left loaded with the
// best parameters found. Aborts with TrainingError when the energy rises
// 10x above the initial value (divergence detector).
TrainResult solve_ground_state(const PauliStringHamiltonian& h, TrainableState& psi,
                               const TrainConfig& cfg);

// Trace CSV: header "iter,mean_re,mean_im,stderr,acceptance".
void write_trace_csv(const std::vector<TraceRow>& trace, std::ostream& os);

}  // namespace nqs

#endif  // NQS_TRAIN_HPP
