#include "nqs/train.hpp"

#include <cmath>
#include <ostream>

namespace nqs {

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw DomainError("learning_rate must be positive");
  if (batch_size < 1) throw DomainError("batch_size must be >= 1");
  if (sweeps < 1) throw DomainError("sweeps must be >= 1");
  if (samples_per_step < 0) throw DomainError("samples_per_step must be >= 0");
  if (gradient_clip && !(*gradient_clip > 0.0)) throw DomainError("gradient_clip must be positive");
}

Eigen::VectorXcd gd_update(const Eigen::VectorXcd& params, const Eigen::VectorXcd& grad,
                           double eta, std::optional<double> clip) {
  if (params.size() != grad.size()) throw ShapeError("gradient/parameter size mismatch");
  for (Eigen::Index k = 0; k < grad.size(); ++k) {
    if (!std::isfinite(grad(k).real()) || !std::isfinite(grad(k).imag())) {
      throw TrainingError("non-finite gradient entry at index " + std::to_string(k));
    }
  }
  Eigen::VectorXcd g = grad;
  if (clip) {
    const double norm = g.norm();
    if (norm > *clip) g *= *clip / norm;
  }
  return params - eta * g;
}

Eigen::VectorXcd sgd_update(const Eigen::VectorXcd& params,
                            const std::vector<Eigen::VectorXcd>& batch_grads, double eta) {
  if (batch_grads.empty()) throw DomainError("sgd_update needs a nonempty batch");
  Eigen::VectorXcd mean = Eigen::VectorXcd::Zero(params.size());
  for (const Eigen::VectorXcd& g : batch_grads) {
    if (g.size() != params.size()) throw ShapeError("batch gradient size mismatch");
    mean += g;
  }
  mean /= static_cast<double>(batch_grads.size());
  return gd_update(params, mean, eta);
}

TrainResult solve_ground_state(const PauliStringHamiltonian& h, TrainableState& psi,
                               const TrainConfig& cfg) {
  cfg.validate();
  SamplerOptions opt;
  opt.move = cfg.move;
  opt.n_chains = cfg.n_chains;
  opt.sector = cfg.sector;

  TrainResult result;
  result.trace.reserve(static_cast<std::size_t>(cfg.sweeps));
  double initial_energy = 0.0;

  for (int it = 0; it < cfg.sweeps; ++it) {
    GradientEstimate est;
    if (cfg.samples_per_step == 0) {
      est = full_sum_gradient(psi, h, cfg.sector);
    } else {
      est = estimate_gradient(psi, h, cfg.samples_per_step,
                              cfg.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(it),
                              opt);
    }
    result.trace.push_back(TraceRow{it, est.energy_mean, est.energy_stderr, est.acceptance});

    const double e = est.energy_mean.real();
    if (it == 0) initial_energy = e;
    if (result.best_iter < 0 || e < result.best_energy) {
      result.best_energy = e;
      result.best_iter = it;
      result.best_parameters = psi.parameters();
    }
    if (e - initial_energy > 10.0 * std::max(1.0, std::abs(initial_energy))) {
      psi.set_parameters(result.best_parameters);
      throw TrainingError("energy diverged at iteration " + std::to_string(it) + ": " +
                          std::to_string(e) + " vs initial " + std::to_string(initial_energy));
    }
    psi.set_parameters(gd_update(psi.parameters(), est.gradient, cfg.learning_rate,
                                 cfg.gradient_clip));
  }
  psi.set_parameters(result.best_parameters);
  return result;
}

void write_trace_csv(const std::vector<TraceRow>& trace, std::ostream& os) {
  os << "iter,mean_re,mean_im,stderr,acceptance\n";
  char buf[160];
  for (const TraceRow& row : trace) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", row.iter,
                  row.energy.real(), row.energy.imag(), row.stderr, row.acceptance);
    os << buf;
  }
}

}  // namespace nqs
