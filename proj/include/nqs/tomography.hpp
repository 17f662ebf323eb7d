#ifndef NQS_TOMOGRAPHY_HPP
#define NQS_TOMOGRAPHY_HPP

#include "nqs/measurement.hpp"
#include "nqs/purified.hpp"
#include "nqs/train.hpp"

namespace nqs {

// Pure-state tomography model: a real-parameter RBM pair giving
//   Psi(v) = sqrt(m_amp(v)) e^{i log(m_phase(v))/2} = e^{(L1 + i L2)/2}.
struct PureTomoModel {
  PurifiedNet amplitude;  // n_env = 0
  PurifiedNet phase;

  static PureTomoModel random(int n_visible, int n_hidden, double scale, std::uint64_t seed);

  int n_visible() const { return amplitude.n_visible(); }
  DenseState materialize() const;
};

// Which way the KL divergence is read. Data-first KL(p_data || p_model) is
// the estimable direction and the default; model-first is available for
// comparison on full-support data.
enum class KlDirection { kDataFirst, kModelFirst };

struct TomoResult {
  std::vector<double> divergence;  // accepted epochs only
  std::vector<double> metric;      // fidelity (pure) / trace distance (mixed)
  double final_divergence = 0.0;
  double final_eta = 0.0;
  int epochs_run = 0;
};

// Gradient descent on the summed divergence over all measurement records,
// with exact probability tables differentiated in closed form. The learning
// rate halves whenever an epoch would increase the objective (step reverted)
// and creeps back up on success, so the divergence trace is non-increasing.
TomoResult tomo_pure(const std::vector<MeasurementRecord>& records, PureTomoModel& model,
                     const TrainConfig& cfg, const DenseState* target = nullptr,
                     KlDirection direction = KlDirection::kDataFirst);

TomoResult tomo_mixed(const std::vector<MeasurementRecord>& records, PurifiedRbm& model,
                      const TrainConfig& cfg, const Eigen::MatrixXcd* target = nullptr,
                      KlDirection direction = KlDirection::kDataFirst);

// Exact records of a known state/density in the given bases.
std::vector<MeasurementRecord> exact_records(const DenseState& state,
                                             const std::vector<std::string>& bases);
std::vector<MeasurementRecord> exact_records(const Eigen::MatrixXcd& rho,
                                             const std::vector<std::string>& bases);

}  // namespace nqs

#endif  // NQS_TOMOGRAPHY_HPP
