#ifndef NQS_RBM_HPP
#define NQS_RBM_HPP

#include <Eigen/Core>
#include <cstdint>

#include "nqs/nqs_state.hpp"

namespace nqs {

// Restricted Boltzmann machine wavefunction. Hidden units are summed
// analytically into the product form
//   Psi(v) = prod_i e^{a_i x_i} * prod_j Gamma_j(theta_j),
//   theta_j = b_j + sum_i x_i W_ij,
// with Gamma = 1+e^theta for {0,1} hidden units and 2 cosh(theta) for {+-1}.
// x_i is the visible value in the state's own visible convention.
class RbmState final : public TrainableState {
 public:
  RbmState(int n_visible, int n_hidden,
           SpinConvention hidden_domain = SpinConvention::kZeroOne,
           SpinConvention visible_domain = SpinConvention::kZeroOne);

  static RbmState random(int n_visible, int n_hidden, double scale, std::uint64_t seed,
                         SpinConvention hidden_domain = SpinConvention::kZeroOne,
                         SpinConvention visible_domain = SpinConvention::kZeroOne);

  // Chain RBM whose hidden units each connect to a contiguous window of
  // `window` sites; one hidden unit per window position (times `per_window`).
  static RbmState random_local(int n_visible, int window, int per_window, double scale,
                               std::uint64_t seed);

  int n_visible() const override { return static_cast<int>(a.size()); }
  int n_hidden() const { return static_cast<int>(b.size()); }
  SpinConvention hidden_domain() const { return hidden_domain_; }
  SpinConvention visible_domain() const { return visible_domain_; }

  LogAmplitude log_amplitude(const SpinConfiguration& v) const override;

  // d logPsi / d{a_i, b_j, W_ij}: (x_i, sigma_j, x_i sigma_j) where sigma_j is
  // the logistic of theta_j for {0,1} hidden units and tanh(theta_j) for {+-1}.
  Eigen::VectorXcd log_derivatives(const SpinConfiguration& v) const override;

  // Parameter packing: [a (nv), b (nh), W row-major (nv*nh)].
  int n_parameters() const override;
  Eigen::VectorXcd parameters() const override;
  void set_parameters(const Eigen::VectorXcd& p) override;

  Eigen::VectorXcd theta(const SpinConfiguration& v) const;

  Eigen::VectorXcd a;  // visible biases
  Eigen::VectorXcd b;  // hidden biases
  Eigen::MatrixXcd W;  // (n_visible x n_hidden)

 private:
  SpinConvention hidden_domain_;
  SpinConvention visible_domain_;
};

// Rewrites an RBM in another (visible, hidden) convention pair via the affine
// substitution v <-> 1-2v. Amplitudes agree up to one global constant:
//   Psi_old(v) = e^{log_scale} * Psi_new(v)  for every basis configuration v.
struct ConvertedRbm {
  RbmState state;
  Complex log_scale;
};
ConvertedRbm convert_convention(const RbmState& s, SpinConvention visible_target,
                                SpinConvention hidden_target);

}  // namespace nqs

#endif  // NQS_RBM_HPP
