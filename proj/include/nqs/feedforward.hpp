#ifndef NQS_FEEDFORWARD_HPP
#define NQS_FEEDFORWARD_HPP

#include <Eigen/Core>
#include <vector>

#include "nqs/activations.hpp"
#include "nqs/nqs_state.hpp"

namespace nqs {

// One dense layer: out_k = f(sum_i W(i,k) x_i - b_k). The bias enters with a
// minus sign, matching the neuron convention f(sum w_i x_i - b).
struct FfnLayer {
  Eigen::MatrixXcd weights;  // (in x out)
  Eigen::VectorXcd bias;     // (out)
  ActivationSpec activation;
};

// Feed-forward complex network used as a wavefunction: the final layer must
// have a single output, which is the state coefficient Psi(v).
class FeedForwardNet final : public NqsState {
 public:
  explicit FeedForwardNet(std::vector<FfnLayer> layers);

  int n_visible() const override { return static_cast<int>(layers_.front().weights.rows()); }
  LogAmplitude log_amplitude(const SpinConfiguration& v) const override;

  Complex forward(const SpinConfiguration& v) const;
  const std::vector<FfnLayer>& layers() const { return layers_; }

 private:
  std::vector<FfnLayer> layers_;
};

// State coefficient by forward propagation (pure in net and v).
Complex ffn_amplitude(const FeedForwardNet& net, const SpinConfiguration& v);

}  // namespace nqs

#endif  // NQS_FEEDFORWARD_HPP
