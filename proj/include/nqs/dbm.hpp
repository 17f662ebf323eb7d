#ifndef NQS_DBM_HPP
#define NQS_DBM_HPP

#include <Eigen/Core>
#include <cstdint>

#include "nqs/nqs_state.hpp"

namespace nqs {

// Two-hidden-layer deep Boltzmann machine: layered graph v-h-g with
//   -E(v,h,g) = sum_i a_i x_i + sum_j b_j h_j + sum_k c_k g_k
//               + sum_ij W_vh(i,j) x_i h_j + sum_jk W_hg(j,k) h_j g_k.
// No v-g and no intra-layer edges. The shallow layer h is summed analytically
// (RBM product form), only the deep layer g is enumerated.
class DbmState final : public NqsState {
 public:
  DbmState(int n_visible, int n_hidden_shallow, int n_hidden_deep,
           SpinConvention hidden_domain = SpinConvention::kZeroOne,
           SpinConvention visible_domain = SpinConvention::kZeroOne);

  static DbmState random(int n_visible, int n_hidden_shallow, int n_hidden_deep, double scale,
                         std::uint64_t seed,
                         SpinConvention hidden_domain = SpinConvention::kZeroOne,
                         SpinConvention visible_domain = SpinConvention::kZeroOne);

  int n_visible() const override { return static_cast<int>(a.size()); }
  int n_hidden_shallow() const { return static_cast<int>(b.size()); }
  int n_hidden_deep() const { return static_cast<int>(c.size()); }
  SpinConvention hidden_domain() const { return hidden_domain_; }
  SpinConvention visible_domain() const { return visible_domain_; }

  // Factorized evaluation: sum over g of e^{c.g} prod_j Gamma_j(theta_j(v,g)).
  // Throws CapacityError when shallow+deep exceeds the enumeration guard.
  LogAmplitude log_amplitude(const SpinConfiguration& v) const override;

  Eigen::VectorXcd a;     // visible biases
  Eigen::VectorXcd b;     // shallow hidden biases
  Eigen::VectorXcd c;     // deep hidden biases
  Eigen::MatrixXcd W_vh;  // (n_visible x n_hidden_shallow)
  Eigen::MatrixXcd W_hg;  // (n_hidden_shallow x n_hidden_deep)

 private:
  SpinConvention hidden_domain_;
  SpinConvention visible_domain_;
};

}  // namespace nqs

#endif  // NQS_DBM_HPP
