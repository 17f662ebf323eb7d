#ifndef NQS_BM_HPP
#define NQS_BM_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "nqs/nqs_state.hpp"

namespace nqs {

// Undirected intra-layer edge with a complex coupling. Endpoints index into
// the layer's unit list; kept with u < v so duplicates are detectable.
struct IntraEdge {
  int u;
  int v;
  Complex weight;
};

// Fully connected Boltzmann machine wavefunction. The amplitude is the exact
// sum over all hidden assignments of e^{-E(h,v)} with
//   -E = sum_i a_i x_i + sum_j b_j h_j + sum_ij W_ij x_i h_j
//        + sum_{j<j'} w_{jj'} h_j h_{j'} + sum_{i<i'} w_{ii'} x_i x_{i'}.
// The partition function is dropped (unnormalized ansatz).
class BmState final : public NqsState {
 public:
  BmState(int n_visible, int n_hidden,
          SpinConvention hidden_domain = SpinConvention::kZeroOne,
          SpinConvention visible_domain = SpinConvention::kZeroOne);

  static BmState random(int n_visible, int n_hidden, double scale, std::uint64_t seed,
                        SpinConvention hidden_domain = SpinConvention::kZeroOne,
                        SpinConvention visible_domain = SpinConvention::kZeroOne);

  void add_visible_edge(int i, int i2, Complex w);
  void add_hidden_edge(int j, int j2, Complex w);

  int n_visible() const override { return static_cast<int>(a.size()); }
  int n_hidden() const { return static_cast<int>(b.size()); }
  SpinConvention hidden_domain() const { return hidden_domain_; }
  SpinConvention visible_domain() const { return visible_domain_; }

  // Exact hidden enumeration; throws CapacityError beyond 22 hidden units.
  LogAmplitude log_amplitude(const SpinConfiguration& v) const override;

  Eigen::VectorXcd a;
  Eigen::VectorXcd b;
  Eigen::MatrixXcd W;  // (n_visible x n_hidden)
  std::vector<IntraEdge> visible_edges;
  std::vector<IntraEdge> hidden_edges;

 private:
  SpinConvention hidden_domain_;
  SpinConvention visible_domain_;
};

inline constexpr int kMaxEnumeratedHidden = 22;

}  // namespace nqs

#endif  // NQS_BM_HPP
