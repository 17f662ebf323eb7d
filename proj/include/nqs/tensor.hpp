#ifndef NQS_TENSOR_HPP
#define NQS_TENSOR_HPP

#include <string>
#include <vector>

#include "nqs/rbm.hpp"

namespace nqs {

// Dense labeled tensor, row-major in the order of `labels`.
struct DenseTensor {
  std::vector<int> dims;
  std::vector<std::string> labels;
  std::vector<Complex> data;

  static DenseTensor scalar(Complex value) { return DenseTensor{{}, {}, {value}}; }

  std::int64_t size() const {
    std::int64_t s = 1;
    for (int d : dims) s *= d;
    return s;
  }
  Complex& at(const std::vector<int>& idx);
  const Complex& at(const std::vector<int>& idx) const;
};

// Pairwise contraction over every shared label (outer product when none).
DenseTensor contract(const DenseTensor& a, const DenseTensor& b);

// A bag of tensors plus the labels left open after full contraction.
struct TensorNetwork {
  std::vector<DenseTensor> tensors;
  std::vector<std::string> open_labels;  // "p0".."p{N-1}" for state networks
};

// Folds the network into a single tensor over its open labels. Greedy
// left-to-right order; intermediates are guarded against blowup.
DenseTensor contract_all(const TensorNetwork& net);

// Replaces each RBM unit and weighted edge by a tensor: visible neuron i
// becomes a copy tensor with diagonal (1, e^{a_i}) carrying one physical leg,
// hidden neuron j a copy tensor with diagonal (1, e^{b_j}), and edge (i,j)
// the 2x2 matrix [[1,1],[1,e^{w_ij}]]. Contraction over all internal legs
// reproduces Psi. Requires zero-one conventions (convert first).
TensorNetwork rbm_to_tensor_network(const RbmState& s);

// Amplitude of one configuration by full network contraction.
Complex tn_amplitude(const TensorNetwork& net, const SpinConfiguration& v);

}  // namespace nqs

#endif  // NQS_TENSOR_HPP
