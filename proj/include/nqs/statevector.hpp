#ifndef NQS_STATEVECTOR_HPP
#define NQS_STATEVECTOR_HPP

#include <Eigen/Core>

#include "nqs/circuit.hpp"
#include "nqs/dense.hpp"

namespace nqs {

// Product state from a per-qubit spec string over {0, 1, +, -}.
DenseState product_state(const std::string& initial);

// Applies a single-qubit matrix to qubit q (big-endian indexing).
void apply_single_qubit(Eigen::VectorXcd& amps, int n, int q, const Eigen::Matrix2cd& u);

// Direct gate-by-gate simulation with exact unitaries.
DenseState statevector_oracle(const Circuit& c, const std::string& initial);

}  // namespace nqs

#endif  // NQS_STATEVECTOR_HPP
