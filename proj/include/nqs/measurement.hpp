#ifndef NQS_MEASUREMENT_HPP
#define NQS_MEASUREMENT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nqs/dense.hpp"

namespace nqs {

// Measurement basis (one of Z/X/Y per site) plus the outcome probability
// table, either exact or estimated from counts.
struct MeasurementRecord {
  std::string basis;
  Eigen::VectorXd probabilities;
  bool from_counts = false;
  long long shots = 0;

  void validate() const;  // normalization within 1e-9, nonnegative entries
};

// Local change-of-basis unitary: Z -> I, X -> H, Y -> H S^dagger.
Eigen::Matrix2cd basis_rotation(char pauli);

// U psi with U the product of per-site rotations.
DenseState rotate_state(const DenseState& state, const std::string& basis);

// Outcome probabilities of a pure state / density matrix in a product basis.
Eigen::VectorXd measurement_probabilities(const DenseState& state, const std::string& basis);
Eigen::VectorXd measurement_probabilities(const Eigen::MatrixXcd& rho, const std::string& basis);

// All 3^n single-site Pauli settings in lexicographic Z<X<Y order.
std::vector<std::string> all_pauli_bases(int n);

// JSON-lines records: {"basis":"XZ","probs":[...]} or
// {"basis":"XZ","counts":[...],"shots":N}.
std::vector<MeasurementRecord> read_records_jsonl(std::istream& is);
void write_records_jsonl(const std::vector<MeasurementRecord>& records, std::ostream& os);

}  // namespace nqs

#endif  // NQS_MEASUREMENT_HPP
