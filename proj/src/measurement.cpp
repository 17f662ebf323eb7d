#include "nqs/measurement.hpp"

#include <json.hpp>

#include "nqs/statevector.hpp"

namespace nqs {

void MeasurementRecord::validate() const {
  if (basis.empty()) throw ConfigError("measurement record needs a basis string");
  for (char c : basis) {
    if (c != 'Z' && c != 'X' && c != 'Y') {
      throw ConfigError(std::string("basis characters must be Z/X/Y, got '") + c + "'");
    }
  }
  if (probabilities.size() != (Eigen::Index{1} << basis.size())) {
    throw ShapeError("probability table size != 2^sites for basis " + basis);
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    if (probabilities(i) < -1e-12) throw DomainError("negative probability in record " + basis);
    sum += probabilities(i);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("record " + basis + " not normalized within 1e-9");
  }
}

Eigen::Matrix2cd basis_rotation(char pauli) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  switch (pauli) {
    case 'Z':
      return Eigen::Matrix2cd::Identity();
    case 'X':
      return h;
    case 'Y': {
      Eigen::Matrix2cd sdg = Eigen::Matrix2cd::Zero();
      sdg(0, 0) = 1.0;
      sdg(1, 1) = Complex(0.0, -1.0);
      return h * sdg;
    }
    default:
      throw ConfigError(std::string("unknown basis character '") + pauli + "'");
  }
}

DenseState rotate_state(const DenseState& state, const std::string& basis) {
  if (static_cast<int>(basis.size()) != state.n_sites) {
    throw ShapeError("basis length != state sites");
  }
  DenseState out = state;
  for (int q = 0; q < state.n_sites; ++q) {
    if (basis[static_cast<std::size_t>(q)] == 'Z') continue;
    apply_single_qubit(out.amplitudes, state.n_sites, q,
                       basis_rotation(basis[static_cast<std::size_t>(q)]));
  }
  return out;
}

Eigen::VectorXd measurement_probabilities(const DenseState& state, const std::string& basis) {
  const DenseState rotated = rotate_state(state, basis);
  const double nrm = rotated.amplitudes.squaredNorm();
  if (!(nrm > 0.0)) throw DomainError("cannot measure a null state");
  return rotated.amplitudes.cwiseAbs2() / nrm;
}

Eigen::VectorXd measurement_probabilities(const Eigen::MatrixXcd& rho, const std::string& basis) {
  const int n = static_cast<int>(basis.size());
  if (rho.rows() != (Eigen::Index{1} << n) || rho.cols() != rho.rows()) {
    throw ShapeError("density matrix size != 2^basis length");
  }
  // diag(U rho U^dagger) = row-wise norms of U applied to each column pair
  Eigen::MatrixXcd m = rho;
  // left-multiply by U (columns), then right-multiply by U^dagger (rows)
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Eigen::VectorXcd colv = m.col(col);
    for (int q = 0; q < n; ++q) {
      if (basis[static_cast<std::size_t>(q)] == 'Z') continue;
      apply_single_qubit(colv, n, q, basis_rotation(basis[static_cast<std::size_t>(q)]));
    }
    m.col(col) = colv;
  }
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    Eigen::VectorXcd rowv = m.row(row).conjugate().transpose();
    for (int q = 0; q < n; ++q) {
      if (basis[static_cast<std::size_t>(q)] == 'Z') continue;
      apply_single_qubit(rowv, n, q, basis_rotation(basis[static_cast<std::size_t>(q)]));
    }
    m.row(row) = rowv.conjugate().transpose();
  }
  Eigen::VectorXd probs(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) probs(i) = m(i, i).real();
  const double sum = probs.sum();
  if (!(sum > 0.0)) throw DomainError("degenerate probability table");
  return probs / sum;
}

std::vector<std::string> all_pauli_bases(int n) {
  const char letters[3] = {'Z', 'X', 'Y'};
  std::vector<std::string> bases;
  std::string cur(static_cast<std::size_t>(n), 'Z');
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  const std::int64_t total = static_cast<std::int64_t>(std::pow(3.0, n) + 0.5);
  for (std::int64_t k = 0; k < total; ++k) {
    std::int64_t rem = k;
    for (int i = n - 1; i >= 0; --i) {
      cur[static_cast<std::size_t>(i)] = letters[rem % 3];
      rem /= 3;
    }
    bases.push_back(cur);
  }
  return bases;
}

std::vector<MeasurementRecord> read_records_jsonl(std::istream& is) {
  std::vector<MeasurementRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("records line " + std::to_string(line_no) + ": " + e.what());
    }
    MeasurementRecord rec;
    rec.basis = j.at("basis").get<std::string>();
    if (j.contains("probs")) {
      const auto probs = j.at("probs").get<std::vector<double>>();
      rec.probabilities = Eigen::Map<const Eigen::VectorXd>(probs.data(),
                                                            static_cast<Eigen::Index>(probs.size()));
    } else if (j.contains("counts")) {
      const auto counts = j.at("counts").get<std::vector<double>>();
      rec.shots = j.at("shots").get<long long>();
      if (rec.shots <= 0) throw ConfigError("records line " + std::to_string(line_no) +
                                            ": shots must be positive");
      rec.from_counts = true;
      rec.probabilities.resize(static_cast<Eigen::Index>(counts.size()));
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw DomainError("negative count in records line " +
                                             std::to_string(line_no));
        rec.probabilities(static_cast<Eigen::Index>(i)) =
            counts[i] / static_cast<double>(rec.shots);
      }
    } else {
      throw ConfigError("records line " + std::to_string(line_no) +
                        ": needs 'probs' or 'counts'");
    }
    rec.validate();
    records.push_back(std::move(rec));
  }
  return records;
}

void write_records_jsonl(const std::vector<MeasurementRecord>& records, std::ostream& os) {
  for (const MeasurementRecord& rec : records) {
    nlohmann::ordered_json j;
    j["basis"] = rec.basis;
    if (rec.from_counts) {
      std::vector<double> counts(static_cast<std::size_t>(rec.probabilities.size()));
      for (Eigen::Index i = 0; i < rec.probabilities.size(); ++i) {
        counts[static_cast<std::size_t>(i)] =
            rec.probabilities(i) * static_cast<double>(rec.shots);
      }
      j["counts"] = counts;
      j["shots"] = rec.shots;
    } else {
      std::vector<double> probs(static_cast<std::size_t>(rec.probabilities.size()));
      for (Eigen::Index i = 0; i < rec.probabilities.size(); ++i) {
        probs[static_cast<std::size_t>(i)] = rec.probabilities(i);
      }
      j["probs"] = probs;
    }
    os << j.dump() << "\n";
  }
}

}  // namespace nqs
