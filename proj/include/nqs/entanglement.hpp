#ifndef NQS_ENTANGLEMENT_HPP
#define NQS_ENTANGLEMENT_HPP

#include <vector>

#include "nqs/dense.hpp"
#include "nqs/rbm.hpp"

namespace nqs {

// Bipartition of a chain into region A and its complement.
struct Bipartition {
  std::vector<int> region_a;  // sorted, nonempty, proper subset
  int n_sites = 0;

  static Bipartition prefix(int cut, int n_sites);  // A = [0, cut)
  void validate() const;
};

// Partial trace of the normalized pure density over the complement of A.
// |A| is guarded to 10 sites.
Eigen::MatrixXcd reduced_density(const DenseState& state, const Bipartition& part);

// Renyi entropy S_alpha = log(Tr rho^alpha)/(1-alpha) from eigenvalues;
// alpha = 1 takes the von Neumann limit. Eigenvalues below 1e-14 are
// clamped to zero before logs.
double renyi_entropy(const Eigen::MatrixXcd& rho, double alpha);

// Number of hidden units whose connection set intersects both sides.
int crossing_count(const RbmState& s, const Bipartition& part);

struct AreaLawRow {
  int cut = 0;
  int size_a = 0;
  int crossings = 0;
  double s2 = 0.0;
  double bound = 0.0;
  double von_neumann = 0.0;
};

struct AreaLawReport {
  std::vector<AreaLawRow> rows;
  bool all_within_bound = true;
};

// For each prefix cut: S2 of the materialized state against the Schmidt
// bound crossings * log 2. Violations are recorded, not thrown.
AreaLawReport arealaw_probe(const RbmState& s, const std::vector<int>& cuts);

// Report CSV: "cut,size_a,crossings,s2,bound,von_neumann".
void write_arealaw_csv(const AreaLawReport& report, std::ostream& os);

}  // namespace nqs

#endif  // NQS_ENTANGLEMENT_HPP
