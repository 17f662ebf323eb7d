#ifndef NQS_HAMILTONIAN_HPP
#define NQS_HAMILTONIAN_HPP

#include <vector>

#include "nqs/nqs_state.hpp"

namespace nqs {

enum class Pauli { X, Y, Z };
enum class Boundary { kOpen, kPeriodic };

const char* to_string(Pauli p);
Boundary boundary_from_name(const std::string& name);
const char* to_string(Boundary b);

// One weighted Pauli string: coeff * prod_s P_s acting on distinct sites.
struct PauliTerm {
  Complex coeff;
  std::vector<std::pair<int, Pauli>> ops;  // sorted by site, sites unique
};

// Hermitian sum of Pauli strings on a chain of n sites. Construction sorts
// and validates terms and checks Hermiticity (every group of identical
// strings must have a real summed coefficient).
class PauliStringHamiltonian {
 public:
  PauliStringHamiltonian(int n_sites, Boundary boundary, std::vector<PauliTerm> terms);

  int n_sites() const { return n_sites_; }
  Boundary boundary() const { return boundary_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

 private:
  int n_sites_;
  Boundary boundary_;
  std::vector<PauliTerm> terms_;
};

// Nearest-neighbor bonds (i, i+1); periodic adds the wrap-around bond.
// Pairs are deduplicated, so rings of two sites carry a single bond.
std::vector<std::pair<int, int>> chain_bonds(int n, Boundary boundary, int step = 1);

// Transverse-field Ising chain: -J sum_<ij> Z_i Z_j - B sum_i X_i.
PauliStringHamiltonian build_tfim(int n, double J, double B, Boundary boundary);

// Antiferromagnetic Heisenberg chain with S = sigma/2:
// J sum_<ij> S_i.S_j = (J/4) sum_<ij> (XX + YY + ZZ).
PauliStringHamiltonian build_afh(int n, double J, Boundary boundary);

// Frustrated chain: J1 on nearest neighbors plus J2 on next-nearest.
PauliStringHamiltonian build_j1j2(int n, double J1, double J2, Boundary boundary);

// Local energy E_loc(v) = sum_{v'} <v|H|v'> Psi(v')/Psi(v). Configurations are
// zero-one basis labels with Pauli-Z eigenvalue z = 1-2v. Throws
// ZeroAmplitudeError when Psi(v) = 0.
Complex local_energy(const PauliStringHamiltonian& h, const NqsState& psi,
                     const SpinConfiguration& v);

// <v|P|v'> decomposition of a single term at configuration v: the complex
// prefactor (Z eigenvalues and Y phases) and the set of flipped sites.
struct TermAction {
  Complex factor;
  std::vector<int> flips;
};
TermAction term_action(const PauliTerm& term, const SpinConfiguration& v);

}  // namespace nqs

#endif  // NQS_HAMILTONIAN_HPP
