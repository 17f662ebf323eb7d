#ifndef NQS_MPS_HPP
#define NQS_MPS_HPP

#include <Eigen/Core>
#include <array>
#include <vector>

#include "nqs/hamiltonian.hpp"
#include "nqs/rbm.hpp"

namespace nqs {

// One rank-3 site tensor stored as two (left x right) matrices, one per
// physical value.
struct MpsSite {
  std::array<Eigen::MatrixXcd, 2> slice;

  int left_dim() const { return static_cast<int>(slice[0].rows()); }
  int right_dim() const { return static_cast<int>(slice[0].cols()); }
};

class MpsState {
 public:
  MpsState(std::vector<MpsSite> sites, Boundary boundary);

  int n_sites() const { return static_cast<int>(sites_.size()); }
  Boundary boundary() const { return boundary_; }
  const std::vector<MpsSite>& sites() const { return sites_; }
  std::vector<MpsSite>& sites() { return sites_; }

  // Bond dimensions between consecutive sites (n_sites-1 entries when open).
  std::vector<int> bond_dims() const;

 private:
  std::vector<MpsSite> sites_;
  Boundary boundary_;
};

// Left-to-right product of the selected physical slices (trace for periodic
// boundaries).
Complex mps_amplitude(const MpsState& mps, const SpinConfiguration& v);

struct MpsOptions {
  double svd_cutoff = 1e-12;  // relative singular-value cutoff
  int max_bond = 256;         // capacity guard on the raw construction
};

struct RbmMpsConversion {
  MpsState mps;
  Complex log_scale;  // Psi_rbm(v) = e^{log_scale} * mps_amplitude(v)
  std::vector<int> bond_dims;
};

// Open-boundary MPS of an RBM state: each hidden unit is contracted into the
// window of sites it touches, carrying its value across the bonds it spans;
// a two-way SVD sweep then compresses. Bond dimension before compression is
// 2^(#hidden units crossing the cut); exceeding max_bond raises CapacityError
// naming the cut. Requires zero-one conventions.
RbmMpsConversion rbm_to_mps(const RbmState& s, const MpsOptions& opt = {});

}  // namespace nqs

#endif  // NQS_MPS_HPP
