#ifndef NQS_PURIFIED_HPP
#define NQS_PURIFIED_HPP

#include <Eigen/Core>
#include <cstdint>

#include "nqs/spin.hpp"

namespace nqs {

// Real-parameter RBM with environment units: hidden units connect to the
// visibles, environment units connect to the visibles, no h-e edges.
// log m(v,e) = a.v + c.e + v^T U e + sum_j log(1+e^{b_j + sum_i v_i W_ij}).
struct PurifiedNet {
  Eigen::VectorXd a;  // visible biases
  Eigen::VectorXd b;  // hidden biases
  Eigen::VectorXd c;  // environment biases
  Eigen::MatrixXd W;  // (nv x nh)
  Eigen::MatrixXd U;  // (nv x ne)

  int n_visible() const { return static_cast<int>(a.size()); }
  int n_hidden() const { return static_cast<int>(b.size()); }
  int n_env() const { return static_cast<int>(c.size()); }
  int n_parameters() const;

  double log_marginal(const SpinConfiguration& v, const SpinConfiguration& e) const;
  // d log m / d[a, b, c, W row-major, U row-major]
  Eigen::VectorXd log_derivatives(const SpinConfiguration& v, const SpinConfiguration& e) const;

  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::VectorXd& p);
};

// Latent-space purification: amplitude and phase networks of identical
// (n_visible, n_env) shape define
//   Psi_SE(v,e) = sqrt(m1(v,e)/Z1) * exp(i log(m2(v,e))/2).
class PurifiedRbm {
 public:
  PurifiedRbm(int n_visible, int n_hidden, int n_env);
  static PurifiedRbm random(int n_visible, int n_hidden, int n_env, double scale,
                            std::uint64_t seed);

  int n_visible() const { return amplitude.n_visible(); }
  int n_hidden() const { return amplitude.n_hidden(); }
  int n_env() const { return amplitude.n_env(); }

  // Unnormalized coefficient e^{(L1 + i L2)/2}; |psi_tilde|^2 = m1.
  Complex psi_tilde(const SpinConfiguration& v, const SpinConfiguration& e) const;

  // Exact partition function of the amplitude network over (v,e); guarded to
  // n_visible + n_env <= 14 sites.
  double log_z1() const;

  // Normalized purified coefficient Psi_SE(v,e).
  Complex purified_amplitude(const SpinConfiguration& v, const SpinConfiguration& e) const;

  // Matrix of psi_tilde over (v, e) pairs, big-endian on both indices.
  Eigen::MatrixXcd psi_matrix() const;

  // rho[v,v'] = sum_e Psi(v,e) Psi*(v',e), normalized to trace 1. Guarded to
  // n_visible <= 10; Hermiticity/positivity/trace are asserted on every call.
  Eigen::MatrixXcd density_matrix() const;

  // Parameter packing: [amplitude net, phase net].
  int n_parameters() const { return amplitude.n_parameters() + phase.n_parameters(); }
  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::VectorXd& p);

  PurifiedNet amplitude;
  PurifiedNet phase;
};

// Checks that a density matrix is Hermitian, positive semidefinite (within
// tol) and unit trace; throws InternalError otherwise.
void assert_density_matrix(const Eigen::MatrixXcd& rho, double tol = 1e-10);

// Half the trace norm of rho - sigma.
double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

}  // namespace nqs

#endif  // NQS_PURIFIED_HPP
