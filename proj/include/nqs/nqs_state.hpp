#ifndef NQS_NQS_STATE_HPP
#define NQS_NQS_STATE_HPP

#include <Eigen/Core>

#include "nqs/common.hpp"
#include "nqs/spin.hpp"

namespace nqs {

// Anything exposing an unnormalized complex amplitude Psi(v). States accept
// configurations in either convention and map values internally.
class NqsState {
 public:
  virtual ~NqsState() = default;

  virtual int n_visible() const = 0;
  virtual LogAmplitude log_amplitude(const SpinConfiguration& v) const = 0;

  Complex amplitude(const SpinConfiguration& v) const { return log_amplitude(v).value(); }

 protected:
  void check_size(const SpinConfiguration& v) const {
    if (v.size() != n_visible()) {
      throw ShapeError("configuration length " + std::to_string(v.size()) +
                       " != visible count " + std::to_string(n_visible()));
    }
  }
};

// A state whose parameters can be read, written and differentiated. The
// parameter vector is complex; purely real models keep imaginary parts zero.
class TrainableState : public NqsState {
 public:
  virtual int n_parameters() const = 0;
  virtual Eigen::VectorXcd parameters() const = 0;
  virtual void set_parameters(const Eigen::VectorXcd& p) = 0;

  // Holomorphic log-derivatives O_k(v) = d log Psi(v) / d Omega_k.
  virtual Eigen::VectorXcd log_derivatives(const SpinConfiguration& v) const = 0;
};

}  // namespace nqs

#endif  // NQS_NQS_STATE_HPP
