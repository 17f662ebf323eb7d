#ifndef NQS_COMMON_HPP
#define NQS_COMMON_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace nqs {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid value in user-facing configuration (unknown tag, bad key, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Dimension mismatch between containers that must agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard enumeration/materialization guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Evaluation hit a pole of an analytic activation.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Operation requires a different spin/hidden-unit convention.
class UnsupportedConventionError : public Error {
 public:
  using Error::Error;
};

// Amplitude ratio requested at a configuration with zero amplitude.
class ZeroAmplitudeError : public Error {
 public:
  using Error::Error;
};

// Optimization failure (non-finite gradient, diverging energy, ...).
class TrainingError : public Error {
 public:
  using Error::Error;
};

// KL divergence is infinite: model assigns zero mass where data has support.
class DivergenceInfiniteError : public Error {
 public:
  DivergenceInfiniteError(const std::string& what, std::string basis)
      : Error(what), basis_(std::move(basis)) {}
  const std::string& basis() const { return basis_; }

 private:
  std::string basis_;
};

// An internal invariant failed (e.g. non-Hermitian assembly).
class InternalError : public Error {
 public:
  using Error::Error;
};

// Log of an unnormalized amplitude. Exact zeros carry an explicit flag so
// downstream ratio arithmetic never touches -inf or NaN.
struct LogAmplitude {
  Complex log{0.0, 0.0};
  bool is_zero = false;

  static LogAmplitude zero() { return LogAmplitude{Complex(0.0, 0.0), true}; }

  Complex value() const { return is_zero ? Complex(0.0, 0.0) : std::exp(log); }
};

// Ratio psi(num)/psi(den); throws if the denominator amplitude is zero.
inline Complex amplitude_ratio(const LogAmplitude& num, const LogAmplitude& den) {
  if (den.is_zero) {
    throw ZeroAmplitudeError("amplitude ratio at zero-amplitude configuration");
  }
  if (num.is_zero) return Complex(0.0, 0.0);
  return std::exp(num.log - den.log);
}

}  // namespace nqs

#endif  // NQS_COMMON_HPP
