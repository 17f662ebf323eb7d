#ifndef NQS_LOGSUM_HPP
#define NQS_LOGSUM_HPP

#include <cmath>

#include "nqs/common.hpp"

namespace nqs {

// A single multiplicative factor in log form, with exact-zero detection.
struct LogFactor {
  Complex log{0.0, 0.0};
  bool is_zero = false;
};

inline constexpr double kZeroFactorTol = 1e-12;

// log(1 + e^z), evaluated from the side that keeps the exponential bounded.
inline LogFactor log_one_plus_exp(Complex z) {
  if (z.real() > 0.0) {
    const Complex d = 1.0 + std::exp(-z);
    if (std::abs(d) < kZeroFactorTol) return {Complex(0, 0), true};
    return {z + std::log(d), false};
  }
  const Complex d = 1.0 + std::exp(z);
  if (std::abs(d) < kZeroFactorTol) return {Complex(0, 0), true};
  return {std::log(d), false};
}

// log(2 cosh z).
inline LogFactor log_two_cosh(Complex z) {
  if (z.real() > 0.0) {
    const Complex d = 1.0 + std::exp(-2.0 * z);
    if (std::abs(d) < kZeroFactorTol) return {Complex(0, 0), true};
    return {z + std::log(d), false};
  }
  const Complex d = 1.0 + std::exp(2.0 * z);
  if (std::abs(d) < kZeroFactorTol) return {Complex(0, 0), true};
  return {-z + std::log(d), false};
}

// Streaming log(sum_t e^{z_t}) over complex exponents: keeps a running real
// shift m = max Re(z) so partial sums never overflow.
class LogSumAccumulator {
 public:
  void add(Complex z) {
    if (empty_) {
      shift_ = z.real();
      sum_ = std::exp(z - shift_);
      empty_ = false;
      return;
    }
    if (z.real() > shift_) {
      sum_ *= std::exp(Complex(shift_ - z.real(), 0.0));
      shift_ = z.real();
    }
    sum_ += std::exp(z - shift_);
  }

  // Merges another accumulator (deterministic given call order).
  void merge(const LogSumAccumulator& other) {
    if (other.empty_) return;
    if (empty_) {
      *this = other;
      return;
    }
    if (other.shift_ > shift_) {
      sum_ *= std::exp(Complex(shift_ - other.shift_, 0.0));
      shift_ = other.shift_;
    }
    sum_ += other.sum_ * std::exp(Complex(other.shift_ - shift_, 0.0));
  }

  LogAmplitude result(double zero_tol = 1e-14) const {
    if (empty_ || std::abs(sum_) < zero_tol) return LogAmplitude::zero();
    return LogAmplitude{shift_ + std::log(sum_), false};
  }

 private:
  bool empty_ = true;
  double shift_ = 0.0;
  Complex sum_{0.0, 0.0};
};

}  // namespace nqs

#endif  // NQS_LOGSUM_HPP
