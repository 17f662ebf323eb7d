#ifndef NQS_SPIN_HPP
#define NQS_SPIN_HPP

#include <cstdint>
#include <vector>

#include "nqs/common.hpp"

namespace nqs {

// Local value convention for spin variables. The project-wide map between the
// two is v (zero-one) <-> 1-2v (plus-minus-one), matching the Pauli-Z
// eigenvalue convention z = 1-2v.
enum class SpinConvention { kZeroOne, kPlusMinusOne };

const char* to_string(SpinConvention c);

// Ordered sequence of binary local values with an explicit convention tag.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  SpinConfiguration(std::vector<std::int8_t> values, SpinConvention convention);

  // All-zeros (or all +1) configuration of n sites.
  static SpinConfiguration zeros(int n, SpinConvention c = SpinConvention::kZeroOne);

  // Decodes a big-endian basis index: site 0 is the most significant bit.
  static SpinConfiguration from_index(std::uint64_t index, int n,
                                      SpinConvention c = SpinConvention::kZeroOne);

  int size() const { return static_cast<int>(values_.size()); }
  SpinConvention convention() const { return convention_; }
  std::int8_t operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

  // Value of site i as a bit in {0,1} regardless of the stored convention.
  int bit(int i) const {
    const std::int8_t v = values_[static_cast<std::size_t>(i)];
    return convention_ == SpinConvention::kZeroOne ? v : (v == 1 ? 0 : 1);
  }

  // Value of site i reinterpreted under the requested convention.
  double value_as(SpinConvention wanted, int i) const {
    const int b = bit(i);
    return wanted == SpinConvention::kZeroOne ? static_cast<double>(b)
                                              : static_cast<double>(1 - 2 * b);
  }

  void set_bit(int i, int b);
  void flip(int i);

  // Big-endian basis index of the zero-one view.
  std::uint64_t index() const;

  // Same physical configuration expressed in another convention.
  SpinConfiguration to(SpinConvention c) const;

  int sum_bits() const;

  bool operator==(const SpinConfiguration& other) const;

 private:
  std::vector<std::int8_t> values_;
  SpinConvention convention_ = SpinConvention::kZeroOne;
};

}  // namespace nqs

#endif  // NQS_SPIN_HPP
