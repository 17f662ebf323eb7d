#include "nqs/spin.hpp"

#include <string>

namespace nqs {

const char* to_string(SpinConvention c) {
  return c == SpinConvention::kZeroOne ? "zero-one" : "plus-minus-one";
}

SpinConfiguration::SpinConfiguration(std::vector<std::int8_t> values,
                                     SpinConvention convention)
    : values_(std::move(values)), convention_(convention) {
  for (std::int8_t v : values_) {
    const bool ok = convention_ == SpinConvention::kZeroOne ? (v == 0 || v == 1)
                                                            : (v == -1 || v == 1);
    if (!ok) {
      throw DomainError("spin value " + std::to_string(static_cast<int>(v)) +
                        " invalid under convention " + to_string(convention_));
    }
  }
}

SpinConfiguration SpinConfiguration::zeros(int n, SpinConvention c) {
  std::vector<std::int8_t> v(static_cast<std::size_t>(n),
                             c == SpinConvention::kZeroOne ? std::int8_t{0} : std::int8_t{1});
  return SpinConfiguration(std::move(v), c);
}

SpinConfiguration SpinConfiguration::from_index(std::uint64_t index, int n,
                                                SpinConvention c) {
  SpinConfiguration out = zeros(n, c);
  for (int i = 0; i < n; ++i) {
    const int b = static_cast<int>((index >> (n - 1 - i)) & 1u);
    out.set_bit(i, b);
  }
  return out;
}

void SpinConfiguration::set_bit(int i, int b) {
  values_[static_cast<std::size_t>(i)] =
      convention_ == SpinConvention::kZeroOne ? static_cast<std::int8_t>(b)
                                              : static_cast<std::int8_t>(1 - 2 * b);
}

void SpinConfiguration::flip(int i) { set_bit(i, 1 - bit(i)); }

std::uint64_t SpinConfiguration::index() const {
  std::uint64_t idx = 0;
  for (int i = 0; i < size(); ++i) idx = (idx << 1) | static_cast<std::uint64_t>(bit(i));
  return idx;
}

SpinConfiguration SpinConfiguration::to(SpinConvention c) const {
  if (c == convention_) return *this;
  SpinConfiguration out = zeros(size(), c);
  for (int i = 0; i < size(); ++i) out.set_bit(i, bit(i));
  return out;
}

int SpinConfiguration::sum_bits() const {
  int s = 0;
  for (int i = 0; i < size(); ++i) s += bit(i);
  return s;
}

bool SpinConfiguration::operator==(const SpinConfiguration& other) const {
  if (size() != other.size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (bit(i) != other.bit(i)) return false;
  }
  return true;
}

}  // namespace nqs
