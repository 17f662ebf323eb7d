#include "nqs/dbm.hpp"

#include <random>
#include <vector>

#include "nqs/bm.hpp"
#include "nqs/logsum.hpp"

namespace nqs {

DbmState::DbmState(int n_visible, int n_hidden_shallow, int n_hidden_deep,
                   SpinConvention hidden_domain, SpinConvention visible_domain)
    : a(Eigen::VectorXcd::Zero(n_visible)),
      b(Eigen::VectorXcd::Zero(n_hidden_shallow)),
      c(Eigen::VectorXcd::Zero(n_hidden_deep)),
      W_vh(Eigen::MatrixXcd::Zero(n_visible, n_hidden_shallow)),
      W_hg(Eigen::MatrixXcd::Zero(n_hidden_shallow, n_hidden_deep)),
      hidden_domain_(hidden_domain),
      visible_domain_(visible_domain) {
  if (n_visible < 1 || n_hidden_shallow < 0 || n_hidden_deep < 0) {
    throw ShapeError("invalid DBM shape");
  }
}

DbmState DbmState::random(int n_visible, int n_hidden_shallow, int n_hidden_deep, double scale,
                          std::uint64_t seed, SpinConvention hidden_domain,
                          SpinConvention visible_domain) {
  DbmState s(n_visible, n_hidden_shallow, n_hidden_deep, hidden_domain, visible_domain);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] { return scale * Complex(gauss(rng), gauss(rng)); };
  for (int i = 0; i < n_visible; ++i) s.a(i) = draw();
  for (int j = 0; j < n_hidden_shallow; ++j) s.b(j) = draw();
  for (int k = 0; k < n_hidden_deep; ++k) s.c(k) = draw();
  for (int i = 0; i < n_visible; ++i)
    for (int j = 0; j < n_hidden_shallow; ++j) s.W_vh(i, j) = draw();
  for (int j = 0; j < n_hidden_shallow; ++j)
    for (int k = 0; k < n_hidden_deep; ++k) s.W_hg(j, k) = draw();
  return s;
}

LogAmplitude DbmState::log_amplitude(const SpinConfiguration& v) const {
  check_size(v);
  const int nh = n_hidden_shallow();
  const int ng = n_hidden_deep();
  if (nh + ng > kMaxEnumeratedHidden) {
    throw CapacityError("DBM evaluation limited to " + std::to_string(kMaxEnumeratedHidden) +
                        " total hidden units");
  }

  Complex vis(0.0, 0.0);
  for (int i = 0; i < n_visible(); ++i) vis += a(i) * v.value_as(visible_domain_, i);

  Eigen::VectorXcd th0 = b;
  for (int i = 0; i < n_visible(); ++i) {
    const double x = v.value_as(visible_domain_, i);
    if (x != 0.0) th0 += x * W_vh.row(i).transpose();
  }

  const std::uint64_t total = std::uint64_t{1} << ng;
  LogSumAccumulator acc;
  std::vector<double> gval(static_cast<std::size_t>(ng));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Complex expo = vis;
    for (int k = 0; k < ng; ++k) {
      const int bit = static_cast<int>((mask >> k) & 1u);
      gval[static_cast<std::size_t>(k)] =
          hidden_domain_ == SpinConvention::kZeroOne ? bit : 1 - 2 * bit;
      expo += c(k) * gval[static_cast<std::size_t>(k)];
    }
    bool term_zero = false;
    for (int j = 0; j < nh; ++j) {
      Complex th = th0(j);
      for (int k = 0; k < ng; ++k) th += W_hg(j, k) * gval[static_cast<std::size_t>(k)];
      const LogFactor g = hidden_domain_ == SpinConvention::kZeroOne ? log_one_plus_exp(th)
                                                                     : log_two_cosh(th);
      if (g.is_zero) {
        term_zero = true;
        break;
      }
      expo += g.log;
    }
    if (!term_zero) acc.add(expo);
  }
  return acc.result();
}

}  // namespace nqs
