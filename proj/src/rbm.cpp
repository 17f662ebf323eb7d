#include "nqs/rbm.hpp"

#include <random>

#include "nqs/logsum.hpp"

namespace nqs {

RbmState::RbmState(int n_visible, int n_hidden, SpinConvention hidden_domain,
                   SpinConvention visible_domain)
    : a(Eigen::VectorXcd::Zero(n_visible)),
      b(Eigen::VectorXcd::Zero(n_hidden)),
      W(Eigen::MatrixXcd::Zero(n_visible, n_hidden)),
      hidden_domain_(hidden_domain),
      visible_domain_(visible_domain) {
  if (n_visible < 1 || n_hidden < 0) throw ShapeError("invalid RBM shape");
}

RbmState RbmState::random(int n_visible, int n_hidden, double scale, std::uint64_t seed,
                          SpinConvention hidden_domain, SpinConvention visible_domain) {
  RbmState s(n_visible, n_hidden, hidden_domain, visible_domain);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] { return scale * Complex(gauss(rng), gauss(rng)); };
  for (int i = 0; i < n_visible; ++i) s.a(i) = draw();
  for (int j = 0; j < n_hidden; ++j) s.b(j) = draw();
  for (int i = 0; i < n_visible; ++i)
    for (int j = 0; j < n_hidden; ++j) s.W(i, j) = draw();
  return s;
}

RbmState RbmState::random_local(int n_visible, int window, int per_window, double scale,
                                std::uint64_t seed) {
  if (window < 1 || window > n_visible) throw ShapeError("invalid locality window");
  const int positions = n_visible - window + 1;
  RbmState s(n_visible, positions * per_window);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] { return scale * Complex(gauss(rng), gauss(rng)); };
  for (int i = 0; i < n_visible; ++i) s.a(i) = draw();
  int j = 0;
  for (int pos = 0; pos < positions; ++pos) {
    for (int rep = 0; rep < per_window; ++rep, ++j) {
      s.b(j) = draw();
      for (int i = pos; i < pos + window; ++i) s.W(i, j) = draw();
    }
  }
  return s;
}

Eigen::VectorXcd RbmState::theta(const SpinConfiguration& v) const {
  check_size(v);
  Eigen::VectorXcd th = b;
  for (int i = 0; i < n_visible(); ++i) {
    const double x = v.value_as(visible_domain_, i);
    if (x != 0.0) th += x * W.row(i).transpose();
  }
  return th;
}

LogAmplitude RbmState::log_amplitude(const SpinConfiguration& v) const {
  const Eigen::VectorXcd th = theta(v);
  Complex log(0.0, 0.0);
  for (int i = 0; i < n_visible(); ++i) log += a(i) * v.value_as(visible_domain_, i);
  for (int j = 0; j < n_hidden(); ++j) {
    const LogFactor g = hidden_domain_ == SpinConvention::kZeroOne
                            ? log_one_plus_exp(th(j))
                            : log_two_cosh(th(j));
    if (g.is_zero) return LogAmplitude::zero();
    log += g.log;
  }
  return LogAmplitude{log, false};
}

Eigen::VectorXcd RbmState::log_derivatives(const SpinConfiguration& v) const {
  const Eigen::VectorXcd th = theta(v);
  const int nv = n_visible();
  const int nh = n_hidden();
  Eigen::VectorXcd sigma(nh);
  for (int j = 0; j < nh; ++j) {
    if (hidden_domain_ == SpinConvention::kZeroOne) {
      // e^theta / (1 + e^theta), bounded evaluation
      const Complex t = th(j);
      if (t.real() > 0.0) {
        const Complex d = 1.0 + std::exp(-t);
        if (std::abs(d) < kZeroFactorTol) {
          throw ZeroAmplitudeError("log-derivative at zero-amplitude configuration");
        }
        sigma(j) = 1.0 / d;
      } else {
        const Complex e = std::exp(t);
        const Complex d = 1.0 + e;
        if (std::abs(d) < kZeroFactorTol) {
          throw ZeroAmplitudeError("log-derivative at zero-amplitude configuration");
        }
        sigma(j) = e / d;
      }
    } else {
      if (std::abs(std::cosh(th(j))) < kZeroFactorTol) {
        throw ZeroAmplitudeError("log-derivative at zero-amplitude configuration");
      }
      sigma(j) = std::tanh(th(j));
    }
  }
  Eigen::VectorXcd grad(n_parameters());
  for (int i = 0; i < nv; ++i) grad(i) = v.value_as(visible_domain_, i);
  grad.segment(nv, nh) = sigma;
  for (int i = 0; i < nv; ++i) {
    const double x = v.value_as(visible_domain_, i);
    for (int j = 0; j < nh; ++j) grad(nv + nh + i * nh + j) = x * sigma(j);
  }
  return grad;
}

int RbmState::n_parameters() const { return n_visible() + n_hidden() + n_visible() * n_hidden(); }

Eigen::VectorXcd RbmState::parameters() const {
  Eigen::VectorXcd p(n_parameters());
  p.head(n_visible()) = a;
  p.segment(n_visible(), n_hidden()) = b;
  for (int i = 0; i < n_visible(); ++i) {
    p.segment(n_visible() + n_hidden() + i * n_hidden(), n_hidden()) = W.row(i).transpose();
  }
  return p;
}

void RbmState::set_parameters(const Eigen::VectorXcd& p) {
  if (p.size() != n_parameters()) throw ShapeError("parameter vector size mismatch");
  a = p.head(n_visible());
  b = p.segment(n_visible(), n_hidden());
  for (int i = 0; i < n_visible(); ++i) {
    W.row(i) = p.segment(n_visible() + n_hidden() + i * n_hidden(), n_hidden()).transpose();
  }
}

ConvertedRbm convert_convention(const RbmState& s, SpinConvention visible_target,
                                SpinConvention hidden_target) {
  RbmState cur = s;
  Complex log_scale(0.0, 0.0);

  // Hidden-layer substitution first: it only moves weight into visible biases
  // and the constant, leaving the visible convention untouched.
  if (hidden_target != cur.hidden_domain()) {
    RbmState next(cur.n_visible(), cur.n_hidden(), hidden_target, cur.visible_domain());
    if (cur.hidden_domain() == SpinConvention::kZeroOne) {
      // 1 + e^theta = e^{theta/2} * 2 cosh(theta/2)
      next.b = cur.b / 2.0;
      next.W = cur.W / 2.0;
      next.a = cur.a + 0.5 * cur.W.rowwise().sum();
      log_scale += 0.5 * cur.b.sum();
    } else {
      // 2 cosh(theta) = e^{theta} * (1 + e^{-2 theta})
      next.b = -2.0 * cur.b;
      next.W = -2.0 * cur.W;
      next.a = cur.a + cur.W.rowwise().sum();
      log_scale += cur.b.sum();
    }
    cur = next;
  }

  if (visible_target != cur.visible_domain()) {
    RbmState next(cur.n_visible(), cur.n_hidden(), cur.hidden_domain(), visible_target);
    if (cur.visible_domain() == SpinConvention::kZeroOne) {
      // x = (1 - s)/2
      next.a = -cur.a / 2.0;
      next.W = -cur.W / 2.0;
      next.b = cur.b + 0.5 * cur.W.colwise().sum().transpose();
      log_scale += 0.5 * cur.a.sum();
    } else {
      // s = 1 - 2v
      next.a = -2.0 * cur.a;
      next.W = -2.0 * cur.W;
      next.b = cur.b + cur.W.colwise().sum().transpose();
      log_scale += cur.a.sum();
    }
    cur = next;
  }

  return ConvertedRbm{std::move(cur), log_scale};
}

}  // namespace nqs
