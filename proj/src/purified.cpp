#include "nqs/purified.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace nqs {

namespace {

double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }
double logistic(double x) { return x > 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x)); }

}  // namespace

int PurifiedNet::n_parameters() const {
  return n_visible() + n_hidden() + n_env() + n_visible() * n_hidden() + n_visible() * n_env();
}

double PurifiedNet::log_marginal(const SpinConfiguration& v, const SpinConfiguration& e) const {
  if (v.size() != n_visible() || e.size() != n_env()) {
    throw ShapeError("purified net: configuration sizes do not match");
  }
  double log = 0.0;
  for (int i = 0; i < n_visible(); ++i) log += a(i) * v.bit(i);
  for (int m = 0; m < n_env(); ++m) log += c(m) * e.bit(m);
  for (int i = 0; i < n_visible(); ++i) {
    if (v.bit(i) == 0) continue;
    for (int m = 0; m < n_env(); ++m) log += U(i, m) * e.bit(m);
  }
  for (int j = 0; j < n_hidden(); ++j) {
    double theta = b(j);
    for (int i = 0; i < n_visible(); ++i) theta += W(i, j) * v.bit(i);
    log += softplus(theta);
  }
  return log;
}

Eigen::VectorXd PurifiedNet::log_derivatives(const SpinConfiguration& v,
                                             const SpinConfiguration& e) const {
  const int nv = n_visible(), nh = n_hidden(), ne = n_env();
  Eigen::VectorXd g(n_parameters());
  for (int i = 0; i < nv; ++i) g(i) = v.bit(i);
  for (int j = 0; j < nh; ++j) {
    double theta = b(j);
    for (int i = 0; i < nv; ++i) theta += W(i, j) * v.bit(i);
    g(nv + j) = logistic(theta);
  }
  for (int m = 0; m < ne; ++m) g(nv + nh + m) = e.bit(m);
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nh; ++j) {
      g(nv + nh + ne + i * nh + j) = v.bit(i) * g(nv + j);
    }
  }
  const int off = nv + nh + ne + nv * nh;
  for (int i = 0; i < nv; ++i) {
    for (int m = 0; m < ne; ++m) g(off + i * ne + m) = v.bit(i) * e.bit(m);
  }
  return g;
}

Eigen::VectorXd PurifiedNet::parameters() const {
  Eigen::VectorXd p(n_parameters());
  const int nv = n_visible(), nh = n_hidden(), ne = n_env();
  p.head(nv) = a;
  p.segment(nv, nh) = b;
  p.segment(nv + nh, ne) = c;
  for (int i = 0; i < nv; ++i) p.segment(nv + nh + ne + i * nh, nh) = W.row(i).transpose();
  const int off = nv + nh + ne + nv * nh;
  for (int i = 0; i < nv; ++i) p.segment(off + i * ne, ne) = U.row(i).transpose();
  return p;
}

void PurifiedNet::set_parameters(const Eigen::VectorXd& p) {
  if (p.size() != n_parameters()) throw ShapeError("purified net parameter size mismatch");
  const int nv = n_visible(), nh = n_hidden(), ne = n_env();
  a = p.head(nv);
  b = p.segment(nv, nh);
  c = p.segment(nv + nh, ne);
  for (int i = 0; i < nv; ++i) W.row(i) = p.segment(nv + nh + ne + i * nh, nh).transpose();
  const int off = nv + nh + ne + nv * nh;
  for (int i = 0; i < nv; ++i) U.row(i) = p.segment(off + i * ne, ne).transpose();
}

PurifiedRbm::PurifiedRbm(int n_visible, int n_hidden, int n_env) {
  if (n_visible < 1 || n_hidden < 0 || n_env < 0) throw ShapeError("invalid purified shape");
  for (PurifiedNet* net : {&amplitude, &phase}) {
    net->a = Eigen::VectorXd::Zero(n_visible);
    net->b = Eigen::VectorXd::Zero(n_hidden);
    net->c = Eigen::VectorXd::Zero(n_env);
    net->W = Eigen::MatrixXd::Zero(n_visible, n_hidden);
    net->U = Eigen::MatrixXd::Zero(n_visible, n_env);
  }
}

PurifiedRbm PurifiedRbm::random(int n_visible, int n_hidden, int n_env, double scale,
                                std::uint64_t seed) {
  PurifiedRbm p(n_visible, n_hidden, n_env);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (PurifiedNet* net : {&p.amplitude, &p.phase}) {
    Eigen::VectorXd params(net->n_parameters());
    for (Eigen::Index k = 0; k < params.size(); ++k) params(k) = scale * gauss(rng);
    net->set_parameters(params);
  }
  return p;
}

Complex PurifiedRbm::psi_tilde(const SpinConfiguration& v, const SpinConfiguration& e) const {
  const double l1 = amplitude.log_marginal(v, e);
  const double l2 = phase.log_marginal(v, e);
  return std::exp(Complex(l1 / 2.0, l2 / 2.0));
}

double PurifiedRbm::log_z1() const {
  const int nv = n_visible();
  const int ne = n_env();
  if (nv + ne > 14) throw CapacityError("purified partition limited to 14 total sites");
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(std::size_t{1} << (nv + ne));
  for (std::uint64_t vi = 0; vi < (std::uint64_t{1} << nv); ++vi) {
    const auto v = SpinConfiguration::from_index(vi, nv);
    for (std::uint64_t ei = 0; ei < (std::uint64_t{1} << ne); ++ei) {
      const auto e = SpinConfiguration::from_index(ei, ne);
      const double l = amplitude.log_marginal(v, e);
      logs.push_back(l);
      max_log = std::max(max_log, l);
    }
  }
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - max_log);
  return max_log + std::log(sum);
}

Complex PurifiedRbm::purified_amplitude(const SpinConfiguration& v,
                                        const SpinConfiguration& e) const {
  return psi_tilde(v, e) * std::exp(-0.5 * log_z1());
}

Eigen::MatrixXcd PurifiedRbm::psi_matrix() const {
  const int nv = n_visible();
  const int ne = n_env();
  if (nv + ne > 14) throw CapacityError("purified materialization limited to 14 total sites");
  Eigen::MatrixXcd m(Eigen::Index{1} << nv, Eigen::Index{1} << ne);
  for (std::uint64_t vi = 0; vi < (std::uint64_t{1} << nv); ++vi) {
    const auto v = SpinConfiguration::from_index(vi, nv);
    for (std::uint64_t ei = 0; ei < (std::uint64_t{1} << ne); ++ei) {
      const auto e = SpinConfiguration::from_index(ei, ne);
      m(static_cast<Eigen::Index>(vi), static_cast<Eigen::Index>(ei)) = psi_tilde(v, e);
    }
  }
  return m;
}

Eigen::MatrixXcd PurifiedRbm::density_matrix() const {
  if (n_visible() > 10) throw CapacityError("density matrix limited to 10 visible sites");
  const Eigen::MatrixXcd m = psi_matrix();
  Eigen::MatrixXcd rho = m * m.adjoint();
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) throw InternalError("density matrix has nonpositive trace");
  rho /= tr;
  assert_density_matrix(rho);
  return rho;
}

Eigen::VectorXd PurifiedRbm::parameters() const {
  Eigen::VectorXd p(n_parameters());
  p.head(amplitude.n_parameters()) = amplitude.parameters();
  p.tail(phase.n_parameters()) = phase.parameters();
  return p;
}

void PurifiedRbm::set_parameters(const Eigen::VectorXd& p) {
  if (p.size() != n_parameters()) throw ShapeError("purified parameter size mismatch");
  amplitude.set_parameters(p.head(amplitude.n_parameters()));
  phase.set_parameters(p.tail(phase.n_parameters()));
}

void assert_density_matrix(const Eigen::MatrixXcd& rho, double tol) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw InternalError("density matrix not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > tol) {
    throw InternalError("density matrix trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success) throw InternalError("density eigensolver failed");
  if (solver.eigenvalues()(0) < -1e-12) {
    throw InternalError("density matrix has a negative eigenvalue");
  }
}

double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw ShapeError("trace distance of unequal shapes");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho - sigma);
  if (solver.info() != Eigen::Success) throw InternalError("eigensolver failed");
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace nqs
