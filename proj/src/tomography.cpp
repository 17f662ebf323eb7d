#include "nqs/tomography.hpp"

#include "nqs/statevector.hpp"

#include <cmath>
#include <random>

namespace nqs {

namespace {

constexpr double kTinyProb = 1e-300;
constexpr double kMinEta = 1e-10;

// Per-outcome weight of d log q_u in dD/dOmega, and the per-basis divergence.
struct BasisObjective {
  Eigen::VectorXd coeff;
  double divergence = 0.0;
};

BasisObjective basis_objective(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                               KlDirection direction, const std::string& basis) {
  BasisObjective out;
  out.coeff = Eigen::VectorXd::Zero(p.size());
  for (Eigen::Index u = 0; u < p.size(); ++u) {
    if (direction == KlDirection::kDataFirst) {
      if (p(u) <= 0.0) continue;
      if (q(u) < kTinyProb) {
        throw DivergenceInfiniteError("model assigns zero probability where data has support",
                                      basis);
      }
      out.divergence += p(u) * std::log(p(u) / q(u));
      out.coeff(u) = -p(u);
    } else {
      if (q(u) <= 0.0) continue;
      if (p(u) < kTinyProb) {
        throw DivergenceInfiniteError("data assigns zero probability where the model has support",
                                      basis);
      }
      const double ratio = std::log(q(u) / p(u));
      out.divergence += q(u) * ratio;
      out.coeff(u) = q(u) * (ratio + 1.0);
    }
  }
  return out;
}

// Applies U^T (transpose of the product of per-site rotations) to a vector.
void apply_transposed_rotation(Eigen::VectorXcd& vec, int n, const std::string& basis) {
  for (int q = 0; q < n; ++q) {
    const char c = basis[static_cast<std::size_t>(q)];
    if (c == 'Z') continue;
    apply_single_qubit(vec, n, q, basis_rotation(c).transpose());
  }
}

template <class Model, class EpochFn>
TomoResult descend(Model& model, const TrainConfig& cfg, EpochFn&& epoch) {
  cfg.validate();
  TomoResult result;
  double eta = cfg.learning_rate;
  double prev = std::numeric_limits<double>::infinity();
  Eigen::VectorXd saved = model.parameters_real();
  for (int it = 0; it < cfg.sweeps; ++it) {
    ++result.epochs_run;
    const auto [divergence, gradient, metric] = epoch();
    if (!std::isfinite(divergence)) throw TrainingError("divergence not finite");
    if (divergence > prev + 1e-12) {
      model.set_parameters_real(saved);
      eta /= 2.0;
      if (eta < kMinEta) break;
      continue;
    }
    for (Eigen::Index k = 0; k < gradient.size(); ++k) {
      if (!std::isfinite(gradient(k))) {
        throw TrainingError("non-finite gradient entry in tomography update");
      }
    }
    prev = divergence;
    saved = model.parameters_real();
    result.divergence.push_back(divergence);
    if (metric >= 0.0) result.metric.push_back(metric);
    model.set_parameters_real(saved - eta * gradient);
    eta = std::min(eta * 1.05, cfg.learning_rate);
  }
  model.set_parameters_real(saved);
  result.final_divergence = prev;
  result.final_eta = eta;
  return result;
}

// Thin adapters so the shared descent loop sees one parameter interface.
struct PureModelView {
  PureTomoModel& m;
  Eigen::VectorXd parameters_real() const {
    Eigen::VectorXd p(m.amplitude.n_parameters() + m.phase.n_parameters());
    p.head(m.amplitude.n_parameters()) = m.amplitude.parameters();
    p.tail(m.phase.n_parameters()) = m.phase.parameters();
    return p;
  }
  void set_parameters_real(const Eigen::VectorXd& p) {
    m.amplitude.set_parameters(p.head(m.amplitude.n_parameters()));
    m.phase.set_parameters(p.tail(m.phase.n_parameters()));
  }
};

struct MixedModelView {
  PurifiedRbm& m;
  Eigen::VectorXd parameters_real() const { return m.parameters(); }
  void set_parameters_real(const Eigen::VectorXd& p) { m.set_parameters(p); }
};

}  // namespace

PureTomoModel PureTomoModel::random(int n_visible, int n_hidden, double scale,
                                    std::uint64_t seed) {
  const PurifiedRbm proto = PurifiedRbm::random(n_visible, n_hidden, 0, scale, seed);
  return PureTomoModel{proto.amplitude, proto.phase};
}

DenseState PureTomoModel::materialize() const {
  const int n = n_visible();
  const SpinConfiguration no_env = SpinConfiguration::zeros(0);
  DenseState out{Eigen::VectorXcd(Eigen::Index{1} << n), n};
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    const auto v = SpinConfiguration::from_index(idx, n);
    const double l1 = amplitude.log_marginal(v, no_env);
    const double l2 = phase.log_marginal(v, no_env);
    out.amplitudes(static_cast<Eigen::Index>(idx)) = std::exp(Complex(l1 / 2.0, l2 / 2.0));
  }
  return out;
}

std::vector<MeasurementRecord> exact_records(const DenseState& state,
                                             const std::vector<std::string>& bases) {
  std::vector<MeasurementRecord> records;
  for (const std::string& b : bases) {
    MeasurementRecord rec;
    rec.basis = b;
    rec.probabilities = measurement_probabilities(state, b);
    rec.validate();
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<MeasurementRecord> exact_records(const Eigen::MatrixXcd& rho,
                                             const std::vector<std::string>& bases) {
  std::vector<MeasurementRecord> records;
  for (const std::string& b : bases) {
    MeasurementRecord rec;
    rec.basis = b;
    rec.probabilities = measurement_probabilities(rho, b);
    rec.validate();
    records.push_back(std::move(rec));
  }
  return records;
}

TomoResult tomo_pure(const std::vector<MeasurementRecord>& records, PureTomoModel& model,
                     const TrainConfig& cfg, const DenseState* target, KlDirection direction) {
  if (records.empty()) throw DomainError("tomography needs at least one record");
  const int n = model.n_visible();
  const Eigen::Index dim = Eigen::Index{1} << n;
  for (const MeasurementRecord& rec : records) {
    rec.validate();
    if (static_cast<int>(rec.basis.size()) != n) {
      throw ShapeError("record basis length != model sites");
    }
  }
  const SpinConfiguration no_env = SpinConfiguration::zeros(0);
  const int p1 = model.amplitude.n_parameters();
  const int p2 = model.phase.n_parameters();

  PureModelView view{model};
  auto epoch = [&]() {
    Eigen::VectorXcd psi(dim);
    Eigen::VectorXd expl1(dim);
    Eigen::MatrixXd o1(dim, p1), o2(dim, p2);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
      const auto v = SpinConfiguration::from_index(static_cast<std::uint64_t>(idx), n);
      const double l1 = model.amplitude.log_marginal(v, no_env);
      const double l2 = model.phase.log_marginal(v, no_env);
      psi(idx) = std::exp(Complex(l1 / 2.0, l2 / 2.0));
      expl1(idx) = std::exp(l1);
      o1.row(idx) = model.amplitude.log_derivatives(v, no_env).transpose();
      o2.row(idx) = model.phase.log_derivatives(v, no_env).transpose();
    }
    const double z = expl1.sum();
    const Eigen::VectorXd dlogz = (expl1.transpose() * o1).transpose() / z;

    double divergence = 0.0;
    double coeff_total = 0.0;
    Eigen::VectorXcd racc = Eigen::VectorXcd::Zero(dim);
    DenseState cur{psi, n};
    for (const MeasurementRecord& rec : records) {
      const DenseState rotated = rotate_state(cur, rec.basis);
      const Eigen::VectorXd q = rotated.amplitudes.cwiseAbs2() / z;
      const BasisObjective obj = basis_objective(rec.probabilities, q, direction, rec.basis);
      divergence += obj.divergence;
      coeff_total += obj.coeff.sum();
      Eigen::VectorXcd w(dim);
      for (Eigen::Index u = 0; u < dim; ++u) {
        w(u) = obj.coeff(u) == 0.0 ? Complex(0, 0) : obj.coeff(u) / rotated.amplitudes(u);
      }
      apply_transposed_rotation(w, n, rec.basis);
      racc += psi.cwiseProduct(w);
    }
    Eigen::VectorXd grad(p1 + p2);
    grad.head(p1) = (racc.real().transpose() * o1).transpose() - coeff_total * dlogz;
    grad.tail(p2) = -(racc.imag().transpose() * o2).transpose();

    double metric = -1.0;
    if (target != nullptr) metric = fidelity(cur, *target);
    return std::tuple<double, Eigen::VectorXd, double>(divergence, grad, metric);
  };
  return descend(view, cfg, epoch);
}

TomoResult tomo_mixed(const std::vector<MeasurementRecord>& records, PurifiedRbm& model,
                      const TrainConfig& cfg, const Eigen::MatrixXcd* target,
                      KlDirection direction) {
  if (records.empty()) throw DomainError("tomography needs at least one record");
  const int n = model.n_visible();
  const int ne = model.n_env();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index edim = Eigen::Index{1} << ne;
  for (const MeasurementRecord& rec : records) {
    rec.validate();
    if (static_cast<int>(rec.basis.size()) != n) {
      throw ShapeError("record basis length != model sites");
    }
  }
  const int p1 = model.amplitude.n_parameters();
  const int p2 = model.phase.n_parameters();

  MixedModelView view{model};
  auto epoch = [&]() {
    Eigen::MatrixXcd psi(dim, edim);
    Eigen::MatrixXd expl1(dim, edim);
    // derivative tables indexed by the flattened (v,e) pair
    Eigen::MatrixXd o1(dim * edim, p1), o2(dim * edim, p2);
    for (Eigen::Index vi = 0; vi < dim; ++vi) {
      const auto v = SpinConfiguration::from_index(static_cast<std::uint64_t>(vi), n);
      for (Eigen::Index ei = 0; ei < edim; ++ei) {
        const auto e = SpinConfiguration::from_index(static_cast<std::uint64_t>(ei), ne);
        const double l1 = model.amplitude.log_marginal(v, e);
        const double l2 = model.phase.log_marginal(v, e);
        psi(vi, ei) = std::exp(Complex(l1 / 2.0, l2 / 2.0));
        expl1(vi, ei) = std::exp(l1);
        o1.row(vi * edim + ei) = model.amplitude.log_derivatives(v, e).transpose();
        o2.row(vi * edim + ei) = model.phase.log_derivatives(v, e).transpose();
      }
    }
    const double z1 = expl1.sum();
    Eigen::VectorXd dlogz = Eigen::VectorXd::Zero(p1);
    for (Eigen::Index vi = 0; vi < dim; ++vi) {
      for (Eigen::Index ei = 0; ei < edim; ++ei) {
        dlogz += expl1(vi, ei) * o1.row(vi * edim + ei).transpose();
      }
    }
    dlogz /= z1;

    double divergence = 0.0;
    double coeff_total = 0.0;
    Eigen::MatrixXcd racc = Eigen::MatrixXcd::Zero(dim, edim);
    for (const MeasurementRecord& rec : records) {
      Eigen::MatrixXcd phi = psi;
      for (Eigen::Index ei = 0; ei < edim; ++ei) {
        Eigen::VectorXcd col = phi.col(ei);
        for (int q = 0; q < n; ++q) {
          const char ch = rec.basis[static_cast<std::size_t>(q)];
          if (ch == 'Z') continue;
          apply_single_qubit(col, n, q, basis_rotation(ch));
        }
        phi.col(ei) = col;
      }
      const Eigen::VectorXd qt = phi.cwiseAbs2().rowwise().sum();
      const Eigen::VectorXd q = qt / z1;
      const BasisObjective obj = basis_objective(rec.probabilities, q, direction, rec.basis);
      divergence += obj.divergence;
      coeff_total += obj.coeff.sum();
      Eigen::MatrixXcd w(dim, edim);
      for (Eigen::Index u = 0; u < dim; ++u) {
        const double scale = obj.coeff(u);
        for (Eigen::Index ei = 0; ei < edim; ++ei) {
          w(u, ei) = (scale == 0.0 || qt(u) < kTinyProb)
                         ? Complex(0, 0)
                         : scale * std::conj(phi(u, ei)) / qt(u);
        }
      }
      for (Eigen::Index ei = 0; ei < edim; ++ei) {
        Eigen::VectorXcd col = w.col(ei);
        apply_transposed_rotation(col, n, rec.basis);
        w.col(ei) = col;
      }
      racc += psi.cwiseProduct(w);
    }
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(p1 + p2);
    for (Eigen::Index vi = 0; vi < dim; ++vi) {
      for (Eigen::Index ei = 0; ei < edim; ++ei) {
        grad.head(p1) += racc(vi, ei).real() * o1.row(vi * edim + ei).transpose();
        grad.tail(p2) -= racc(vi, ei).imag() * o2.row(vi * edim + ei).transpose();
      }
    }
    grad.head(p1) -= coeff_total * dlogz;

    double metric = -1.0;
    if (target != nullptr) metric = trace_distance(model.density_matrix(), *target);
    return std::tuple<double, Eigen::VectorXd, double>(divergence, grad, metric);
  };
  return descend(view, cfg, epoch);
}

}  // namespace nqs
