#include "nqs/dbm_circuit.hpp"

#include <cmath>

namespace nqs {

namespace {

const Complex kI(0.0, 1.0);
const double kLog2 = std::log(2.0);

}  // namespace

Complex hadamard_pair_weight(int v, int h) {
  return kI * kPi / 8.0 - kLog2 / 2.0 - kI * kPi * static_cast<double>(v) / 2.0 -
         kI * kPi * static_cast<double>(h) / 4.0 + kI * kPi * static_cast<double>(v * h);
}

Complex zrot_pair_weight(double theta, int v, int z) {
  return -kLog2 / 2.0 + kI * theta * static_cast<double>(v) / 2.0 +
         kI * kPi * static_cast<double>(v * z);
}

Complex hadamard_transfer(int v, int v_new) {
  Complex sum(0.0, 0.0);
  for (int h = 0; h <= 1; ++h) {
    sum += std::exp(hadamard_pair_weight(v, h) + hadamard_pair_weight(v_new, h));
  }
  return sum;
}

Complex zrot_transfer(double theta, int v, int v_new) {
  Complex sum(0.0, 0.0);
  for (int z = 0; z <= 1; ++z) {
    sum += std::exp(zrot_pair_weight(theta, v, z) + zrot_pair_weight(theta, v_new, z));
  }
  return sum;
}

Complex cz_transfer(int v1, int v2) {
  Complex sum(0.0, 0.0);
  for (int h = 0; h <= 1; ++h) {
    sum += std::exp(hadamard_pair_weight(v1, h) + hadamard_pair_weight(v2, h));
  }
  return sum;
}

CzThetaWeights solve_cz_theta(double theta) {
  // One hidden unit h with equal edges to both qubits:
  //   T(s) = e^{c + beta s} (1 + e^{delta s}),  s = v1 + v2,
  // constrained to T(0)=T(1)=1, T(2)=e^{i theta}. With c = -ln 2 the first
  // two constraints pin beta once delta solves
  //   (2 - e^{i theta}) y^2 - 2 e^{i theta} y + (2 - e^{i theta}) = 0, y=e^delta.
  const Complex eit = std::exp(kI * theta);
  const Complex aa = 2.0 - eit;
  const Complex root = std::sqrt(eit - 1.0);
  const Complex y = (eit + 2.0 * root) / aa;
  const Complex b = 2.0 / (1.0 + y);
  CzThetaWeights w;
  w.edge_weight = std::log(y);
  w.vertex_bias = std::log(b);
  w.log_constant = -kLog2;
  // 4-entry transfer check
  for (int v1 = 0; v1 <= 1; ++v1) {
    for (int v2 = 0; v2 <= 1; ++v2) {
      const double s = v1 + v2;
      const Complex t = std::exp(w.log_constant + w.vertex_bias * s) *
                        (1.0 + std::exp(w.edge_weight * s));
      const Complex want = (v1 == 1 && v2 == 1) ? eit : Complex(1.0, 0.0);
      if (std::abs(t - want) > 1e-12) {
        throw InternalError("CZ(theta) weight solve failed the transfer check");
      }
    }
  }
  return w;
}

int DbmCircuitGraph::add_vertex(Complex bias, VertexKind kind, int slice) {
  vertices_.push_back(Vertex{bias, kind, slice});
  return static_cast<int>(vertices_.size()) - 1;
}

void DbmCircuitGraph::add_edge(int u, int v, Complex w) {
  edges_.push_back(EdgeRef{u, v, w});
}

DbmCircuitGraph DbmCircuitGraph::init_graph(int n, const std::string& initial) {
  if (n < 1) throw ConfigError("circuit graph needs at least one qubit");
  if (static_cast<int>(initial.size()) != n) {
    throw ShapeError("initial state spec length != qubit count");
  }
  DbmCircuitGraph g;
  g.frontier_.resize(static_cast<std::size_t>(n));
  g.pins_.resize(static_cast<std::size_t>(n));
  const double r2 = std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    Complex bias(0.0, 0.0);
    std::optional<Pin> pin;
    switch (initial[static_cast<std::size_t>(q)]) {
      case '0':
        pin = Pin{-1, Complex(0.0, 0.0), kI * kPi};
        g.ledger_ *= 2.0;
        break;
      case '1':
        pin = Pin{-1, kI * kPi, kI * kPi};
        g.ledger_ *= 2.0;
        break;
      case '+':
        g.ledger_ *= r2;
        break;
      case '-':
        bias = kI * kPi;
        g.ledger_ *= r2;
        break;
      default:
        throw ConfigError("initial state characters must be 0/1/+/- (product states only)");
    }
    const int vid = g.add_vertex(bias, VertexKind::kFrontier, 0);
    g.frontier_[static_cast<std::size_t>(q)] = vid;
    if (pin) {
      pin->hidden_vertex = g.add_vertex(pin->bias, VertexKind::kPinHidden, 0);
      g.add_edge(vid, pin->hidden_vertex, pin->weight);
      g.pins_[static_cast<std::size_t>(q)] = pin;
    }
  }
  return g;
}

void DbmCircuitGraph::apply(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::kHadamard: apply_hadamard(g.q1); break;
    case Gate::Kind::kZRot: apply_zrot(g.q1, g.theta); break;
    case Gate::Kind::kCz: apply_cz(g.q1, g.q2); break;
    case Gate::Kind::kCzTheta: apply_cz(g.q1, g.q2, g.theta); break;
  }
}

void DbmCircuitGraph::apply_hadamard(int q) {
  const int slice = gate_count() + 1;
  const int old_v = frontier_.at(static_cast<std::size_t>(q));
  const int hid = add_vertex(-kI * kPi / 2.0, VertexKind::kGateHidden, slice);
  const int new_v = add_vertex(-kI * kPi / 2.0, VertexKind::kFrontier, slice);
  vertices_[static_cast<std::size_t>(old_v)].bias += -kI * kPi / 2.0;
  vertices_[static_cast<std::size_t>(old_v)].kind = VertexKind::kRetired;
  add_edge(old_v, hid, kI * kPi);
  add_edge(new_v, hid, kI * kPi);
  log_constant_ += kI * kPi / 4.0 - kLog2;
  frontier_[static_cast<std::size_t>(q)] = new_v;
  ++gate_hidden_count_;
  Gate g;
  g.kind = Gate::Kind::kHadamard;
  g.q1 = q;
  records_.push_back(GateRecord{g, old_v, new_v, hid, kI * kPi, kI * kPi});
}

void DbmCircuitGraph::apply_zrot(int q, double theta) {
  const int slice = gate_count() + 1;
  const int old_v = frontier_.at(static_cast<std::size_t>(q));
  const int hid = add_vertex(Complex(0.0, 0.0), VertexKind::kGateHidden, slice);
  const int new_v = add_vertex(kI * theta / 2.0, VertexKind::kFrontier, slice);
  vertices_[static_cast<std::size_t>(old_v)].bias += kI * theta / 2.0;
  vertices_[static_cast<std::size_t>(old_v)].kind = VertexKind::kRetired;
  add_edge(old_v, hid, kI * kPi);
  add_edge(new_v, hid, kI * kPi);
  log_constant_ += -kLog2;
  ledger_ *= std::exp(kI * theta / 2.0);
  frontier_[static_cast<std::size_t>(q)] = new_v;
  ++gate_hidden_count_;
  Gate g;
  g.kind = Gate::Kind::kZRot;
  g.q1 = q;
  g.theta = theta;
  records_.push_back(GateRecord{g, old_v, new_v, hid, kI * kPi, kI * kPi});
}

void DbmCircuitGraph::apply_cz(int q1, int q2) {
  if (q1 == q2) throw ConfigError("cz qubits must differ");
  const int slice = gate_count() + 1;
  const int f1 = frontier_.at(static_cast<std::size_t>(q1));
  const int f2 = frontier_.at(static_cast<std::size_t>(q2));
  const int hid = add_vertex(-kI * kPi / 2.0, VertexKind::kGateHidden, slice);
  vertices_[static_cast<std::size_t>(f1)].bias += -kI * kPi / 2.0;
  vertices_[static_cast<std::size_t>(f2)].bias += -kI * kPi / 2.0;
  add_edge(f1, hid, kI * kPi);
  add_edge(f2, hid, kI * kPi);
  log_constant_ += kI * kPi / 4.0 - kLog2;
  ledger_ *= 1.0 / std::sqrt(2.0);
  ++gate_hidden_count_;
  Gate g;
  g.kind = Gate::Kind::kCz;
  g.q1 = q1;
  g.q2 = q2;
  records_.push_back(GateRecord{g, -1, -1, hid, kI * kPi, kI * kPi});
}

void DbmCircuitGraph::apply_cz(int q1, int q2, double theta) {
  if (q1 == q2) throw ConfigError("cz qubits must differ");
  Gate g;
  g.kind = Gate::Kind::kCzTheta;
  g.q1 = q1;
  g.q2 = q2;
  g.theta = theta;
  if (theta == 0.0) {
    // identity: no graph growth
    records_.push_back(GateRecord{g, -1, -1, -1, Complex(0, 0), Complex(0, 0)});
    return;
  }
  const int slice = gate_count() + 1;
  const int f1 = frontier_.at(static_cast<std::size_t>(q1));
  const int f2 = frontier_.at(static_cast<std::size_t>(q2));
  const CzThetaWeights w = solve_cz_theta(theta);
  const int hid = add_vertex(Complex(0.0, 0.0), VertexKind::kGateHidden, slice);
  vertices_[static_cast<std::size_t>(f1)].bias += w.vertex_bias;
  vertices_[static_cast<std::size_t>(f2)].bias += w.vertex_bias;
  add_edge(f1, hid, w.edge_weight);
  add_edge(f2, hid, w.edge_weight);
  log_constant_ += w.log_constant;
  ++gate_hidden_count_;
  records_.push_back(GateRecord{g, -1, -1, hid, w.edge_weight, w.edge_weight});
}

Complex DbmCircuitGraph::amplitude(const SpinConfiguration& v_out) const {
  const int n = n_qubits();
  if (n > 12) throw CapacityError("graph amplitude evaluation limited to 12 qubits");
  if (v_out.size() != n) throw ShapeError("output configuration size != qubit count");

  const std::size_t dim = std::size_t{1} << n;
  auto bit_of = [&](std::size_t m, int q) { return static_cast<int>((m >> (n - 1 - q)) & 1u); };

  // Slice 0: pinning units are summed immediately; frontier biases wait
  // until their vertex is consumed.
  std::vector<Complex> msg(dim, Complex(1.0, 0.0));
  for (int q = 0; q < n; ++q) {
    const auto& pin = pins_[static_cast<std::size_t>(q)];
    if (!pin) continue;
    const Complex g0 = 1.0 + std::exp(pin->bias);
    const Complex g1 = 1.0 + std::exp(pin->bias + pin->weight);
    for (std::size_t m = 0; m < dim; ++m) msg[m] *= bit_of(m, q) ? g1 : g0;
  }

  std::vector<Complex> next(dim);
  for (const GateRecord& rec : records_) {
    if (rec.hidden_vertex < 0) continue;  // identity shortcut
    const Complex hb = vertices_[static_cast<std::size_t>(rec.hidden_vertex)].bias;
    if (rec.gate.kind == Gate::Kind::kHadamard || rec.gate.kind == Gate::Kind::kZRot) {
      const int q = rec.gate.q1;
      const Complex ob = vertices_[static_cast<std::size_t>(rec.old_vertex)].bias;
      // T[a][a'] = e^{b_old a} sum_h e^{b_h h + w1 a h + w2 a' h}
      Complex t[2][2];
      for (int a = 0; a <= 1; ++a) {
        for (int ap = 0; ap <= 1; ++ap) {
          t[a][ap] = std::exp(ob * static_cast<double>(a)) *
                     (1.0 + std::exp(hb + rec.w_first * static_cast<double>(a) +
                                     rec.w_second * static_cast<double>(ap)));
        }
      }
      const std::size_t qmask = std::size_t{1} << (n - 1 - q);
      for (std::size_t m = 0; m < dim; ++m) {
        const int ap = bit_of(m, q);
        const std::size_t m0 = m & ~qmask;
        const std::size_t m1 = m | qmask;
        next[m] = t[0][ap] * msg[m0] + t[1][ap] * msg[m1];
      }
      msg.swap(next);
    } else {
      // controlled phase: hidden unit summed in place
      Complex gm[2][2];
      for (int a1 = 0; a1 <= 1; ++a1) {
        for (int a2 = 0; a2 <= 1; ++a2) {
          gm[a1][a2] = 1.0 + std::exp(hb + rec.w_first * static_cast<double>(a1) +
                                      rec.w_second * static_cast<double>(a2));
        }
      }
      for (std::size_t m = 0; m < dim; ++m) {
        msg[m] *= gm[bit_of(m, rec.gate.q1)][bit_of(m, rec.gate.q2)];
      }
    }
  }

  Complex expo = log_constant_;
  for (int q = 0; q < n; ++q) {
    expo += vertices_[static_cast<std::size_t>(frontier_[static_cast<std::size_t>(q)])].bias *
            static_cast<double>(v_out.bit(q));
  }
  return msg[static_cast<std::size_t>(v_out.index())] * std::exp(expo);
}

Complex DbmCircuitGraph::exact_amplitude(const SpinConfiguration& v_out) const {
  return amplitude(v_out) / ledger_;
}

}  // namespace nqs
