#ifndef NQS_DBM_CIRCUIT_HPP
#define NQS_DBM_CIRCUIT_HPP

#include <optional>
#include <vector>

#include "nqs/circuit.hpp"
#include "nqs/spin.hpp"

namespace nqs {

// Pairwise Hadamard weight W_H(v,h) = i pi/8 - ln2/2 - i pi v/2 - i pi h/4
// + i pi v h; summing the shared hidden unit over two such edges gives the
// Hadamard transfer (1/sqrt2)(-1)^{v v'}.
Complex hadamard_pair_weight(int v, int h);

// Z-rotation weight W_Z(v,z) = -ln2/2 + i theta v/2 + i pi v z.
Complex zrot_pair_weight(double theta, int v, int z);

// Transfer sums over one hidden unit, evaluated straight from the weights.
Complex hadamard_transfer(int v, int v_new);
Complex zrot_transfer(double theta, int v, int v_new);
Complex cz_transfer(int v1, int v2);

// CZ(theta) hidden-unit weights solved per instance from the constraints
// sum_h e^{w(v1,h)+w(v2,h)} = diag(1,1,1,e^{i theta}).
struct CzThetaWeights {
  Complex edge_weight;   // coefficient of v*h on each of the two edges
  Complex vertex_bias;   // added to both endpoint biases
  Complex log_constant;  // constant term of the construction
};
CzThetaWeights solve_cz_theta(double theta);

// Quantum-circuit state as a growing DBM graph: gates add hidden units and
// replace frontier vertices, so the full graph evaluates to
//   Psi_graph(v) = ledger * <v|U_C|psi_in>,
// with every per-gate constant tracked explicitly in `ledger`.
class DbmCircuitGraph {
 public:
  enum class VertexKind { kFrontier, kRetired, kGateHidden, kPinHidden };

  struct Vertex {
    Complex bias{0.0, 0.0};
    VertexKind kind = VertexKind::kFrontier;
    int slice = 0;  // gate index at creation time
  };

  struct EdgeRef {
    int u = -1;
    int v = -1;
    Complex weight{0.0, 0.0};
  };

  // Frontier of n visible units with biases/pinning units encoding a product
  // state over {0,1,+,-}.
  static DbmCircuitGraph init_graph(int n, const std::string& initial);

  void apply(const Gate& g);
  void apply_hadamard(int q);
  void apply_zrot(int q, double theta);
  void apply_cz(int q1, int q2);
  void apply_cz(int q1, int q2, double theta);

  // Raw DBM amplitude: ledger * <v_out|U_C|psi_in>. Layered dynamic
  // programming over time slices, never whole-graph enumeration. Guarded to
  // 12 qubits.
  Complex amplitude(const SpinConfiguration& v_out) const;

  // Ledger-corrected amplitude <v_out|U_C|psi_in>.
  Complex exact_amplitude(const SpinConfiguration& v_out) const;

  int n_qubits() const { return static_cast<int>(frontier_.size()); }
  Complex ledger() const { return ledger_; }
  int gate_hidden_count() const { return gate_hidden_count_; }
  int gate_count() const { return static_cast<int>(records_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<EdgeRef>& edges() const { return edges_; }
  Complex log_constant() const { return log_constant_; }
  const std::vector<int>& frontier() const { return frontier_; }

 private:
  struct GateRecord {
    Gate gate;
    int old_vertex = -1;
    int new_vertex = -1;
    int hidden_vertex = -1;  // -1 when the gate degenerates to the identity
    Complex w_first{0.0, 0.0};   // old-hidden (H/Z) or q1-hidden (CZ)
    Complex w_second{0.0, 0.0};  // new-hidden (H/Z) or q2-hidden (CZ)
  };

  struct Pin {
    int hidden_vertex = -1;
    Complex bias{0.0, 0.0};
    Complex weight{0.0, 0.0};
  };

  int add_vertex(Complex bias, VertexKind kind, int slice);
  void add_edge(int u, int v, Complex w);

  std::vector<Vertex> vertices_;
  std::vector<EdgeRef> edges_;
  std::vector<GateRecord> records_;
  std::vector<int> frontier_;                 // per-qubit vertex id
  std::vector<std::optional<Pin>> pins_;      // per-qubit initialization unit
  Complex log_constant_{0.0, 0.0};
  Complex ledger_{1.0, 0.0};
  int gate_hidden_count_ = 0;
};

}  // namespace nqs

#endif  // NQS_DBM_CIRCUIT_HPP
