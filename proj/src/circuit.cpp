#include "nqs/circuit.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace nqs {

namespace {

void check_qubit(int q, int n, int line) {
  if (q < 0 || q >= n) {
    throw ConfigError("line " + std::to_string(line) + ": qubit " + std::to_string(q) +
                      " out of range");
  }
}

}  // namespace

Circuit parse_circuit(std::istream& is, int n_qubits) {
  if (n_qubits < 1) throw ConfigError("circuit needs at least one qubit");
  Circuit c;
  c.n_qubits = n_qubits;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string op;
    if (!(ss >> op)) continue;  // blank
    Gate g;
    if (op == "h") {
      g.kind = Gate::Kind::kHadamard;
      if (!(ss >> g.q1)) throw ConfigError("line " + std::to_string(line_no) + ": h needs a qubit");
      check_qubit(g.q1, n_qubits, line_no);
    } else if (op == "z") {
      g.kind = Gate::Kind::kZRot;
      if (!(ss >> g.q1 >> g.theta)) {
        throw ConfigError("line " + std::to_string(line_no) + ": z needs a qubit and an angle");
      }
      check_qubit(g.q1, n_qubits, line_no);
    } else if (op == "cz") {
      if (!(ss >> g.q1 >> g.q2)) {
        throw ConfigError("line " + std::to_string(line_no) + ": cz needs two qubits");
      }
      check_qubit(g.q1, n_qubits, line_no);
      check_qubit(g.q2, n_qubits, line_no);
      if (g.q1 == g.q2) {
        throw ConfigError("line " + std::to_string(line_no) + ": cz qubits must differ");
      }
      if (ss >> g.theta) {
        g.kind = Gate::Kind::kCzTheta;
      } else {
        g.kind = Gate::Kind::kCz;
      }
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown gate '" + op + "'");
    }
    std::string extra;
    if (ss >> extra) {
      throw ConfigError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
    }
    c.gates.push_back(g);
  }
  return c;
}

Circuit parse_circuit_file(const std::string& path, int n_qubits) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open circuit file: " + path);
  return parse_circuit(is, n_qubits);
}

Circuit random_circuit(int n_qubits, int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> qubit(0, n_qubits - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  Circuit c;
  c.n_qubits = n_qubits;
  for (int layer = 0; layer < depth; ++layer) {
    for (int slot = 0; slot < n_qubits; ++slot) {
      Gate g;
      switch (kind(rng)) {
        case 0:
          g.kind = Gate::Kind::kHadamard;
          g.q1 = qubit(rng);
          break;
        case 1:
          g.kind = Gate::Kind::kZRot;
          g.q1 = qubit(rng);
          g.theta = angle(rng);
          break;
        default: {
          g.kind = Gate::Kind::kCz;
          g.q1 = qubit(rng);
          g.q2 = qubit(rng);
          while (g.q2 == g.q1) g.q2 = qubit(rng);
          break;
        }
      }
      c.gates.push_back(g);
    }
  }
  return c;
}

}  // namespace nqs
