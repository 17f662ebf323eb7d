#ifndef NQS_CIRCUIT_HPP
#define NQS_CIRCUIT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nqs/common.hpp"

namespace nqs {

// Universal gate set: Hadamard, z-rotation Z(theta) = diag(e^{-i theta/2},
// e^{+i theta/2}), controlled-Z and controlled phase CZ(theta) =
// diag(1,1,1,e^{i theta}).
struct Gate {
  enum class Kind { kHadamard, kZRot, kCz, kCzTheta };
  Kind kind = Kind::kHadamard;
  int q1 = 0;
  int q2 = -1;
  double theta = 0.0;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

// Line format, one gate per line ("#" comments and blank lines allowed):
//   h <q>
//   z <q> <theta>
//   cz <q1> <q2> [theta]
// Malformed lines raise ConfigError naming the line number.
Circuit parse_circuit(std::istream& is, int n_qubits);
Circuit parse_circuit_file(const std::string& path, int n_qubits);

// Uniformly random circuit over {H, Z(theta), CZ}: `depth` layers of one
// gate per layer-slot, n slots per layer.
Circuit random_circuit(int n_qubits, int depth, std::uint64_t seed);

}  // namespace nqs

#endif  // NQS_CIRCUIT_HPP
