#include "nqs/hamiltonian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nqs {

const char* to_string(Pauli p) {
  switch (p) {
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

Boundary boundary_from_name(const std::string& name) {
  if (name == "open") return Boundary::kOpen;
  if (name == "periodic") return Boundary::kPeriodic;
  throw ConfigError("unknown boundary: " + name);
}

const char* to_string(Boundary b) { return b == Boundary::kOpen ? "open" : "periodic"; }

PauliStringHamiltonian::PauliStringHamiltonian(int n_sites, Boundary boundary,
                                               std::vector<PauliTerm> terms)
    : n_sites_(n_sites), boundary_(boundary), terms_(std::move(terms)) {
  if (n_sites_ < 1) throw DomainError("Hamiltonian needs at least one site");
  for (PauliTerm& t : terms_) {
    std::sort(t.ops.begin(), t.ops.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    int prev = -1;
    for (const auto& [site, op] : t.ops) {
      (void)op;
      if (site < 0 || site >= n_sites_) {
        throw ShapeError("term references site " + std::to_string(site) + " outside chain");
      }
      if (site == prev) throw ShapeError("term repeats site " + std::to_string(site));
      prev = site;
    }
  }
  // Hermiticity: Pauli strings on distinct sites are self-adjoint, so each
  // group of identical strings must sum to a real coefficient.
  std::map<std::vector<std::pair<int, Pauli>>, Complex> grouped;
  for (const PauliTerm& t : terms_) grouped[t.ops] += t.coeff;
  for (const auto& [ops, coeff] : grouped) {
    (void)ops;
    if (std::abs(coeff.imag()) > 1e-12) {
      throw InternalError("non-Hermitian term list: imaginary summed coefficient");
    }
  }
}

std::vector<std::pair<int, int>> chain_bonds(int n, Boundary boundary, int step) {
  std::set<std::pair<int, int>> bonds;
  for (int i = 0; i < n; ++i) {
    int j = i + step;
    if (j >= n) {
      if (boundary == Boundary::kOpen) continue;
      j %= n;
    }
    if (i == j) continue;
    bonds.insert({std::min(i, j), std::max(i, j)});
  }
  return {bonds.begin(), bonds.end()};
}

PauliStringHamiltonian build_tfim(int n, double J, double B, Boundary boundary) {
  if (n < 2) throw DomainError("TFIM needs n >= 2");
  std::vector<PauliTerm> terms;
  for (const auto& [i, j] : chain_bonds(n, boundary)) {
    terms.push_back({Complex(-J, 0.0), {{i, Pauli::Z}, {j, Pauli::Z}}});
  }
  for (int i = 0; i < n; ++i) {
    terms.push_back({Complex(-B, 0.0), {{i, Pauli::X}}});
  }
  return PauliStringHamiltonian(n, boundary, std::move(terms));
}

PauliStringHamiltonian build_afh(int n, double J, Boundary boundary) {
  if (n < 2) throw DomainError("Heisenberg chain needs n >= 2");
  std::vector<PauliTerm> terms;
  for (const auto& [i, j] : chain_bonds(n, boundary)) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      terms.push_back({Complex(J / 4.0, 0.0), {{i, p}, {j, p}}});
    }
  }
  return PauliStringHamiltonian(n, boundary, std::move(terms));
}

PauliStringHamiltonian build_j1j2(int n, double J1, double J2, Boundary boundary) {
  if (n < 2) throw DomainError("Heisenberg chain needs n >= 2");
  std::vector<PauliTerm> terms;
  for (const auto& [i, j] : chain_bonds(n, boundary)) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      terms.push_back({Complex(J1 / 4.0, 0.0), {{i, p}, {j, p}}});
    }
  }
  if (J2 != 0.0) {
    for (const auto& [i, j] : chain_bonds(n, boundary, 2)) {
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        terms.push_back({Complex(J2 / 4.0, 0.0), {{i, p}, {j, p}}});
      }
    }
  }
  return PauliStringHamiltonian(n, boundary, std::move(terms));
}

TermAction term_action(const PauliTerm& term, const SpinConfiguration& v) {
  TermAction act{Complex(1.0, 0.0), {}};
  for (const auto& [site, op] : term.ops) {
    const double z = 1.0 - 2.0 * v.bit(site);
    switch (op) {
      case Pauli::Z:
        act.factor *= z;
        break;
      case Pauli::X:
        act.flips.push_back(site);
        break;
      case Pauli::Y:
        // <v|Y|v'> with v' flipped: -i for v=0, +i for v=1
        act.factor *= Complex(0.0, -z);
        act.flips.push_back(site);
        break;
    }
  }
  return act;
}

Complex local_energy(const PauliStringHamiltonian& h, const NqsState& psi,
                     const SpinConfiguration& v) {
  if (v.size() != h.n_sites()) throw ShapeError("configuration size != Hamiltonian sites");
  const SpinConfiguration v01 = v.to(SpinConvention::kZeroOne);
  const LogAmplitude base = psi.log_amplitude(v01);
  if (base.is_zero) throw ZeroAmplitudeError("local energy at zero-amplitude configuration");

  Complex e(0.0, 0.0);
  SpinConfiguration flipped = v01;
  for (const PauliTerm& term : h.terms()) {
    const TermAction act = term_action(term, v01);
    if (act.flips.empty()) {
      e += term.coeff * act.factor;
      continue;
    }
    for (int s : act.flips) flipped.flip(s);
    const LogAmplitude amp = psi.log_amplitude(flipped);
    for (int s : act.flips) flipped.flip(s);  // restore
    if (!amp.is_zero) {
      e += term.coeff * act.factor * std::exp(amp.log - base.log);
    }
  }
  return e;
}

}  // namespace nqs
