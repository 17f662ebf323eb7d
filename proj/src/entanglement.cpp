#include "nqs/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <ostream>

namespace nqs {

Bipartition Bipartition::prefix(int cut, int n_sites) {
  Bipartition p;
  p.n_sites = n_sites;
  for (int i = 0; i < cut; ++i) p.region_a.push_back(i);
  p.validate();
  return p;
}

void Bipartition::validate() const {
  if (region_a.empty()) throw DomainError("region A must be nonempty");
  if (static_cast<int>(region_a.size()) >= n_sites) {
    throw DomainError("region A must be a proper subset");
  }
  int prev = -1;
  for (int s : region_a) {
    if (s <= prev) throw DomainError("region A must be sorted and duplicate-free");
    if (s < 0 || s >= n_sites) throw DomainError("region A site out of range");
    prev = s;
  }
}

Eigen::MatrixXcd reduced_density(const DenseState& state, const Bipartition& part) {
  part.validate();
  if (part.n_sites != state.n_sites) throw ShapeError("bipartition size != state size");
  const int na = static_cast<int>(part.region_a.size());
  if (na > 10) throw CapacityError("reduced density limited to |A| <= 10");
  const int nb = part.n_sites - na;

  std::vector<int> b_sites;
  for (int i = 0; i < part.n_sites; ++i) {
    if (!std::binary_search(part.region_a.begin(), part.region_a.end(), i)) {
      b_sites.push_back(i);
    }
  }

  const double nrm2 = state.amplitudes.squaredNorm();
  if (nrm2 <= 0.0) throw DomainError("cannot reduce a null state");

  const Eigen::Index da = Eigen::Index{1} << na;
  const Eigen::Index db = Eigen::Index{1} << nb;
  // psi reshaped to (A, B), big-endian within each group
  Eigen::MatrixXcd m(da, db);
  for (Eigen::Index x = 0; x < da; ++x) {
    for (Eigen::Index y = 0; y < db; ++y) {
      std::uint64_t idx = 0;
      for (int k = 0; k < na; ++k) {
        const int bit = static_cast<int>((x >> (na - 1 - k)) & 1);
        idx |= static_cast<std::uint64_t>(bit)
               << (part.n_sites - 1 - part.region_a[static_cast<std::size_t>(k)]);
      }
      for (int k = 0; k < nb; ++k) {
        const int bit = static_cast<int>((y >> (nb - 1 - k)) & 1);
        idx |= static_cast<std::uint64_t>(bit)
               << (part.n_sites - 1 - b_sites[static_cast<std::size_t>(k)]);
      }
      m(x, y) = state.amplitudes(static_cast<Eigen::Index>(idx));
    }
  }
  return (m * m.adjoint()) / nrm2;
}

double renyi_entropy(const Eigen::MatrixXcd& rho, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("Renyi order must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success) throw InternalError("eigensolver failed on rho");
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < 1e-14) ev(i) = 0.0;
  }
  if (std::abs(alpha - 1.0) < 1e-12) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) > 0.0) s -= ev(i) * std::log(ev(i));
    }
    return s;
  }
  double tr = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.0) tr += std::pow(ev(i), alpha);
  }
  if (tr <= 0.0) return 0.0;
  return std::log(tr) / (1.0 - alpha);
}

int crossing_count(const RbmState& s, const Bipartition& part) {
  part.validate();
  if (part.n_sites != s.n_visible()) throw ShapeError("bipartition size != visible count");
  int crossings = 0;
  for (int j = 0; j < s.n_hidden(); ++j) {
    bool in_a = false, in_b = false;
    for (int i = 0; i < s.n_visible(); ++i) {
      if (s.W(i, j) == Complex(0, 0)) continue;
      if (std::binary_search(part.region_a.begin(), part.region_a.end(), i)) {
        in_a = true;
      } else {
        in_b = true;
      }
    }
    if (in_a && in_b) ++crossings;
  }
  return crossings;
}

AreaLawReport arealaw_probe(const RbmState& s, const std::vector<int>& cuts) {
  const DenseState dense = materialize(s);
  AreaLawReport report;
  for (int cut : cuts) {
    const Bipartition part = Bipartition::prefix(cut, s.n_visible());
    const Eigen::MatrixXcd rho = reduced_density(dense, part);
    AreaLawRow row;
    row.cut = cut;
    row.size_a = cut;
    row.crossings = crossing_count(s, part);
    row.s2 = renyi_entropy(rho, 2.0);
    row.bound = row.crossings * std::log(2.0);
    row.von_neumann = renyi_entropy(rho, 1.0);
    if (row.s2 > row.bound + 1e-9) report.all_within_bound = false;
    report.rows.push_back(row);
  }
  return report;
}

void write_arealaw_csv(const AreaLawReport& report, std::ostream& os) {
  os << "cut,size_a,crossings,s2,bound,von_neumann\n";
  char buf[160];
  for (const AreaLawRow& r : report.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.12g,%.12g,%.12g\n", r.cut, r.size_a,
                  r.crossings, r.s2, r.bound, r.von_neumann);
    os << buf;
  }
}

}  // namespace nqs
