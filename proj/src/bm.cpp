#include "nqs/bm.hpp"

#include <random>

#include "nqs/logsum.hpp"

namespace nqs {

namespace {

IntraEdge make_edge(int u, int v, Complex w, int limit, const char* layer,
                    const std::vector<IntraEdge>& existing) {
  if (u == v) throw ShapeError(std::string(layer) + " edge is a self-loop");
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= limit) throw ShapeError(std::string(layer) + " edge endpoint out of range");
  for (const IntraEdge& e : existing) {
    if (e.u == u && e.v == v) {
      throw ShapeError(std::string(layer) + " edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ") declared twice");
    }
  }
  return IntraEdge{u, v, w};
}

}  // namespace

BmState::BmState(int n_visible, int n_hidden, SpinConvention hidden_domain,
                 SpinConvention visible_domain)
    : a(Eigen::VectorXcd::Zero(n_visible)),
      b(Eigen::VectorXcd::Zero(n_hidden)),
      W(Eigen::MatrixXcd::Zero(n_visible, n_hidden)),
      hidden_domain_(hidden_domain),
      visible_domain_(visible_domain) {
  if (n_visible < 1 || n_hidden < 0) throw ShapeError("invalid BM shape");
}

BmState BmState::random(int n_visible, int n_hidden, double scale, std::uint64_t seed,
                        SpinConvention hidden_domain, SpinConvention visible_domain) {
  BmState s(n_visible, n_hidden, hidden_domain, visible_domain);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] { return scale * Complex(gauss(rng), gauss(rng)); };
  for (int i = 0; i < n_visible; ++i) s.a(i) = draw();
  for (int j = 0; j < n_hidden; ++j) s.b(j) = draw();
  for (int i = 0; i < n_visible; ++i)
    for (int j = 0; j < n_hidden; ++j) s.W(i, j) = draw();
  for (int i = 0; i < n_visible; ++i)
    for (int i2 = i + 1; i2 < n_visible; ++i2) s.add_visible_edge(i, i2, draw());
  for (int j = 0; j < n_hidden; ++j)
    for (int j2 = j + 1; j2 < n_hidden; ++j2) s.add_hidden_edge(j, j2, draw());
  return s;
}

void BmState::add_visible_edge(int i, int i2, Complex w) {
  visible_edges.push_back(make_edge(i, i2, w, n_visible(), "visible", visible_edges));
}

void BmState::add_hidden_edge(int j, int j2, Complex w) {
  hidden_edges.push_back(make_edge(j, j2, w, n_hidden(), "hidden", hidden_edges));
}

LogAmplitude BmState::log_amplitude(const SpinConfiguration& v) const {
  check_size(v);
  const int nh = n_hidden();
  if (nh > kMaxEnumeratedHidden) {
    throw CapacityError("BM amplitude enumeration limited to " +
                        std::to_string(kMaxEnumeratedHidden) + " hidden units");
  }

  Complex vis(0.0, 0.0);
  for (int i = 0; i < n_visible(); ++i) vis += a(i) * v.value_as(visible_domain_, i);
  for (const IntraEdge& e : visible_edges) {
    vis += e.weight * v.value_as(visible_domain_, e.u) * v.value_as(visible_domain_, e.v);
  }

  Eigen::VectorXcd th = b;
  for (int i = 0; i < n_visible(); ++i) {
    const double x = v.value_as(visible_domain_, i);
    if (x != 0.0) th += x * W.row(i).transpose();
  }

  const std::uint64_t total = std::uint64_t{1} << nh;
  std::vector<double> hval(static_cast<std::size_t>(nh));
  LogSumAccumulator acc;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int j = 0; j < nh; ++j) {
      const int bit = static_cast<int>((mask >> j) & 1u);
      hval[static_cast<std::size_t>(j)] =
          hidden_domain_ == SpinConvention::kZeroOne ? bit : 1 - 2 * bit;
    }
    Complex expo = vis;
    for (int j = 0; j < nh; ++j) expo += hval[static_cast<std::size_t>(j)] * th(j);
    for (const IntraEdge& e : hidden_edges) {
      expo += e.weight * hval[static_cast<std::size_t>(e.u)] * hval[static_cast<std::size_t>(e.v)];
    }
    acc.add(expo);
  }
  return acc.result();
}

}  // namespace nqs
