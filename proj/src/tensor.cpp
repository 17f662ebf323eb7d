#include "nqs/tensor.hpp"

#include <algorithm>

namespace nqs {

namespace {

constexpr std::int64_t kMaxTensorSize = std::int64_t{1} << 24;

std::int64_t flat_index(const std::vector<int>& dims, const std::vector<int>& idx) {
  std::int64_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    flat = flat * dims[k] + idx[k];
  }
  return flat;
}

}  // namespace

Complex& DenseTensor::at(const std::vector<int>& idx) { return data[flat_index(dims, idx)]; }
const Complex& DenseTensor::at(const std::vector<int>& idx) const {
  return data[flat_index(dims, idx)];
}

DenseTensor contract(const DenseTensor& a, const DenseTensor& b) {
  std::vector<std::size_t> a_shared, b_shared;
  std::vector<std::size_t> a_free, b_free;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it == b.labels.end()) {
      a_free.push_back(i);
    } else {
      a_shared.push_back(i);
      b_shared.push_back(static_cast<std::size_t>(it - b.labels.begin()));
      if (a.dims[i] != b.dims[static_cast<std::size_t>(it - b.labels.begin())]) {
        throw ShapeError("contraction dimension mismatch on label " + a.labels[i]);
      }
    }
  }
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[i]) == a.labels.end()) {
      b_free.push_back(i);
    }
  }

  DenseTensor out;
  for (std::size_t i : a_free) {
    out.labels.push_back(a.labels[i]);
    out.dims.push_back(a.dims[i]);
  }
  for (std::size_t i : b_free) {
    out.labels.push_back(b.labels[i]);
    out.dims.push_back(b.dims[i]);
  }
  if (out.size() > kMaxTensorSize) throw CapacityError("contraction intermediate too large");
  out.data.assign(static_cast<std::size_t>(out.size()), Complex(0, 0));

  std::int64_t shared_total = 1;
  for (std::size_t i : a_shared) shared_total *= a.dims[i];

  std::vector<int> ai(a.dims.size(), 0), bi(b.dims.size(), 0);
  std::vector<int> oi(out.dims.size(), 0);
  const std::int64_t out_total = out.size();
  for (std::int64_t o = 0; o < out_total; ++o) {
    // decode output multi-index
    std::int64_t rem = o;
    for (std::size_t k = out.dims.size(); k-- > 0;) {
      oi[k] = static_cast<int>(rem % out.dims[k]);
      rem /= out.dims[k];
    }
    for (std::size_t k = 0; k < a_free.size(); ++k) ai[a_free[k]] = oi[k];
    for (std::size_t k = 0; k < b_free.size(); ++k) bi[b_free[k]] = oi[a_free.size() + k];
    Complex acc(0, 0);
    for (std::int64_t s = 0; s < shared_total; ++s) {
      std::int64_t srem = s;
      for (std::size_t k = a_shared.size(); k-- > 0;) {
        const int d = a.dims[a_shared[k]];
        ai[a_shared[k]] = static_cast<int>(srem % d);
        bi[b_shared[k]] = ai[a_shared[k]];
        srem /= d;
      }
      acc += a.at(ai) * b.at(bi);
    }
    out.data[static_cast<std::size_t>(o)] = acc;
  }
  return out;
}

DenseTensor contract_all(const TensorNetwork& net) {
  if (net.tensors.empty()) return DenseTensor::scalar(Complex(1, 0));
  std::vector<DenseTensor> pool = net.tensors;
  DenseTensor acc = pool.front();
  pool.erase(pool.begin());
  while (!pool.empty()) {
    bool found = false;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const bool shares = std::any_of(pool[k].labels.begin(), pool[k].labels.end(),
                                      [&](const std::string& l) {
                                        return std::find(acc.labels.begin(), acc.labels.end(),
                                                         l) != acc.labels.end();
                                      });
      if (shares) {
        acc = contract(acc, pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
        found = true;
        break;
      }
    }
    if (!found) {
      acc = contract(acc, pool.front());  // outer product with a disjoint part
      pool.erase(pool.begin());
    }
  }
  // order the result by the requested open labels
  if (!net.open_labels.empty()) {
    if (acc.labels.size() != net.open_labels.size()) {
      throw InternalError("contraction left unexpected open labels");
    }
    DenseTensor ordered;
    ordered.labels = net.open_labels;
    for (const std::string& l : net.open_labels) {
      const auto it = std::find(acc.labels.begin(), acc.labels.end(), l);
      if (it == acc.labels.end()) throw InternalError("open label missing: " + l);
      ordered.dims.push_back(acc.dims[static_cast<std::size_t>(it - acc.labels.begin())]);
    }
    ordered.data.assign(static_cast<std::size_t>(ordered.size()), Complex(0, 0));
    std::vector<int> src(acc.dims.size(), 0), dst(ordered.dims.size(), 0);
    for (std::int64_t o = 0; o < ordered.size(); ++o) {
      std::int64_t rem = o;
      for (std::size_t k = ordered.dims.size(); k-- > 0;) {
        dst[k] = static_cast<int>(rem % ordered.dims[k]);
        rem /= ordered.dims[k];
      }
      for (std::size_t k = 0; k < acc.labels.size(); ++k) {
        const auto it =
            std::find(ordered.labels.begin(), ordered.labels.end(), acc.labels[k]);
        src[k] = dst[static_cast<std::size_t>(it - ordered.labels.begin())];
      }
      ordered.data[static_cast<std::size_t>(o)] = acc.at(src);
    }
    return ordered;
  }
  return acc;
}

TensorNetwork rbm_to_tensor_network(const RbmState& s) {
  if (s.hidden_domain() != SpinConvention::kZeroOne ||
      s.visible_domain() != SpinConvention::kZeroOne) {
    throw UnsupportedConventionError(
        "tensor conversion assumes zero-one units; run convert_convention first");
  }
  TensorNetwork net;
  const int nv = s.n_visible();
  const int nh = s.n_hidden();
  auto edge_label = [](char side, int i, int j) {
    return std::string(1, side) + std::to_string(i) + "_" + std::to_string(j);
  };

  // visible copy tensors: one physical leg plus one leg per incident edge
  for (int i = 0; i < nv; ++i) {
    DenseTensor t;
    t.labels.push_back("p" + std::to_string(i));
    t.dims.push_back(2);
    for (int j = 0; j < nh; ++j) {
      if (s.W(i, j) == Complex(0, 0)) continue;
      t.labels.push_back(edge_label('e', i, j));
      t.dims.push_back(2);
    }
    t.data.assign(static_cast<std::size_t>(t.size()), Complex(0, 0));
    std::vector<int> idx(t.dims.size(), 0);
    t.at(idx) = Complex(1, 0);
    std::fill(idx.begin(), idx.end(), 1);
    t.at(idx) = std::exp(s.a(i));
    net.tensors.push_back(std::move(t));
  }

  // edge tensors [[1,1],[1,e^w]]
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nh; ++j) {
      if (s.W(i, j) == Complex(0, 0)) continue;
      DenseTensor t;
      t.labels = {edge_label('e', i, j), edge_label('f', i, j)};
      t.dims = {2, 2};
      t.data = {Complex(1, 0), Complex(1, 0), Complex(1, 0), std::exp(s.W(i, j))};
      net.tensors.push_back(std::move(t));
    }
  }

  // hidden copy tensors (disconnected units collapse to the scalar 1+e^b)
  for (int j = 0; j < nh; ++j) {
    DenseTensor t;
    for (int i = 0; i < nv; ++i) {
      if (s.W(i, j) == Complex(0, 0)) continue;
      t.labels.push_back(edge_label('f', i, j));
      t.dims.push_back(2);
    }
    if (t.labels.empty()) {
      net.tensors.push_back(DenseTensor::scalar(1.0 + std::exp(s.b(j))));
      continue;
    }
    t.data.assign(static_cast<std::size_t>(t.size()), Complex(0, 0));
    std::vector<int> idx(t.dims.size(), 0);
    t.at(idx) = Complex(1, 0);
    std::fill(idx.begin(), idx.end(), 1);
    t.at(idx) = std::exp(s.b(j));
    net.tensors.push_back(std::move(t));
  }

  for (int i = 0; i < nv; ++i) net.open_labels.push_back("p" + std::to_string(i));
  return net;
}

Complex tn_amplitude(const TensorNetwork& net, const SpinConfiguration& v) {
  const DenseTensor full = contract_all(net);
  if (static_cast<int>(full.labels.size()) != v.size()) {
    throw ShapeError("configuration size does not match open physical legs");
  }
  std::vector<int> idx(full.labels.size());
  for (int i = 0; i < v.size(); ++i) idx[static_cast<std::size_t>(i)] = v.bit(i);
  return full.at(idx);
}

}  // namespace nqs
