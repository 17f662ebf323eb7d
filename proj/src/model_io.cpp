#include "nqs/model_io.hpp"

#include <fstream>
#include <set>

namespace nqs {

namespace {

nlohmann::ordered_json complex_json(Complex z) {
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

Complex complex_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("complex values must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

SpinConvention convention_from(const std::string& name) {
  if (name == "zero-one") return SpinConvention::kZeroOne;
  if (name == "plus-minus-one") return SpinConvention::kPlusMinusOne;
  throw ConfigError("unknown convention: " + name);
}

// Parses "v12" / "h3" / "g0" into (layer char, index).
std::pair<char, int> parse_vertex(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'v' && name[0] != 'h' && name[0] != 'g')) {
    throw ConfigError("vertex names must look like v0/h0/g0, got: " + name);
  }
  try {
    return {name[0], std::stoi(name.substr(1))};
  } catch (const std::exception&) {
    throw ConfigError("bad vertex index in name: " + name);
  }
}

void require_layer_size(char layer, int index, int limit, const std::string& name) {
  if (index < 0 || index >= limit) {
    throw ShapeError("vertex " + name + " outside declared layer size " + std::to_string(limit));
  }
  (void)layer;
}

nlohmann::ordered_json net_params_json(const NetworkParameters& p) {
  nlohmann::ordered_json j;
  j["family"] = p.family;
  j["visible_domain"] = to_string(p.visible_domain);
  j["hidden_domain"] = to_string(p.hidden_domain);
  j["n_visible"] = p.n_visible;
  j["n_hidden"] = p.n_hidden;
  if (p.family == "dbm") j["n_deep"] = p.n_deep;
  nlohmann::ordered_json biases;
  for (const auto& [name, value] : p.biases) biases[name] = complex_json(value);
  j["biases"] = biases;
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const auto& [u, v, w] : p.weights) {
    weights.push_back(nlohmann::ordered_json::array({u, v, complex_json(w)}));
  }
  j["weights"] = weights;
  return j;
}

NetworkParameters net_params_from_json(const nlohmann::json& j) {
  NetworkParameters p;
  p.family = j.at("family").get<std::string>();
  p.visible_domain = convention_from(j.at("visible_domain").get<std::string>());
  p.hidden_domain = convention_from(j.at("hidden_domain").get<std::string>());
  p.n_visible = j.at("n_visible").get<int>();
  p.n_hidden = j.at("n_hidden").get<int>();
  p.n_deep = j.value("n_deep", 0);
  for (const auto& [name, value] : j.at("biases").items()) {
    p.biases[name] = complex_from(value);
  }
  for (const auto& entry : j.at("weights")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw ConfigError("weight entries must be [from, to, [re, im]]");
    }
    p.weights.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>(),
                           complex_from(entry[2]));
  }
  p.validate();
  return p;
}

nlohmann::ordered_json purified_net_json(const PurifiedNet& net) {
  nlohmann::ordered_json j;
  auto vec = [](const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
  };
  j["a"] = vec(net.a);
  j["b"] = vec(net.b);
  j["c"] = vec(net.c);
  std::vector<double> w(net.W.size()), u(net.U.size());
  for (int i = 0; i < net.W.rows(); ++i)
    for (int k = 0; k < net.W.cols(); ++k) w[static_cast<std::size_t>(i * net.W.cols() + k)] = net.W(i, k);
  for (int i = 0; i < net.U.rows(); ++i)
    for (int k = 0; k < net.U.cols(); ++k) u[static_cast<std::size_t>(i * net.U.cols() + k)] = net.U(i, k);
  j["w"] = w;
  j["u"] = u;
  return j;
}

PurifiedNet purified_net_from_json(const nlohmann::json& j, int nv, int nh, int ne) {
  PurifiedNet net;
  const auto a = j.at("a").get<std::vector<double>>();
  const auto b = j.at("b").get<std::vector<double>>();
  const auto c = j.at("c").get<std::vector<double>>();
  const auto w = j.at("w").get<std::vector<double>>();
  const auto u = j.at("u").get<std::vector<double>>();
  if (static_cast<int>(a.size()) != nv || static_cast<int>(b.size()) != nh ||
      static_cast<int>(c.size()) != ne || static_cast<int>(w.size()) != nv * nh ||
      static_cast<int>(u.size()) != nv * ne) {
    throw ShapeError("purified net arrays disagree with declared sizes");
  }
  net.a = Eigen::Map<const Eigen::VectorXd>(a.data(), nv);
  net.b = Eigen::Map<const Eigen::VectorXd>(b.data(), nh);
  net.c = Eigen::Map<const Eigen::VectorXd>(c.data(), ne);
  net.W.resize(nv, nh);
  net.U.resize(nv, ne);
  for (int i = 0; i < nv; ++i)
    for (int k = 0; k < nh; ++k) net.W(i, k) = w[static_cast<std::size_t>(i * nh + k)];
  for (int i = 0; i < nv; ++i)
    for (int k = 0; k < ne; ++k) net.U(i, k) = u[static_cast<std::size_t>(i * ne + k)];
  return net;
}

}  // namespace

void NetworkParameters::validate() const {
  if (family != "rbm" && family != "bm" && family != "dbm") {
    throw ConfigError("unknown model family: " + family);
  }
  for (const auto& [name, value] : biases) {
    (void)value;
    const auto [layer, index] = parse_vertex(name);
    if (layer == 'g' && family != "dbm") {
      throw ShapeError("deep vertices only exist in the dbm family");
    }
    require_layer_size(layer, index, layer == 'v' ? n_visible : (layer == 'h' ? n_hidden : n_deep),
                       name);
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [u, v, w] : weights) {
    (void)w;
    const auto [lu, iu] = parse_vertex(u);
    const auto [lv, iv] = parse_vertex(v);
    require_layer_size(lu, iu, lu == 'v' ? n_visible : (lu == 'h' ? n_hidden : n_deep), u);
    require_layer_size(lv, iv, lv == 'v' ? n_visible : (lv == 'h' ? n_hidden : n_deep), v);
    const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (!seen.insert(key).second) {
      throw ShapeError("duplicate undirected edge " + u + "-" + v);
    }
    if (u == v) throw ShapeError("self-loop on " + u);
    const bool vh = (lu == 'v' && lv == 'h') || (lu == 'h' && lv == 'v');
    const bool hg = (lu == 'h' && lv == 'g') || (lu == 'g' && lv == 'h');
    const bool vv = lu == 'v' && lv == 'v';
    const bool hh = lu == 'h' && lv == 'h';
    if (family == "rbm" && !vh) {
      throw ShapeError("rbm weights must pair one visible with one hidden vertex: " + u + "-" + v);
    }
    if (family == "bm" && !(vh || vv || hh)) {
      throw ShapeError("bm edge touches an unknown layer: " + u + "-" + v);
    }
    if (family == "dbm" && !(vh || hg)) {
      throw ShapeError("dbm allows only v-h and h-g edges: " + u + "-" + v);
    }
  }
}

NetworkParameters to_network_parameters(const RbmState& s) {
  NetworkParameters p;
  p.family = "rbm";
  p.visible_domain = s.visible_domain();
  p.hidden_domain = s.hidden_domain();
  p.n_visible = s.n_visible();
  p.n_hidden = s.n_hidden();
  for (int i = 0; i < s.n_visible(); ++i) p.biases["v" + std::to_string(i)] = s.a(i);
  for (int j = 0; j < s.n_hidden(); ++j) p.biases["h" + std::to_string(j)] = s.b(j);
  for (int i = 0; i < s.n_visible(); ++i) {
    for (int j = 0; j < s.n_hidden(); ++j) {
      if (s.W(i, j) == Complex(0, 0)) continue;
      p.weights.emplace_back("v" + std::to_string(i), "h" + std::to_string(j), s.W(i, j));
    }
  }
  return p;
}

NetworkParameters to_network_parameters(const BmState& s) {
  NetworkParameters p;
  p.family = "bm";
  p.visible_domain = s.visible_domain();
  p.hidden_domain = s.hidden_domain();
  p.n_visible = s.n_visible();
  p.n_hidden = s.n_hidden();
  for (int i = 0; i < s.n_visible(); ++i) p.biases["v" + std::to_string(i)] = s.a(i);
  for (int j = 0; j < s.n_hidden(); ++j) p.biases["h" + std::to_string(j)] = s.b(j);
  for (int i = 0; i < s.n_visible(); ++i) {
    for (int j = 0; j < s.n_hidden(); ++j) {
      if (s.W(i, j) == Complex(0, 0)) continue;
      p.weights.emplace_back("v" + std::to_string(i), "h" + std::to_string(j), s.W(i, j));
    }
  }
  for (const IntraEdge& e : s.visible_edges) {
    p.weights.emplace_back("v" + std::to_string(e.u), "v" + std::to_string(e.v), e.weight);
  }
  for (const IntraEdge& e : s.hidden_edges) {
    p.weights.emplace_back("h" + std::to_string(e.u), "h" + std::to_string(e.v), e.weight);
  }
  return p;
}

NetworkParameters to_network_parameters(const DbmState& s) {
  NetworkParameters p;
  p.family = "dbm";
  p.visible_domain = s.visible_domain();
  p.hidden_domain = s.hidden_domain();
  p.n_visible = s.n_visible();
  p.n_hidden = s.n_hidden_shallow();
  p.n_deep = s.n_hidden_deep();
  for (int i = 0; i < s.n_visible(); ++i) p.biases["v" + std::to_string(i)] = s.a(i);
  for (int j = 0; j < s.n_hidden_shallow(); ++j) p.biases["h" + std::to_string(j)] = s.b(j);
  for (int k = 0; k < s.n_hidden_deep(); ++k) p.biases["g" + std::to_string(k)] = s.c(k);
  for (int i = 0; i < s.n_visible(); ++i) {
    for (int j = 0; j < s.n_hidden_shallow(); ++j) {
      if (s.W_vh(i, j) == Complex(0, 0)) continue;
      p.weights.emplace_back("v" + std::to_string(i), "h" + std::to_string(j), s.W_vh(i, j));
    }
  }
  for (int j = 0; j < s.n_hidden_shallow(); ++j) {
    for (int k = 0; k < s.n_hidden_deep(); ++k) {
      if (s.W_hg(j, k) == Complex(0, 0)) continue;
      p.weights.emplace_back("h" + std::to_string(j), "g" + std::to_string(k), s.W_hg(j, k));
    }
  }
  return p;
}

RbmState rbm_from_parameters(const NetworkParameters& p) {
  if (p.family != "rbm") throw ConfigError("expected rbm parameters, got " + p.family);
  p.validate();
  RbmState s(p.n_visible, p.n_hidden, p.hidden_domain, p.visible_domain);
  for (const auto& [name, value] : p.biases) {
    const auto [layer, index] = parse_vertex(name);
    (layer == 'v' ? s.a(index) : s.b(index)) = value;
  }
  for (const auto& [u, v, w] : p.weights) {
    const auto [lu, iu] = parse_vertex(u);
    const auto [lv, iv] = parse_vertex(v);
    const int i = lu == 'v' ? iu : iv;
    const int j = lu == 'h' ? iu : iv;
    s.W(i, j) = w;
  }
  return s;
}

BmState bm_from_parameters(const NetworkParameters& p) {
  if (p.family != "bm") throw ConfigError("expected bm parameters, got " + p.family);
  p.validate();
  BmState s(p.n_visible, p.n_hidden, p.hidden_domain, p.visible_domain);
  for (const auto& [name, value] : p.biases) {
    const auto [layer, index] = parse_vertex(name);
    (layer == 'v' ? s.a(index) : s.b(index)) = value;
  }
  for (const auto& [u, v, w] : p.weights) {
    const auto [lu, iu] = parse_vertex(u);
    const auto [lv, iv] = parse_vertex(v);
    if (lu == 'v' && lv == 'v') {
      s.add_visible_edge(iu, iv, w);
    } else if (lu == 'h' && lv == 'h') {
      s.add_hidden_edge(iu, iv, w);
    } else {
      const int i = lu == 'v' ? iu : iv;
      const int j = lu == 'h' ? iu : iv;
      s.W(i, j) = w;
    }
  }
  return s;
}

DbmState dbm_from_parameters(const NetworkParameters& p) {
  if (p.family != "dbm") throw ConfigError("expected dbm parameters, got " + p.family);
  p.validate();
  DbmState s(p.n_visible, p.n_hidden, p.n_deep, p.hidden_domain, p.visible_domain);
  for (const auto& [name, value] : p.biases) {
    const auto [layer, index] = parse_vertex(name);
    if (layer == 'v') {
      s.a(index) = value;
    } else if (layer == 'h') {
      s.b(index) = value;
    } else {
      s.c(index) = value;
    }
  }
  for (const auto& [u, v, w] : p.weights) {
    const auto [lu, iu] = parse_vertex(u);
    const auto [lv, iv] = parse_vertex(v);
    if (lu == 'g' || lv == 'g') {
      const int j = lu == 'h' ? iu : iv;
      const int k = lu == 'g' ? iu : iv;
      s.W_hg(j, k) = w;
    } else {
      const int i = lu == 'v' ? iu : iv;
      const int j = lu == 'h' ? iu : iv;
      s.W_vh(i, j) = w;
    }
  }
  return s;
}

nlohmann::ordered_json model_to_json(const RbmState& s) {
  return net_params_json(to_network_parameters(s));
}
nlohmann::ordered_json model_to_json(const BmState& s) {
  return net_params_json(to_network_parameters(s));
}
nlohmann::ordered_json model_to_json(const DbmState& s) {
  return net_params_json(to_network_parameters(s));
}

nlohmann::ordered_json model_to_json(const FeedForwardNet& net) {
  nlohmann::ordered_json j;
  j["family"] = "ffn";
  nlohmann::ordered_json layers = nlohmann::ordered_json::array();
  for (const FfnLayer& layer : net.layers()) {
    nlohmann::ordered_json lj;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < layer.weights.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index c = 0; c < layer.weights.cols(); ++c) {
        row.push_back(complex_json(layer.weights(r, c)));
      }
      rows.push_back(row);
    }
    lj["weights"] = rows;
    nlohmann::ordered_json bias = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < layer.bias.size(); ++k) bias.push_back(complex_json(layer.bias(k)));
    lj["bias"] = bias;
    lj["activation"] = activation_name(layer.activation.kind);
    if (layer.activation.kind == Activation::kElu) lj["alpha"] = layer.activation.alpha;
    if (layer.activation.kind == Activation::kSmoothedStep) lj["width"] = layer.activation.width;
    layers.push_back(lj);
  }
  j["layers"] = layers;
  return j;
}

nlohmann::ordered_json model_to_json(const PurifiedRbm& p) {
  nlohmann::ordered_json j;
  j["family"] = "purified-rbm";
  j["n_visible"] = p.n_visible();
  j["n_hidden"] = p.n_hidden();
  j["n_env"] = p.n_env();
  j["amplitude"] = purified_net_json(p.amplitude);
  j["phase"] = purified_net_json(p.phase);
  return j;
}

nlohmann::ordered_json model_to_json(const PureTomoModel& p) {
  nlohmann::ordered_json j;
  j["family"] = "pure-rbm-pair";
  j["n_visible"] = p.n_visible();
  j["n_hidden"] = p.amplitude.n_hidden();
  j["amplitude"] = purified_net_json(p.amplitude);
  j["phase"] = purified_net_json(p.phase);
  return j;
}

RbmState rbm_from_json(const nlohmann::json& j) { return rbm_from_parameters(net_params_from_json(j)); }
BmState bm_from_json(const nlohmann::json& j) { return bm_from_parameters(net_params_from_json(j)); }
DbmState dbm_from_json(const nlohmann::json& j) { return dbm_from_parameters(net_params_from_json(j)); }

FeedForwardNet ffn_from_json(const nlohmann::json& j) {
  if (json_family(j) != "ffn") throw ConfigError("expected an ffn model");
  std::vector<FfnLayer> layers;
  for (const auto& lj : j.at("layers")) {
    FfnLayer layer;
    const auto& rows = lj.at("weights");
    const Eigen::Index nr = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index nc = nr > 0 ? static_cast<Eigen::Index>(rows[0].size()) : 0;
    layer.weights.resize(nr, nc);
    for (Eigen::Index r = 0; r < nr; ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != nc) {
        throw ShapeError("ragged weight matrix in ffn layer");
      }
      for (Eigen::Index c = 0; c < nc; ++c) layer.weights(r, c) = complex_from(rows[r][c]);
    }
    const auto& bias = lj.at("bias");
    layer.bias.resize(static_cast<Eigen::Index>(bias.size()));
    for (Eigen::Index k = 0; k < layer.bias.size(); ++k) layer.bias(k) = complex_from(bias[k]);
    layer.activation.kind = activation_from_name(lj.at("activation").get<std::string>());
    layer.activation.alpha = lj.value("alpha", 1.0);
    layer.activation.width = lj.value("width", 1.0);
    layers.push_back(std::move(layer));
  }
  return FeedForwardNet(std::move(layers));
}

PurifiedRbm purified_from_json(const nlohmann::json& j) {
  if (json_family(j) != "purified-rbm") throw ConfigError("expected a purified-rbm model");
  const int nv = j.at("n_visible").get<int>();
  const int nh = j.at("n_hidden").get<int>();
  const int ne = j.at("n_env").get<int>();
  PurifiedRbm p(nv, nh, ne);
  p.amplitude = purified_net_from_json(j.at("amplitude"), nv, nh, ne);
  p.phase = purified_net_from_json(j.at("phase"), nv, nh, ne);
  return p;
}

PureTomoModel pure_pair_from_json(const nlohmann::json& j) {
  if (json_family(j) != "pure-rbm-pair") throw ConfigError("expected a pure-rbm-pair model");
  const int nv = j.at("n_visible").get<int>();
  const int nh = j.at("n_hidden").get<int>();
  PureTomoModel p;
  p.amplitude = purified_net_from_json(j.at("amplitude"), nv, nh, 0);
  p.phase = purified_net_from_json(j.at("phase"), nv, nh, 0);
  return p;
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write file: " + path);
  os << j.dump(2) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open file: " + path);
  try {
    return nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad JSON in " + path + ": " + e.what());
  }
}

std::string json_family(const nlohmann::json& j) {
  if (!j.contains("family")) throw ConfigError("model JSON lacks the 'family' key");
  return j.at("family").get<std::string>();
}

nlohmann::ordered_json mps_to_json(const MpsState& mps, Complex log_scale) {
  nlohmann::ordered_json j;
  j["family"] = "mps";
  j["n_sites"] = mps.n_sites();
  j["boundary"] = to_string(mps.boundary());
  j["log_scale"] = complex_json(log_scale);
  j["bond_dims"] = mps.bond_dims();
  nlohmann::ordered_json sites = nlohmann::ordered_json::array();
  for (const MpsSite& site : mps.sites()) {
    nlohmann::ordered_json sj;
    sj["dl"] = site.left_dim();
    sj["dr"] = site.right_dim();
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (int v = 0; v <= 1; ++v) {
      for (int l = 0; l < site.left_dim(); ++l) {
        for (int r = 0; r < site.right_dim(); ++r) {
          data.push_back(complex_json(site.slice[static_cast<std::size_t>(v)](l, r)));
        }
      }
    }
    sj["data"] = data;
    sites.push_back(sj);
  }
  j["sites"] = sites;
  return j;
}

MpsState mps_from_json(const nlohmann::json& j, Complex* log_scale_out) {
  if (json_family(j) != "mps") throw ConfigError("expected an mps file");
  if (log_scale_out != nullptr) *log_scale_out = complex_from(j.at("log_scale"));
  std::vector<MpsSite> sites;
  for (const auto& sj : j.at("sites")) {
    const int dl = sj.at("dl").get<int>();
    const int dr = sj.at("dr").get<int>();
    const auto& data = sj.at("data");
    if (static_cast<int>(data.size()) != 2 * dl * dr) {
      throw ShapeError("mps site data length != 2*dl*dr");
    }
    MpsSite site;
    site.slice[0].resize(dl, dr);
    site.slice[1].resize(dl, dr);
    int k = 0;
    for (int v = 0; v <= 1; ++v) {
      for (int l = 0; l < dl; ++l) {
        for (int r = 0; r < dr; ++r) {
          site.slice[static_cast<std::size_t>(v)](l, r) = complex_from(data[k++]);
        }
      }
    }
    sites.push_back(std::move(site));
  }
  return MpsState(std::move(sites), boundary_from_name(j.at("boundary").get<std::string>()));
}

}  // namespace nqs
