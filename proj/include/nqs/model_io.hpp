#ifndef NQS_MODEL_IO_HPP
#define NQS_MODEL_IO_HPP

#include <json.hpp>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "nqs/bm.hpp"
#include "nqs/dbm.hpp"
#include "nqs/feedforward.hpp"
#include "nqs/mps.hpp"
#include "nqs/purified.hpp"
#include "nqs/rbm.hpp"
#include "nqs/tomography.hpp"

namespace nqs {

// Generic keyed parameter container mirroring the JSON model format: biases
// keyed by vertex names (v0.., h0.., g0..) and weights as undirected edges.
struct NetworkParameters {
  std::string family;  // rbm | bm | dbm
  SpinConvention visible_domain = SpinConvention::kZeroOne;
  SpinConvention hidden_domain = SpinConvention::kZeroOne;
  int n_visible = 0;
  int n_hidden = 0;
  int n_deep = 0;
  std::map<std::string, Complex> biases;
  std::vector<std::tuple<std::string, std::string, Complex>> weights;

  // Checks that weight keys reference declared vertices, that no undirected
  // edge appears twice, and that the layering matches the family.
  void validate() const;
};

NetworkParameters to_network_parameters(const RbmState& s);
NetworkParameters to_network_parameters(const BmState& s);
NetworkParameters to_network_parameters(const DbmState& s);

RbmState rbm_from_parameters(const NetworkParameters& p);
BmState bm_from_parameters(const NetworkParameters& p);
DbmState dbm_from_parameters(const NetworkParameters& p);

// JSON with complex numbers as [re, im] pairs and explicit vertex naming.
nlohmann::ordered_json model_to_json(const RbmState& s);
nlohmann::ordered_json model_to_json(const BmState& s);
nlohmann::ordered_json model_to_json(const DbmState& s);
nlohmann::ordered_json model_to_json(const FeedForwardNet& net);
nlohmann::ordered_json model_to_json(const PurifiedRbm& p);
nlohmann::ordered_json model_to_json(const PureTomoModel& p);

RbmState rbm_from_json(const nlohmann::json& j);
BmState bm_from_json(const nlohmann::json& j);
DbmState dbm_from_json(const nlohmann::json& j);
FeedForwardNet ffn_from_json(const nlohmann::json& j);
PurifiedRbm purified_from_json(const nlohmann::json& j);
PureTomoModel pure_pair_from_json(const nlohmann::json& j);

// File helpers; loaders dispatch on the "family" field.
void write_json_file(const std::string& path, const nlohmann::ordered_json& j);
nlohmann::json read_json_file(const std::string& path);
std::string json_family(const nlohmann::json& j);

// MPS serialization: per-site dims plus flattened complex data.
nlohmann::ordered_json mps_to_json(const MpsState& mps, Complex log_scale);
MpsState mps_from_json(const nlohmann::json& j, Complex* log_scale_out = nullptr);

}  // namespace nqs

#endif  // NQS_MODEL_IO_HPP
