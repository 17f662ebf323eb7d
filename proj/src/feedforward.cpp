#include "nqs/feedforward.hpp"

namespace nqs {

FeedForwardNet::FeedForwardNet(std::vector<FfnLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw ShapeError("feed-forward net needs at least one layer");
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const FfnLayer& layer = layers_[l];
    if (layer.weights.cols() != layer.bias.size()) {
      throw ShapeError("layer " + std::to_string(l) + ": bias size " +
                       std::to_string(layer.bias.size()) + " != output width " +
                       std::to_string(layer.weights.cols()));
    }
    if (l > 0 && layers_[l - 1].weights.cols() != layer.weights.rows()) {
      throw ShapeError("layer " + std::to_string(l) + ": input width " +
                       std::to_string(layer.weights.rows()) +
                       " incompatible with previous output " +
                       std::to_string(layers_[l - 1].weights.cols()));
    }
  }
  if (layers_.back().weights.cols() != 1) {
    throw ShapeError("state network must end in a single output neuron");
  }
}

Complex FeedForwardNet::forward(const SpinConfiguration& v) const {
  check_size(v);
  Eigen::VectorXcd x(v.size());
  for (int i = 0; i < v.size(); ++i) {
    x(i) = Complex(v.value_as(SpinConvention::kZeroOne, i), 0.0);
  }
  for (const FfnLayer& layer : layers_) {
    Eigen::VectorXcd z = layer.weights.transpose() * x - layer.bias;
    Eigen::VectorXcd y(z.size());
    for (Eigen::Index k = 0; k < z.size(); ++k) y(k) = activate(layer.activation, z(k));
    x = std::move(y);
  }
  return x(0);
}

LogAmplitude FeedForwardNet::log_amplitude(const SpinConfiguration& v) const {
  const Complex psi = forward(v);
  if (psi == Complex(0.0, 0.0)) return LogAmplitude::zero();
  return LogAmplitude{std::log(psi), false};
}

Complex ffn_amplitude(const FeedForwardNet& net, const SpinConfiguration& v) {
  return net.forward(v);
}

}  // namespace nqs
