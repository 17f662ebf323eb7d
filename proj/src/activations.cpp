#include "nqs/activations.hpp"

#include <cmath>

namespace nqs {

namespace {

constexpr double kPoleTol = 1e-12;

Complex logistic(Complex z) {
  // 1/(1+e^{-z}), evaluated from the side that keeps the exponential bounded.
  if (z.real() >= 0.0) {
    const Complex d = 1.0 + std::exp(-z);
    if (std::abs(d) < kPoleTol) {
      throw SingularityError("logistic pole: |1+e^{-z}| < 1e-12");
    }
    return 1.0 / d;
  }
  const Complex ez = std::exp(z);
  const Complex d = 1.0 + ez;
  if (std::abs(d) < kPoleTol) {
    throw SingularityError("logistic pole: |1+e^{-z}| < 1e-12");
  }
  return ez / d;
}

Complex softplus(Complex z) {
  if (z.real() > 0.0) {
    const Complex d = 1.0 + std::exp(-z);
    if (std::abs(d) < kPoleTol) {
      throw SingularityError("softplus branch point: |1+e^{z}| < 1e-12");
    }
    return z + std::log(d);
  }
  const Complex d = 1.0 + std::exp(z);
  if (std::abs(d) < kPoleTol) {
    throw SingularityError("softplus branch point: |1+e^{z}| < 1e-12");
  }
  return std::log(d);
}

}  // namespace

Activation activation_from_name(const std::string& name) {
  if (name == "logistic") return Activation::kLogistic;
  if (name == "tanh") return Activation::kTanh;
  if (name == "cos") return Activation::kCos;
  if (name == "relu") return Activation::kRelu;
  if (name == "softplus") return Activation::kSoftplus;
  if (name == "elu") return Activation::kElu;
  if (name == "heaviside") return Activation::kHeaviside;
  if (name == "smoothed-step") return Activation::kSmoothedStep;
  throw ConfigError("unknown activation tag: " + name);
}

const char* activation_name(Activation a) {
  switch (a) {
    case Activation::kLogistic: return "logistic";
    case Activation::kTanh: return "tanh";
    case Activation::kCos: return "cos";
    case Activation::kRelu: return "relu";
    case Activation::kSoftplus: return "softplus";
    case Activation::kElu: return "elu";
    case Activation::kHeaviside: return "heaviside";
    case Activation::kSmoothedStep: return "smoothed-step";
  }
  return "?";
}

Complex activate(const ActivationSpec& spec, Complex z) {
  switch (spec.kind) {
    case Activation::kLogistic:
      return logistic(z);
    case Activation::kTanh: {
      if (std::abs(std::cosh(z)) < kPoleTol) {
        throw SingularityError("tanh pole: |cosh z| < 1e-12");
      }
      return std::tanh(z);
    }
    case Activation::kCos:
      return std::cos(z);
    case Activation::kRelu:
      return Complex(z.real() > 0.0 ? z.real() : 0.0, 0.0);
    case Activation::kSoftplus:
      return softplus(z);
    case Activation::kElu:
      if (z.real() >= 0.0) return z;
      return spec.alpha * (std::exp(z) - 1.0);
    case Activation::kHeaviside:
      return Complex(z.real() > 0.0 ? 1.0 : 0.0, 0.0);
    case Activation::kSmoothedStep:
      return Complex(smoothed_step(spec.width, z.real()), 0.0);
  }
  throw ConfigError("unknown activation tag");
}

double smoothed_step(double a, double x) {
  if (!(a > 0.0)) throw DomainError("smoothed_step requires a > 0");
  if (x <= -a / 2.0) return 0.0;
  if (x >= a / 2.0) return 1.0;
  const double u = x / a;
  if (x <= 0.0) return 0.5 + 2.0 * u + 2.0 * u * u;
  return 0.5 + 2.0 * u - 2.0 * u * u;
}

int perceptron_nand(int x1, int x2) {
  if ((x1 != 0 && x1 != 1) || (x2 != 0 && x2 != 1)) {
    throw DomainError("perceptron_nand inputs must be bits");
  }
  const double y = -2.0 * x1 - 2.0 * x2 - (-3.0);
  return y > 0.0 ? 1 : 0;
}

}  // namespace nqs
