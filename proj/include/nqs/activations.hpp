#ifndef NQS_ACTIVATIONS_HPP
#define NQS_ACTIVATIONS_HPP

#include <string>

#include "nqs/common.hpp"

namespace nqs {

enum class Activation {
  kLogistic,
  kTanh,
  kCos,
  kRelu,
  kSoftplus,
  kElu,
  kHeaviside,
  kSmoothedStep,
};

// Activation tag plus the scalar parameter used by elu (alpha) and
// smoothed-step (plateau width a).
struct ActivationSpec {
  Activation kind = Activation::kLogistic;
  double alpha = 1.0;
  double width = 1.0;
};

Activation activation_from_name(const std::string& name);
const char* activation_name(Activation a);

// Evaluates the activation on a complex argument. Real step-type activations
// (heaviside, relu, smoothed-step) act on the real part and return a real
// value. Analytic activations use their closed-form complex extension and
// throw SingularityError within 1e-12 of a pole.
Complex activate(const ActivationSpec& spec, Complex z);

// Piecewise-quadratic smoothing of the unit step: 0 below -a/2, 1 above a/2,
// strictly increasing and differentiable in between (triangular-kernel
// convolution of the step function evaluated in closed form).
double smoothed_step(double a, double x);

// Heaviside neuron with weights (-2,-2) and bias -3.
int perceptron_nand(int x1, int x2);

}  // namespace nqs

#endif  // NQS_ACTIVATIONS_HPP
