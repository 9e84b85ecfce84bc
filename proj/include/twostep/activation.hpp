#pragma once

#include <string_view>
#include <vector>

#include "twostep/types.hpp"

namespace twostep {

/// Scalar activation families. ConstantOne is the "formal" bias neuron whose
/// output is pinned to 1 regardless of its input.
enum class ActivationKind { Identity, Sigmoid, Tanh, Relu, ConstantOne };

double activate(ActivationKind kind, double t);

/// First derivative of the scalar activation. Relu uses the subgradient 0 at
/// t == 0.
double activate_derivative(ActivationKind kind, double t);

/// Wire names used in model files and CLI flags:
/// "identity", "sigmoid", "tanh", "relu", "one".
std::string_view activation_name(ActivationKind kind);
ActivationKind parse_activation(std::string_view name);

/// One activation per coordinate of the vector it is applied to. Layers are
/// usually uniform; heterogeneous columns let a formal ConstantOne neuron sit
/// next to genuine ones.
class ActivationColumn {
 public:
  explicit ActivationColumn(std::vector<ActivationKind> kinds);
  static ActivationColumn uniform(ActivationKind kind, Index n);

  Index size() const { return static_cast<Index>(kinds_.size()); }
  ActivationKind kind(Index i) const { return kinds_[static_cast<std::size_t>(i)]; }
  const std::vector<ActivationKind>& kinds() const { return kinds_; }
  bool operator==(const ActivationColumn& other) const = default;

 private:
  std::vector<ActivationKind> kinds_;
};

/// Coordinate-wise application: out_i = sigma_i(y_i).
ColVec apply(const ActivationColumn& col, const ColVec& y);

/// Coordinate-wise derivative: out_i = sigma_i'(y_i).
ColVec derivative(const ActivationColumn& col, const ColVec& y);

}  // namespace twostep
