#include "twostep/activation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twostep {

double activate(ActivationKind kind, double t) {
  switch (kind) {
    case ActivationKind::Identity:
      return t;
    case ActivationKind::Sigmoid:
      return 1.0 / (1.0 + std::exp(-t));
    case ActivationKind::Tanh:
      return std::tanh(t);
    case ActivationKind::Relu:
      return t > 0.0 ? t : 0.0;
    case ActivationKind::ConstantOne:
      return 1.0;
  }
  throw std::invalid_argument("unknown activation kind");
}

double activate_derivative(ActivationKind kind, double t) {
  switch (kind) {
    case ActivationKind::Identity:
      return 1.0;
    case ActivationKind::Sigmoid: {
      const double s = 1.0 / (1.0 + std::exp(-t));
      return s * (1.0 - s);
    }
    case ActivationKind::Tanh: {
      const double th = std::tanh(t);
      return 1.0 - th * th;
    }
    case ActivationKind::Relu:
      return t > 0.0 ? 1.0 : 0.0;
    case ActivationKind::ConstantOne:
      return 0.0;
  }
  throw std::invalid_argument("unknown activation kind");
}

std::string_view activation_name(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::Identity:
      return "identity";
    case ActivationKind::Sigmoid:
      return "sigmoid";
    case ActivationKind::Tanh:
      return "tanh";
    case ActivationKind::Relu:
      return "relu";
    case ActivationKind::ConstantOne:
      return "one";
  }
  throw std::invalid_argument("unknown activation kind");
}

ActivationKind parse_activation(std::string_view name) {
  if (name == "identity") return ActivationKind::Identity;
  if (name == "sigmoid") return ActivationKind::Sigmoid;
  if (name == "tanh") return ActivationKind::Tanh;
  if (name == "relu") return ActivationKind::Relu;
  if (name == "one") return ActivationKind::ConstantOne;
  throw std::invalid_argument("unknown activation \"" + std::string(name) +
                              "\" (expected identity, sigmoid, tanh, relu or one)");
}

ActivationColumn::ActivationColumn(std::vector<ActivationKind> kinds) : kinds_(std::move(kinds)) {
  if (kinds_.empty()) throw std::invalid_argument("activation column must not be empty");
}

ActivationColumn ActivationColumn::uniform(ActivationKind kind, Index n) {
  if (n < 1) throw std::invalid_argument("activation column must not be empty");
  return ActivationColumn(std::vector<ActivationKind>(static_cast<std::size_t>(n), kind));
}

namespace {

void require_same_length(const char* op, const ActivationColumn& col, const ColVec& y) {
  if (col.size() != y.size())
    throw ShapeError(std::string(op) + ": activation column has " + std::to_string(col.size()) +
                     " coordinates, vector has " + std::to_string(y.size()));
}

}  // namespace

ColVec apply(const ActivationColumn& col, const ColVec& y) {
  require_same_length("apply", col, y);
  ColVec out(y.size());
  for (Index i = 0; i < y.size(); ++i) out(i) = activate(col.kind(i), y(i));
  return out;
}

ColVec derivative(const ActivationColumn& col, const ColVec& y) {
  require_same_length("derivative", col, y);
  ColVec out(y.size());
  for (Index i = 0; i < y.size(); ++i) out(i) = activate_derivative(col.kind(i), y(i));
  return out;
}

}  // namespace twostep
