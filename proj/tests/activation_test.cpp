#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "twostep/activation.hpp"

using namespace twostep;

namespace {

const std::vector<ActivationKind> kAllKinds = {ActivationKind::Identity, ActivationKind::Sigmoid,
                                               ActivationKind::Tanh, ActivationKind::Relu,
                                               ActivationKind::ConstantOne};

}  // namespace

TEST_CASE("scalar activation values") {
  CHECK(activate(ActivationKind::Identity, -3.25) == -3.25);
  CHECK(activate(ActivationKind::Sigmoid, 0.0) == 0.5);
  CHECK(activate(ActivationKind::Tanh, 0.0) == 0.0);
  CHECK(activate(ActivationKind::Relu, -1.0) == 0.0);
  CHECK(activate(ActivationKind::Relu, 2.0) == 2.0);
  CHECK(activate(ActivationKind::ConstantOne, 7.0) == 1.0);
}

TEST_CASE("scalar activation derivatives") {
  CHECK(activate_derivative(ActivationKind::Identity, 9.0) == 1.0);
  CHECK(activate_derivative(ActivationKind::Sigmoid, 0.0) == 0.25);
  CHECK(activate_derivative(ActivationKind::Tanh, 0.0) == 1.0);
  CHECK(activate_derivative(ActivationKind::Relu, 2.0) == 1.0);
  CHECK(activate_derivative(ActivationKind::Relu, -2.0) == 0.0);
  // subgradient choice at the kink
  CHECK(activate_derivative(ActivationKind::Relu, 0.0) == 0.0);
  CHECK(activate_derivative(ActivationKind::ConstantOne, 7.0) == 0.0);
}

TEST_CASE("derivatives match central finite differences") {
  std::mt19937_64 rng(201);
  const double eps = 1e-6;
  for (ActivationKind kind : kAllKinds) {
    int checked = 0;
    while (checked < 100) {
      const double t = test::urand(rng, -4.0, 4.0);
      if (kind == ActivationKind::Relu && std::abs(t) <= eps) continue;  // kink band
      const double numeric = (activate(kind, t + eps) - activate(kind, t - eps)) / (2.0 * eps);
      CHECK(std::abs(numeric - activate_derivative(kind, t)) <= 1e-6);
      ++checked;
    }
  }
}

TEST_CASE("apply is coordinate-wise") {
  std::mt19937_64 rng(202);
  const ColVec y = test::random_vector(rng, 5, 3.0);
  const ActivationColumn identity = ActivationColumn::uniform(ActivationKind::Identity, 5);
  CHECK(apply(identity, y) == y);
  CHECK(apply(identity, y).size() == y.size());

  ColVec pair(2);
  pair << 0.0, 7.0;
  const ActivationColumn mixed(
      std::vector<ActivationKind>{ActivationKind::Tanh, ActivationKind::ConstantOne});
  const ColVec out = apply(mixed, pair);
  CHECK(out(0) == 0.0);
  CHECK(out(1) == 1.0);
}

TEST_CASE("derivative is coordinate-wise") {
  const ActivationColumn identity = ActivationColumn::uniform(ActivationKind::Identity, 3);
  CHECK(derivative(identity, ColVec::Zero(3)) == ColVec::Ones(3));

  const ActivationColumn mixed(
      std::vector<ActivationKind>{ActivationKind::Sigmoid, ActivationKind::ConstantOne});
  ColVec y(2);
  y << 0.0, 5.0;
  const ColVec d = derivative(mixed, y);
  CHECK(d(0) == 0.25);
  CHECK(d(1) == 0.0);
}

TEST_CASE("length mismatches are rejected") {
  const ActivationColumn col = ActivationColumn::uniform(ActivationKind::Tanh, 3);
  CHECK_THROWS_AS(apply(col, ColVec::Zero(2)), ShapeError);
  CHECK_THROWS_AS(derivative(col, ColVec::Zero(4)), ShapeError);
}

TEST_CASE("wire names round-trip") {
  for (ActivationKind kind : kAllKinds) CHECK(parse_activation(activation_name(kind)) == kind);
  CHECK(activation_name(ActivationKind::ConstantOne) == "one");
  CHECK_THROWS_AS(parse_activation("softmax"), std::invalid_argument);
  CHECK_THROWS_AS(parse_activation(""), std::invalid_argument);
}
