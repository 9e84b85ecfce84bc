#pragma once

// Shared generators and comparison helpers for the test binaries. Everything
// is seeded explicitly; no test depends on global RNG state.

#include <random>
#include <stdexcept>
#include <vector>

#include "twostep/backprop.hpp"
#include "twostep/network.hpp"
#include "twostep/types.hpp"
#include "twostep/verification.hpp"

namespace test {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline twostep::Matrix random_matrix(std::mt19937_64& rng, twostep::Index rows,
                                     twostep::Index cols, double scale) {
  twostep::Matrix m(rows, cols);
  for (twostep::Index i = 0; i < rows; ++i)
    for (twostep::Index j = 0; j < cols; ++j) m(i, j) = urand(rng, -scale, scale);
  return m;
}

inline twostep::ColVec random_vector(std::mt19937_64& rng, twostep::Index n, double scale) {
  twostep::ColVec v(n);
  for (twostep::Index i = 0; i < n; ++i) v(i) = urand(rng, -scale, scale);
  return v;
}

inline double max_abs_diff(const twostep::Matrix& a, const twostep::Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_rel_diff(const twostep::Matrix& a, const twostep::Matrix& b) {
  double worst = 0.0;
  for (twostep::Index i = 0; i < a.rows(); ++i)
    for (twostep::Index j = 0; j < a.cols(); ++j)
      worst = std::max(worst, twostep::relative_error(a(i, j), b(i, j)));
  return worst;
}

inline double max_rel_diff(const twostep::GradientSet& a, const twostep::GradientSet& b) {
  double worst = 0.0;
  for (twostep::Index h = 1; h <= a.depth(); ++h)
    worst = std::max(worst, max_rel_diff(a.grad(h), b.grad(h)));
  return worst;
}

/// Architecture with depth 1..4 and widths 1..5; activations drawn from the
/// given kinds for hidden and output layers.
inline twostep::NetworkSpec random_spec(std::mt19937_64& rng,
                                        const std::vector<twostep::ActivationKind>& kinds) {
  twostep::NetworkSpec spec;
  const auto depth = static_cast<std::size_t>(1 + rng() % 4);
  spec.sizes.resize(depth + 1);
  for (auto& n : spec.sizes) n = static_cast<twostep::Index>(1 + rng() % 5);
  spec.hidden_activation = kinds[rng() % kinds.size()];
  spec.output_activation = kinds[rng() % kinds.size()];
  spec.bias_mode = (rng() % 2 == 0) ? twostep::BiasMode::Augmented : twostep::BiasMode::None;
  return spec;
}

inline twostep::ColVec append_one(const twostep::ColVec& v) {
  twostep::ColVec out(v.size() + 1);
  out.head(v.size()) = v;
  out(v.size()) = 1.0;
  return out;
}

/// Rewrites an Augmented network as a None-mode network over the augmented
/// input: each hidden layer gains one formal ConstantOne neuron fed by a zero
/// weight row, so its activation is the constant 1 the bias column expects.
inline twostep::Network fold_bias_network(const twostep::Network& net) {
  using namespace twostep;
  const NetworkSpec& spec = net.spec();
  if (spec.bias_mode != BiasMode::Augmented)
    throw std::invalid_argument("fold_bias_network: expected an Augmented network");
  const Index depth = spec.depth();

  NetworkSpec folded;
  folded.bias_mode = BiasMode::None;
  folded.hidden_activation = spec.hidden_activation;
  folded.output_activation = spec.output_activation;
  folded.sizes.resize(spec.sizes.size());
  for (std::size_t i = 0; i < spec.sizes.size(); ++i)
    folded.sizes[i] = spec.sizes[i] + (static_cast<Index>(i) < depth ? 1 : 0);

  std::vector<Matrix> weights;
  std::vector<ActivationColumn> columns;
  for (Index h = 1; h <= depth; ++h) {
    const Matrix& w = net.weight(h);
    if (h < depth) {
      Matrix grown = Matrix::Zero(w.rows() + 1, w.cols());
      grown.topRows(w.rows()) = w;
      weights.push_back(std::move(grown));
      std::vector<ActivationKind> kinds(static_cast<std::size_t>(w.rows()),
                                        spec.hidden_activation);
      kinds.push_back(ActivationKind::ConstantOne);
      columns.push_back(ActivationColumn(std::move(kinds)));
    } else {
      weights.push_back(w);
      columns.push_back(ActivationColumn::uniform(spec.output_activation, w.rows()));
    }
  }
  return Network(std::move(folded), std::move(weights), std::move(columns));
}

}  // namespace test
