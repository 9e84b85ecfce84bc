#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "twostep/activation.hpp"
#include "twostep/types.hpp"

namespace twostep {

/// Augmented: activation vectors feeding a layer carry a trailing constant 1
/// and every weight matrix gains a bias column. None: plain W^h X^{h-1}.
enum class BiasMode { Augmented, None };

std::string_view bias_mode_name(BiasMode mode);  // "augmented" | "none"
BiasMode parse_bias_mode(std::string_view name);

/// Fully connected feedforward architecture. sizes = [N_0, ..., N_L] counts
/// genuine neurons per layer; L = sizes.size() - 1 is the depth.
struct NetworkSpec {
  std::vector<Index> sizes;
  ActivationKind hidden_activation = ActivationKind::Tanh;
  ActivationKind output_activation = ActivationKind::Identity;
  BiasMode bias_mode = BiasMode::Augmented;

  Index depth() const { return static_cast<Index>(sizes.size()) - 1; }
  Index input_dim() const { return sizes.front(); }
  Index output_dim() const { return sizes.back(); }
  /// Column count of W^layer (adds the bias column in Augmented mode).
  Index fan_in(Index layer) const;
  void validate() const;
};

/// Immutable weights plus one activation column per layer. The standard
/// constructor derives uniform columns from the spec; the explicit-columns
/// overload supports heterogeneous layers (e.g. a formal ConstantOne neuron).
class Network {
 public:
  Network(NetworkSpec spec, std::vector<Matrix> weights);
  Network(NetworkSpec spec, std::vector<Matrix> weights, std::vector<ActivationColumn> columns);

  const NetworkSpec& spec() const { return spec_; }
  Index depth() const { return spec_.depth(); }
  /// W^h for h in [1, depth()].
  const Matrix& weight(Index h) const { return weights_[static_cast<std::size_t>(h - 1)]; }
  const std::vector<Matrix>& weights() const { return weights_; }
  /// Activations applied to Y^h, for h in [1, depth()].
  const ActivationColumn& activation_column(Index h) const {
    return columns_[static_cast<std::size_t>(h - 1)];
  }
  /// Same spec and activation columns, different weights.
  Network with_weights(std::vector<Matrix> weights) const;

 private:
  void validate() const;

  NetworkSpec spec_;
  std::vector<Matrix> weights_;
  std::vector<ActivationColumn> columns_;
};

/// Per-layer caches from one forward pass. Hidden activations carry the
/// trailing 1 in Augmented mode; the output X^L never does.
struct ForwardTrace {
  ColVec x0;                           // stored input, augmented if applicable
  std::vector<ColVec> preactivations;  // Y^1 .. Y^L
  std::vector<ColVec> activations;     // X^1 .. X^L

  Index depth() const { return static_cast<Index>(preactivations.size()); }
  /// Y^h for h in [1, depth()].
  const ColVec& preactivation(Index h) const {
    return preactivations[static_cast<std::size_t>(h - 1)];
  }
  /// X^h for h in [0, depth()]; h == 0 yields the stored input.
  const ColVec& activation(Index h) const {
    return h == 0 ? x0 : activations[static_cast<std::size_t>(h - 1)];
  }
};

/// Weights drawn i.i.d. uniform on [-scale, scale] from a generator that
/// depends only on (seed), so identical arguments give bit-identical networks.
Network init_network(const NetworkSpec& spec, std::uint64_t seed, double scale);

/// Two-step forward pass: Y^h = W^h X^{h-1}, X^h = sigma(Y^h).
ForwardTrace forward(const Network& net, const ColVec& x);

/// The network output X^L.
const ColVec& output(const ForwardTrace& trace);

}  // namespace twostep
