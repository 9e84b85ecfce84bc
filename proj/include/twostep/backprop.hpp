#pragma once

#include <vector>

#include "twostep/network.hpp"
#include "twostep/types.hpp"

namespace twostep {

/// Cost sensitivities per layer: delta_up(h) = dJ/dX^h for h in [0, L] and
/// delta_down(h) = dJ/dY^h for h in [1, L]. Both hold genuine coordinates
/// only; bias coordinates never appear.
struct DeltaSet {
  std::vector<ColVec> up;    // up[h] = delta_up^h
  std::vector<ColVec> down;  // down[h-1] = delta_down^h

  const ColVec& delta_up(Index h) const { return up[static_cast<std::size_t>(h)]; }
  const ColVec& delta_down(Index h) const { return down[static_cast<std::size_t>(h - 1)]; }
  Index depth() const { return static_cast<Index>(down.size()); }
};

/// dJ/dW^h per layer, shape-matched to the weights.
struct GradientSet {
  std::vector<Matrix> grads;  // grads[h-1] = dJ/dW^h

  const Matrix& grad(Index h) const { return grads[static_cast<std::size_t>(h - 1)]; }
  Index depth() const { return static_cast<Index>(grads.size()); }
};

struct BackwardResult {
  DeltaSet deltas;
  GradientSet gradients;
};

/// Two-step backward pass, the mirror image of forward. Seeds
/// delta_up^L = loss_grad and walks h = L..1 with
///
///   delta_down^h = delta_up^h . sigma'(Y^h)        (element-wise)
///   dJ/dW^h      = delta_down^h (X^{h-1})^T
///   delta_up^{h-1} = W^T delta_down^h
///
/// where W is W^h without its bias column in Augmented mode and the full W^h
/// otherwise. delta_up^0 (the input sensitivity) falls out of the loop and is
/// returned for inspection; training ignores it.
BackwardResult two_step_backward(const Network& net, const ForwardTrace& trace,
                                 const ColVec& loss_grad);

/// Textbook single-delta recursion, kept as an intentionally separate code
/// path: first delta^L = loss_grad . sigma'(Y^L) and
/// delta^h = [(W^{h+1})^T delta^{h+1}] . sigma'(Y^h) for h = L-1..1 (bias
/// coordinates of the propagated vector are stripped in Augmented mode), then
/// dJ/dW^h = delta^h (X^{h-1})^T in a second sweep.
GradientSet classical_backward(const Network& net, const ForwardTrace& trace,
                               const ColVec& loss_grad);

/// W^h <- W^h - lr * dJ/dW^h for every layer; returns the updated network.
Network apply_gradients(const Network& net, const GradientSet& grads, double lr);

}  // namespace twostep
