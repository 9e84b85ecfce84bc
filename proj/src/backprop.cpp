#include "twostep/backprop.hpp"

#include <string>
#include <utility>

#include "twostep/matrix_ops.hpp"

namespace twostep {

namespace {

void require_compatible(const char* op, const Network& net, const ForwardTrace& trace,
                        const ColVec& loss_grad) {
  if (trace.depth() != net.depth())
    throw ShapeError(std::string(op) + ": trace has " + std::to_string(trace.depth()) +
                     " layers, network has " + std::to_string(net.depth()));
  if (loss_grad.size() != net.spec().output_dim())
    throw ShapeError(std::string(op) + ": loss gradient has dim " +
                     std::to_string(loss_grad.size()) + ", output layer has dim " +
                     std::to_string(net.spec().output_dim()));
}

}  // namespace

BackwardResult two_step_backward(const Network& net, const ForwardTrace& trace,
                                 const ColVec& loss_grad) {
  require_compatible("two_step_backward", net, trace, loss_grad);
  const Index depth = net.depth();
  const bool augmented = net.spec().bias_mode == BiasMode::Augmented;

  DeltaSet deltas;
  deltas.up.resize(static_cast<std::size_t>(depth) + 1);
  deltas.down.resize(static_cast<std::size_t>(depth));
  GradientSet grads;
  grads.grads.resize(static_cast<std::size_t>(depth));

  deltas.up[static_cast<std::size_t>(depth)] = loss_grad;
  for (Index h = depth; h >= 1; --h) {
    const ColVec sigma_prime = derivative(net.activation_column(h), trace.preactivation(h));
    ColVec down = hadamard(deltas.delta_up(h), sigma_prime);
    grads.grads[static_cast<std::size_t>(h - 1)] = outer(down, trace.activation(h - 1));
    const Matrix back =
        augmented ? transpose(drop_last_column(net.weight(h))) : transpose(net.weight(h));
    deltas.up[static_cast<std::size_t>(h - 1)] = matvec(back, down);
    deltas.down[static_cast<std::size_t>(h - 1)] = std::move(down);
  }
  return {std::move(deltas), std::move(grads)};
}

GradientSet classical_backward(const Network& net, const ForwardTrace& trace,
                               const ColVec& loss_grad) {
  require_compatible("classical_backward", net, trace, loss_grad);
  const Index depth = net.depth();
  const bool augmented = net.spec().bias_mode == BiasMode::Augmented;

  std::vector<ColVec> delta(static_cast<std::size_t>(depth));
  delta[static_cast<std::size_t>(depth - 1)] =
      hadamard(loss_grad, derivative(net.activation_column(depth), trace.preactivation(depth)));
  for (Index h = depth - 1; h >= 1; --h) {
    ColVec back = matvec(transpose(net.weight(h + 1)), delta[static_cast<std::size_t>(h)]);
    if (augmented) back = ColVec(back.head(net.spec().sizes[static_cast<std::size_t>(h)]));
    delta[static_cast<std::size_t>(h - 1)] =
        hadamard(back, derivative(net.activation_column(h), trace.preactivation(h)));
  }

  GradientSet grads;
  grads.grads.reserve(static_cast<std::size_t>(depth));
  for (Index h = 1; h <= depth; ++h)
    grads.grads.push_back(outer(delta[static_cast<std::size_t>(h - 1)], trace.activation(h - 1)));
  return grads;
}

Network apply_gradients(const Network& net, const GradientSet& grads, double lr) {
  if (grads.depth() != net.depth())
    throw ShapeError("apply_gradients: gradient set has " + std::to_string(grads.depth()) +
                     " layers, network has " + std::to_string(net.depth()));
  std::vector<Matrix> updated;
  updated.reserve(static_cast<std::size_t>(net.depth()));
  for (Index h = 1; h <= net.depth(); ++h) updated.push_back(axpy(-lr, grads.grad(h), net.weight(h)));
  return net.with_weights(std::move(updated));
}

}  // namespace twostep
