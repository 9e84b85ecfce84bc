#include "twostep/network.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "twostep/matrix_ops.hpp"

namespace twostep {

std::string_view bias_mode_name(BiasMode mode) {
  return mode == BiasMode::Augmented ? "augmented" : "none";
}

BiasMode parse_bias_mode(std::string_view name) {
  if (name == "augmented") return BiasMode::Augmented;
  if (name == "none") return BiasMode::None;
  throw std::invalid_argument("unknown bias mode \"" + std::string(name) +
                              "\" (expected augmented or none)");
}

Index NetworkSpec::fan_in(Index layer) const {
  return sizes[static_cast<std::size_t>(layer - 1)] + (bias_mode == BiasMode::Augmented ? 1 : 0);
}

void NetworkSpec::validate() const {
  if (sizes.size() < 2)
    throw std::invalid_argument("network spec needs at least an input and an output layer");
  for (Index n : sizes)
    if (n < 1) throw std::invalid_argument("network spec: all layer sizes must be >= 1");
}

namespace {

std::vector<ActivationColumn> uniform_columns(const NetworkSpec& spec) {
  std::vector<ActivationColumn> columns;
  const Index depth = spec.depth();
  columns.reserve(static_cast<std::size_t>(depth));
  for (Index h = 1; h <= depth; ++h) {
    const ActivationKind kind = h < depth ? spec.hidden_activation : spec.output_activation;
    columns.push_back(ActivationColumn::uniform(kind, spec.sizes[static_cast<std::size_t>(h)]));
  }
  return columns;
}

ColVec with_trailing_one(const ColVec& v) {
  ColVec out(v.size() + 1);
  out.head(v.size()) = v;
  out(v.size()) = 1.0;
  return out;
}

}  // namespace

Network::Network(NetworkSpec spec, std::vector<Matrix> weights)
    : spec_(std::move(spec)), weights_(std::move(weights)), columns_(uniform_columns(spec_)) {
  validate();
}

Network::Network(NetworkSpec spec, std::vector<Matrix> weights,
                 std::vector<ActivationColumn> columns)
    : spec_(std::move(spec)), weights_(std::move(weights)), columns_(std::move(columns)) {
  validate();
}

void Network::validate() const {
  spec_.validate();
  const Index depth = spec_.depth();
  if (static_cast<Index>(weights_.size()) != depth)
    throw ShapeError("network: expected " + std::to_string(depth) + " weight matrices, got " +
                     std::to_string(weights_.size()));
  if (static_cast<Index>(columns_.size()) != depth)
    throw ShapeError("network: expected " + std::to_string(depth) + " activation columns, got " +
                     std::to_string(columns_.size()));
  for (Index h = 1; h <= depth; ++h) {
    const Matrix& w = weight(h);
    const Index rows = spec_.sizes[static_cast<std::size_t>(h)];
    const Index cols = spec_.fan_in(h);
    if (w.rows() != rows || w.cols() != cols)
      throw ShapeError("network: W^" + std::to_string(h) + " must be " +
                       detail::shape_str(rows, cols) + ", got " + detail::shape_str(w));
    if (activation_column(h).size() != rows)
      throw ShapeError("network: activation column for layer " + std::to_string(h) +
                       " must have " + std::to_string(rows) + " coordinates, got " +
                       std::to_string(activation_column(h).size()));
  }
}

Network Network::with_weights(std::vector<Matrix> weights) const {
  return Network(spec_, std::move(weights), columns_);
}

Network init_network(const NetworkSpec& spec, std::uint64_t seed, double scale) {
  spec.validate();
  if (!(scale >= 0.0)) throw std::invalid_argument("init_network: scale must be >= 0");
  std::mt19937_64 rng(seed);
  // 53 mantissa bits drawn directly; the stream must not depend on the
  // standard library's distribution internals.
  const auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Matrix> weights;
  weights.reserve(static_cast<std::size_t>(spec.depth()));
  for (Index h = 1; h <= spec.depth(); ++h) {
    Matrix w(spec.sizes[static_cast<std::size_t>(h)], spec.fan_in(h));
    for (Index i = 0; i < w.rows(); ++i)
      for (Index j = 0; j < w.cols(); ++j) w(i, j) = scale * (2.0 * uniform01() - 1.0);
    weights.push_back(std::move(w));
  }
  return Network(spec, std::move(weights));
}

ForwardTrace forward(const Network& net, const ColVec& x) {
  const NetworkSpec& spec = net.spec();
  if (x.size() != spec.input_dim())
    throw ShapeError("forward: input has dim " + std::to_string(x.size()) +
                     ", network expects " + std::to_string(spec.input_dim()));
  const bool augmented = spec.bias_mode == BiasMode::Augmented;
  const Index depth = net.depth();

  ForwardTrace trace;
  trace.x0 = augmented ? with_trailing_one(x) : x;
  trace.preactivations.reserve(static_cast<std::size_t>(depth));
  trace.activations.reserve(static_cast<std::size_t>(depth));
  for (Index h = 1; h <= depth; ++h) {
    ColVec y = matvec(net.weight(h), trace.activation(h - 1));
    ColVec xh = apply(net.activation_column(h), y);
    if (augmented && h < depth) xh = with_trailing_one(xh);
    trace.preactivations.push_back(std::move(y));
    trace.activations.push_back(std::move(xh));
  }
  return trace;
}

const ColVec& output(const ForwardTrace& trace) { return trace.activations.back(); }

}  // namespace twostep
