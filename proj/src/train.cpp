#include "twostep/train.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

namespace twostep {

namespace {

// Fisher-Yates on raw mt19937_64 draws; std::shuffle's draw sequence is
// implementation-defined and would break the reproducibility contract.
void shuffle_order(std::vector<std::size_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }
}

}  // namespace

TrainResult train(const TrainConfig& config, const Dataset& data) {
  config.spec.validate();
  if (config.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");
  if (!(config.learning_rate >= 0.0))
    throw std::invalid_argument("train: learning rate must be >= 0");
  if (data.inputs.empty()) throw std::invalid_argument("train: dataset is empty");
  if (data.inputs.size() != data.targets.size())
    throw ShapeError("train: dataset has " + std::to_string(data.inputs.size()) +
                     " inputs but " + std::to_string(data.targets.size()) + " targets");
  for (std::size_t s = 0; s < data.size(); ++s) {
    if (data.inputs[s].size() != config.spec.input_dim())
      throw ShapeError("train: sample " + std::to_string(s) + " input has dim " +
                       std::to_string(data.inputs[s].size()) + ", spec expects " +
                       std::to_string(config.spec.input_dim()));
    if (data.targets[s].size() != config.spec.output_dim())
      throw ShapeError("train: sample " + std::to_string(s) + " target has dim " +
                       std::to_string(data.targets[s].size()) + ", spec expects " +
                       std::to_string(config.spec.output_dim()));
  }

  Network net = init_network(config.spec, config.seed, config.init_scale);
  std::mt19937_64 shuffle_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(config.epochs));
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    if (config.shuffle) shuffle_order(order, shuffle_rng);
    double total = 0.0;
    for (const std::size_t s : order) {
      const ForwardTrace trace = forward(net, data.inputs[s]);
      const double value = loss_value(config.loss, output(trace), data.targets[s]);
      if (!std::isfinite(value))
        throw TrainingError("train: loss is not finite at epoch " + std::to_string(epoch) +
                            ", sample " + std::to_string(s));
      total += value;
      const ColVec grad = loss_grad(config.loss, output(trace), data.targets[s]);
      const BackwardResult back = two_step_backward(net, trace, grad);
      net = apply_gradients(net, back.gradients, config.learning_rate);
    }
    history.push_back(total / static_cast<double>(data.size()));
  }
  return {std::move(net), std::move(history)};
}

}  // namespace twostep
