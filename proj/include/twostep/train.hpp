#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "twostep/backprop.hpp"
#include "twostep/dataset.hpp"
#include "twostep/loss.hpp"
#include "twostep/network.hpp"

namespace twostep {

struct TrainConfig {
  NetworkSpec spec;
  LossKind loss = LossKind::SquaredError;
  double learning_rate = 0.1;
  int epochs = 1;
  std::uint64_t seed = 0;
  double init_scale = 1.0;
  bool shuffle = false;
};

/// Raised when a run goes non-finite; the message names the epoch and sample.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainResult {
  Network network;
  std::vector<double> epoch_mean_loss;
};

/// Per-sample gradient descent: for each sample in (optionally shuffled)
/// order, forward -> loss gradient -> two-step backward -> weight update.
/// Deterministic for fixed (config, data).
TrainResult train(const TrainConfig& config, const Dataset& data);

}  // namespace twostep
