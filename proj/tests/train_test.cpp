#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "twostep/dataset.hpp"
#include "twostep/train.hpp"

using namespace twostep;

namespace {

Dataset xor_dataset() {
  Dataset data;
  const double rows[4][3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  for (const auto& row : rows) {
    ColVec x(2);
    x << row[0], row[1];
    ColVec y(1);
    y << row[2];
    data.inputs.push_back(x);
    data.targets.push_back(y);
  }
  return data;
}

Dataset linear_dataset() {
  Dataset data;
  for (double x : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
    ColVec in(1);
    in << x;
    ColVec out(1);
    out << 3.0 * x + 1.0;
    data.inputs.push_back(in);
    data.targets.push_back(out);
  }
  return data;
}

std::filesystem::path write_temp(const char* name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::trunc);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("zero learning rate leaves the weights at their init") {
  TrainConfig config;
  config.spec.sizes = {2, 2, 1};
  config.learning_rate = 0.0;
  config.epochs = 1;
  config.seed = 4;
  config.init_scale = 0.5;
  const TrainResult result = train(config, xor_dataset());
  CHECK(result.epoch_mean_loss.size() == 1);
  const Network fresh = init_network(config.spec, config.seed, config.init_scale);
  for (Index h = 1; h <= fresh.depth(); ++h)
    CHECK(result.network.weight(h) == fresh.weight(h));
}

TEST_CASE("linear regression recovers slope and intercept") {
  TrainConfig config;
  config.spec.sizes = {1, 1};
  config.spec.hidden_activation = ActivationKind::Identity;
  config.spec.output_activation = ActivationKind::Identity;
  config.spec.bias_mode = BiasMode::Augmented;
  config.loss = LossKind::SquaredError;
  config.learning_rate = 0.1;
  config.epochs = 3000;
  config.seed = 3;
  config.init_scale = 0.5;
  const TrainResult result = train(config, linear_dataset());

  const Matrix& w = result.network.weight(1);
  CHECK(std::abs(w(0, 0) - 3.0) <= 1e-3);
  CHECK(std::abs(w(0, 1) - 1.0) <= 1e-3);
  CHECK(result.epoch_mean_loss[199] < result.epoch_mean_loss[0]);
}

TEST_CASE("xor trains to low loss with tanh hidden units") {
  TrainConfig config;
  config.spec.sizes = {2, 2, 1};
  config.spec.hidden_activation = ActivationKind::Tanh;
  config.spec.output_activation = ActivationKind::Identity;
  config.spec.bias_mode = BiasMode::Augmented;
  config.loss = LossKind::SquaredError;
  config.learning_rate = 0.5;
  config.epochs = 5000;
  config.seed = 7;
  config.init_scale = 0.5;
  const TrainResult result = train(config, xor_dataset());
  CHECK(result.epoch_mean_loss.back() < 0.05);
}

TEST_CASE("training is deterministic") {
  TrainConfig config;
  config.spec.sizes = {2, 3, 1};
  config.learning_rate = 0.2;
  config.epochs = 40;
  config.seed = 11;
  config.shuffle = true;
  const TrainResult a = train(config, xor_dataset());
  const TrainResult b = train(config, xor_dataset());
  CHECK(a.epoch_mean_loss == b.epoch_mean_loss);
  for (Index h = 1; h <= a.network.depth(); ++h)
    CHECK(a.network.weight(h) == b.network.weight(h));
}

TEST_CASE("divergence aborts with epoch and sample in the message") {
  TrainConfig config;
  config.spec.sizes = {1, 1};
  config.spec.output_activation = ActivationKind::Identity;
  config.learning_rate = 1e8;
  config.epochs = 200;
  config.seed = 2;
  try {
    train(config, linear_dataset());
    FAIL("expected TrainingError");
  } catch (const TrainingError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("epoch") != std::string::npos);
    CHECK(msg.find("sample") != std::string::npos);
  }
}

TEST_CASE("config validation") {
  TrainConfig config;
  config.spec.sizes = {1, 1};
  config.epochs = 0;
  CHECK_THROWS_AS(train(config, linear_dataset()), std::invalid_argument);
  config.epochs = 1;
  config.learning_rate = -0.5;
  CHECK_THROWS_AS(train(config, linear_dataset()), std::invalid_argument);

  config.learning_rate = 0.1;
  Dataset bad = linear_dataset();
  bad.inputs[2] = ColVec::Zero(4);
  CHECK_THROWS_AS(train(config, bad), ShapeError);
}

TEST_CASE("csv loading") {
  const auto path = write_temp("twostep_data.csv",
                               "x1,x2,y\n"
                               "0, 0, 0\n"
                               "0,1,1\r\n"
                               "\n"
                               "1,0,1\n"
                               "1,1,0\n");
  const Dataset data = load_csv(path, 2, 1);
  CHECK(data.size() == 4);
  CHECK(data.inputs[1](1) == 1.0);
  CHECK(data.targets[3](0) == 0.0);
  std::filesystem::remove(path);

  const auto headerless = write_temp("twostep_data2.csv", "0.5,-1.5\n2e-1,3.25\n");
  const Dataset plain = load_csv(headerless, 1, 1);
  CHECK(plain.size() == 2);
  CHECK(plain.inputs[1](0) == 0.2);
  CHECK(plain.targets[0](0) == -1.5);
  std::filesystem::remove(headerless);
}

TEST_CASE("csv errors") {
  const auto short_row = write_temp("twostep_bad1.csv", "1,2,3\n1,2\n");
  CHECK_THROWS_AS(load_csv(short_row, 2, 1), IoError);
  std::filesystem::remove(short_row);

  const auto mid_junk = write_temp("twostep_bad2.csv", "1,2,3\n1,zap,3\n");
  CHECK_THROWS_AS(load_csv(mid_junk, 2, 1), IoError);
  std::filesystem::remove(mid_junk);

  const auto header_only = write_temp("twostep_bad3.csv", "a,b,c\n");
  CHECK_THROWS_AS(load_csv(header_only, 2, 1), IoError);
  std::filesystem::remove(header_only);

  CHECK_THROWS_AS(load_csv(std::filesystem::temp_directory_path() / "twostep_missing.csv", 2, 1),
                  IoError);
}
