// twostep command line: train networks, check gradients, inspect traces.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twostep/backprop.hpp"
#include "twostep/dataset.hpp"
#include "twostep/format.hpp"
#include "twostep/loss.hpp"
#include "twostep/model_io.hpp"
#include "twostep/network.hpp"
#include "twostep/trace_io.hpp"
#include "twostep/train.hpp"
#include "twostep/verification.hpp"

namespace {

using namespace twostep;

std::vector<std::string> split_on_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

std::vector<Index> parse_sizes(const std::string& text) {
  std::vector<Index> sizes;
  for (const std::string& part : split_on_commas(text)) {
    long long value = 0;
    const auto result = std::from_chars(part.data(), part.data() + part.size(), value);
    if (result.ec != std::errc() || result.ptr != part.data() + part.size() || value < 1)
      throw std::invalid_argument("bad architecture \"" + text +
                                  "\" (expected positive sizes like \"2,2,1\")");
    sizes.push_back(static_cast<Index>(value));
  }
  return sizes;
}

ColVec parse_vector(const std::string& text) {
  const std::vector<std::string> parts = split_on_commas(text);
  ColVec v(static_cast<Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    double value = 0.0;
    const auto result =
        std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), value);
    if (result.ec != std::errc() || result.ptr != parts[i].data() + parts[i].size())
      throw std::invalid_argument("bad vector \"" + text + "\" (expected numbers like \"2,1\")");
    v(static_cast<Index>(i)) = value;
  }
  return v;
}

void merge_into(GradCheckReport& agg, const GradCheckReport& rep) {
  for (std::size_t i = 0; i < agg.layers.size(); ++i) {
    LayerCheck& into = agg.layers[i];
    const LayerCheck& from = rep.layers[i];
    into.max_abs = std::max(into.max_abs, from.max_abs);
    if (from.max_rel > into.max_rel) {
      into.max_rel = from.max_rel;
      into.row = from.row;
      into.col = from.col;
    }
    into.pass = into.max_rel <= agg.tolerance;
  }
  agg.max_abs = std::max(agg.max_abs, rep.max_abs);
  if (rep.max_rel > agg.max_rel) {
    agg.max_rel = rep.max_rel;
    agg.layer = rep.layer;
    agg.row = rep.row;
    agg.col = rep.col;
  }
  agg.pass = agg.pass && rep.pass;
}

void print_report(const GradCheckReport& report, bool as_json) {
  if (as_json)
    std::cout << report_json(report).dump(2) << "\n";
  else
    std::cout << report_table(report);
}

struct TrainOpts {
  std::string arch;
  std::string bias = "augmented";
  std::string hidden_act = "tanh";
  std::string output_act = "identity";
  std::string loss = "squared-error";
  double lr = 0.1;
  int epochs = 100;
  std::uint64_t seed = 0;
  double init_scale = 1.0;
  bool shuffle = false;
  std::string data;
  std::string out;
};

int run_train(const TrainOpts& opts) {
  TrainConfig config;
  config.spec.sizes = parse_sizes(opts.arch);
  config.spec.bias_mode = parse_bias_mode(opts.bias);
  config.spec.hidden_activation = parse_activation(opts.hidden_act);
  config.spec.output_activation = parse_activation(opts.output_act);
  config.spec.validate();
  config.loss = parse_loss(opts.loss);
  config.learning_rate = opts.lr;
  config.epochs = opts.epochs;
  config.seed = opts.seed;
  config.init_scale = opts.init_scale;
  config.shuffle = opts.shuffle;

  const Dataset data = load_csv(opts.data, config.spec.input_dim(), config.spec.output_dim());
  const TrainResult result = train(config, data);

  const int stride = std::max(1, opts.epochs / 10);
  for (int e = 1; e <= opts.epochs; ++e)
    if (e == 1 || e == opts.epochs || e % stride == 0)
      std::cout << "epoch " << e << "/" << opts.epochs << "  mean loss "
                << format_double(result.epoch_mean_loss[static_cast<std::size_t>(e - 1)])
                << "\n";
  save_model(result.network, opts.out);
  std::cout << "wrote " << opts.out << "\n";
  return 0;
}

struct GradcheckOpts {
  std::string model;
  std::string data;
  std::string loss = "squared-error";
  double eps = 1e-6;
  double tol = 1e-5;
  bool json = false;
};

int run_gradcheck(const GradcheckOpts& opts) {
  const Network net = load_model(opts.model);
  const Dataset data = load_csv(opts.data, net.spec().input_dim(), net.spec().output_dim());
  const LossKind kind = parse_loss(opts.loss);

  GradCheckReport aggregate;
  for (std::size_t s = 0; s < data.size(); ++s) {
    const ForwardTrace trace = forward(net, data.inputs[s]);
    const ColVec grad = loss_grad(kind, output(trace), data.targets[s]);
    const GradientSet analytic = two_step_backward(net, trace, grad).gradients;
    const GradientSet numeric =
        finite_difference_gradients(net, kind, data.inputs[s], data.targets[s], opts.eps);
    const GradCheckReport report = compare_gradients(analytic, numeric, opts.tol);
    if (s == 0)
      aggregate = report;
    else
      merge_into(aggregate, report);
  }
  print_report(aggregate, opts.json);
  return aggregate.pass ? 0 : 1;
}

struct CompareOpts {
  std::string model;
  std::string input;
  std::string target;
  std::string loss = "squared-error";
  double tol = 1e-12;
  bool json = false;
};

int run_compare_rules(const CompareOpts& opts) {
  const Network net = load_model(opts.model);
  const ColVec x = parse_vector(opts.input);
  const ColVec y = opts.target.empty() ? ColVec(ColVec::Zero(net.spec().output_dim()))
                                       : parse_vector(opts.target);
  const LossKind kind = parse_loss(opts.loss);

  const ForwardTrace trace = forward(net, x);
  const ColVec grad = loss_grad(kind, output(trace), y);
  const GradientSet two_step = two_step_backward(net, trace, grad).gradients;
  const GradientSet classical = classical_backward(net, trace, grad);
  const GradCheckReport report = compare_gradients(two_step, classical, opts.tol);
  print_report(report, opts.json);
  return report.pass ? 0 : 1;
}

struct ForwardOpts {
  std::string model;
  std::string input;
};

int run_forward(const ForwardOpts& opts) {
  const Network net = load_model(opts.model);
  const ColVec out = output(forward(net, parse_vector(opts.input)));
  for (Index i = 0; i < out.size(); ++i) std::cout << (i ? ", " : "") << format_double(out(i));
  std::cout << "\n";
  return 0;
}

struct DumpOpts {
  std::string model;
  std::string input;
  std::string target;
  std::string loss = "squared-error";
};

int run_dump_trace(const DumpOpts& opts) {
  const Network net = load_model(opts.model);
  const ColVec x = parse_vector(opts.input);
  const ColVec y = opts.target.empty() ? ColVec(ColVec::Zero(net.spec().output_dim()))
                                       : parse_vector(opts.target);
  const LossKind kind = parse_loss(opts.loss);

  const ForwardTrace trace = forward(net, x);
  const ColVec grad = loss_grad(kind, output(trace), y);
  const BackwardResult back = two_step_backward(net, trace, grad);
  write_trace(std::cout, net, trace, back, kind, y);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feedforward network trainer built on a two-step backward rule, with "
               "gradient checking against finite differences and classical backprop"};
  app.require_subcommand(1);

  TrainOpts train_opts;
  CLI::App* train_cmd = app.add_subcommand("train", "train a network with per-sample SGD");
  train_cmd->add_option("--arch", train_opts.arch, "layer sizes, e.g. \"2,2,1\"")->required();
  train_cmd->add_option("--bias", train_opts.bias, "bias handling: augmented|none");
  train_cmd->add_option("--hidden-act", train_opts.hidden_act, "hidden activation");
  train_cmd->add_option("--output-act", train_opts.output_act, "output activation");
  train_cmd->add_option("--loss", train_opts.loss, "loss: squared-error|paper-identity");
  train_cmd->add_option("--lr", train_opts.lr, "learning rate")->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--epochs", train_opts.epochs, "epoch count")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--seed", train_opts.seed, "RNG seed for init and shuffling");
  train_cmd->add_option("--init-scale", train_opts.init_scale, "uniform init half-width")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_flag("--shuffle", train_opts.shuffle, "shuffle samples each epoch");
  train_cmd->add_option("--data", train_opts.data, "training CSV")->required();
  train_cmd->add_option("--out", train_opts.out, "model file to write")->required();

  GradcheckOpts gradcheck_opts;
  CLI::App* gradcheck_cmd = app.add_subcommand(
      "gradcheck", "compare two-step gradients with central finite differences");
  gradcheck_cmd->add_option("--model", gradcheck_opts.model, "model file")->required();
  gradcheck_cmd->add_option("--data", gradcheck_opts.data, "CSV of samples to check")
      ->required();
  gradcheck_cmd->add_option("--loss", gradcheck_opts.loss, "loss kind");
  gradcheck_cmd->add_option("--eps", gradcheck_opts.eps, "finite-difference step")
      ->check(CLI::PositiveNumber);
  gradcheck_cmd->add_option("--tol", gradcheck_opts.tol, "max relative error to pass")
      ->check(CLI::PositiveNumber);
  gradcheck_cmd->add_flag("--json", gradcheck_opts.json, "machine-readable report");

  CompareOpts compare_opts;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare-rules", "run two-step and classical backprop on one sample and compare");
  compare_cmd->add_option("--model", compare_opts.model, "model file")->required();
  compare_cmd->add_option("--input", compare_opts.input, "input vector \"v1,v2,...\"")
      ->required();
  compare_cmd->add_option("--target", compare_opts.target, "target vector (default zeros)");
  compare_cmd->add_option("--loss", compare_opts.loss, "loss kind");
  compare_cmd->add_option("--tol", compare_opts.tol, "max relative error to pass")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_flag("--json", compare_opts.json, "machine-readable report");

  ForwardOpts forward_opts;
  CLI::App* forward_cmd = app.add_subcommand("forward", "run the network on one input");
  forward_cmd->add_option("--model", forward_opts.model, "model file")->required();
  forward_cmd->add_option("--input", forward_opts.input, "input vector \"v1,v2,...\"")
      ->required();

  DumpOpts dump_opts;
  CLI::App* dump_cmd = app.add_subcommand(
      "dump-trace", "print every forward and backward quantity of one pass");
  dump_cmd->add_option("--model", dump_opts.model, "model file")->required();
  dump_cmd->add_option("--input", dump_opts.input, "input vector \"v1,v2,...\"")->required();
  dump_cmd->add_option("--target", dump_opts.target, "target vector (default zeros)");
  dump_cmd->add_option("--loss", dump_opts.loss, "loss kind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (train_cmd->parsed()) return run_train(train_opts);
    if (gradcheck_cmd->parsed()) return run_gradcheck(gradcheck_opts);
    if (compare_cmd->parsed()) return run_compare_rules(compare_opts);
    if (forward_cmd->parsed()) return run_forward(forward_opts);
    if (dump_cmd->parsed()) return run_dump_trace(dump_opts);
  } catch (const TrainingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
