#include "twostep/model_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace twostep {

namespace {

bool has_uniform_columns(const Network& net) {
  const NetworkSpec& spec = net.spec();
  for (Index h = 1; h <= net.depth(); ++h) {
    const ActivationKind expected =
        h < net.depth() ? spec.hidden_activation : spec.output_activation;
    for (ActivationKind kind : net.activation_column(h).kinds())
      if (kind != expected) return false;
  }
  return true;
}

}  // namespace

nlohmann::json model_to_json(const Network& net) {
  if (!has_uniform_columns(net))
    throw std::invalid_argument(
        "model files describe layer-uniform activations; this network uses custom "
        "per-coordinate columns");
  const NetworkSpec& spec = net.spec();
  nlohmann::json weights = nlohmann::json::array();
  for (Index h = 1; h <= net.depth(); ++h) {
    const Matrix& w = net.weight(h);
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < w.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Index j = 0; j < w.cols(); ++j) row.push_back(w(i, j));
      rows.push_back(std::move(row));
    }
    weights.push_back(std::move(rows));
  }
  return {{"sizes", spec.sizes},
          {"bias_mode", bias_mode_name(spec.bias_mode)},
          {"hidden_activation", activation_name(spec.hidden_activation)},
          {"output_activation", activation_name(spec.output_activation)},
          {"weights", std::move(weights)}};
}

Network model_from_json(const nlohmann::json& doc) {
  NetworkSpec spec;
  std::vector<Matrix> weights;
  try {
    spec.sizes = doc.at("sizes").get<std::vector<Index>>();
    spec.bias_mode = parse_bias_mode(doc.at("bias_mode").get<std::string>());
    spec.hidden_activation = parse_activation(doc.at("hidden_activation").get<std::string>());
    spec.output_activation = parse_activation(doc.at("output_activation").get<std::string>());

    const nlohmann::json& layers = doc.at("weights");
    if (!layers.is_array()) throw IoError("model: \"weights\" must be an array");
    for (const nlohmann::json& rows : layers) {
      if (!rows.is_array() || rows.empty())
        throw IoError("model: each weight matrix must be a nonempty array of rows");
      const std::size_t cols = rows.front().size();
      Matrix w(static_cast<Index>(rows.size()), static_cast<Index>(cols));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols)
          throw IoError("model: ragged weight matrix at layer " +
                        std::to_string(weights.size() + 1));
        for (std::size_t j = 0; j < cols; ++j) {
          const double value = rows[i][j].get<double>();
          if (!std::isfinite(value))
            throw IoError("model: non-finite weight at layer " +
                          std::to_string(weights.size() + 1));
          w(static_cast<Index>(i), static_cast<Index>(j)) = value;
        }
      }
      weights.push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("model: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("model: ") + e.what());
  }
  return Network(std::move(spec), std::move(weights));
}

Network load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("model file " + path.string() + ": " + e.what());
  }
  return model_from_json(doc);
}

void save_model(const Network& net, const std::filesystem::path& path) {
  const nlohmann::json doc = model_to_json(net);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write model file " + tmp.string());
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("failed writing model file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace twostep
