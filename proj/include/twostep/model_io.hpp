#pragma once

#include <filesystem>

#include <json.hpp>

#include "twostep/network.hpp"

namespace twostep {

// Model file layout (UTF-8 JSON):
//   sizes              integer array [N_0, ..., N_L]
//   bias_mode          "augmented" | "none"
//   hidden_activation  activation name
//   output_activation  activation name
//   weights            one row-major 2-D array per layer
// Only layer-uniform activations are representable; saving a network with
// custom per-coordinate columns is rejected.

nlohmann::json model_to_json(const Network& net);
Network model_from_json(const nlohmann::json& doc);

Network load_model(const std::filesystem::path& path);

/// Writes to a temporary file in the same directory, then renames, so a
/// crashed run never leaves a truncated model behind.
void save_model(const Network& net, const std::filesystem::path& path);

}  // namespace twostep
