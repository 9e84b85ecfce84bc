#pragma once

#include <filesystem>
#include <vector>

#include "twostep/types.hpp"

namespace twostep {

struct Dataset {
  std::vector<ColVec> inputs;
  std::vector<ColVec> targets;

  std::size_t size() const { return inputs.size(); }
};

/// CSV reader: one sample per row, the first input_dim columns are the input
/// and the last target_dim columns the target. ',' delimiter, '.' decimal
/// separator, optional header row (detected by a non-numeric first row).
Dataset load_csv(const std::filesystem::path& path, Index input_dim, Index target_dim);

}  // namespace twostep
