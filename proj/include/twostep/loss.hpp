#pragma once

#include <string_view>

#include "twostep/types.hpp"

namespace twostep {

/// PaperIdentity: J = sum_i (output_i - target_i), gradient = ones. Constant
/// gradient makes it useless for training but ideal for seeding worked
/// backward examples. SquaredError: J = 0.5 ||output - target||^2.
enum class LossKind { PaperIdentity, SquaredError };

/// Wire names: "paper-identity", "squared-error".
std::string_view loss_name(LossKind kind);
LossKind parse_loss(std::string_view name);

double loss_value(LossKind kind, const ColVec& output, const ColVec& target);

/// dJ/dX^L, the seed of the backward pass.
ColVec loss_grad(LossKind kind, const ColVec& output, const ColVec& target);

}  // namespace twostep
