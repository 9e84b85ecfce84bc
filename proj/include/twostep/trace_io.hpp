#pragma once

#include <ostream>

#include "twostep/backprop.hpp"
#include "twostep/loss.hpp"
#include "twostep/network.hpp"

namespace twostep {

/// Fixed text layout of one forward/backward pass: the forward chain
/// X^0, Y^1, X^1, ..., X^L, the loss seed, then per layer (L down to 1)
/// delta_up^h, delta_down^h, delta_W^h, ending with delta_up^0. Values are
/// printed in shortest round-trip form, so parsing them back reproduces the
/// in-process doubles exactly.
void write_trace(std::ostream& os, const Network& net, const ForwardTrace& trace,
                 const BackwardResult& back, LossKind kind, const ColVec& target);

}  // namespace twostep
