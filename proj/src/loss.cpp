#include "twostep/loss.hpp"

#include <stdexcept>
#include <string>

namespace twostep {

std::string_view loss_name(LossKind kind) {
  return kind == LossKind::PaperIdentity ? "paper-identity" : "squared-error";
}

LossKind parse_loss(std::string_view name) {
  if (name == "paper-identity") return LossKind::PaperIdentity;
  if (name == "squared-error") return LossKind::SquaredError;
  throw std::invalid_argument("unknown loss \"" + std::string(name) +
                              "\" (expected paper-identity or squared-error)");
}

namespace {

void require_same_dim(const char* op, const ColVec& output, const ColVec& target) {
  if (output.size() != target.size())
    throw ShapeError(std::string(op) + ": output has dim " + std::to_string(output.size()) +
                     ", target has dim " + std::to_string(target.size()));
}

}  // namespace

double loss_value(LossKind kind, const ColVec& output, const ColVec& target) {
  require_same_dim("loss_value", output, target);
  switch (kind) {
    case LossKind::PaperIdentity:
      return (output - target).sum();
    case LossKind::SquaredError:
      return 0.5 * (output - target).squaredNorm();
  }
  throw std::invalid_argument("unknown loss kind");
}

ColVec loss_grad(LossKind kind, const ColVec& output, const ColVec& target) {
  require_same_dim("loss_grad", output, target);
  switch (kind) {
    case LossKind::PaperIdentity:
      return ColVec::Ones(output.size());
    case LossKind::SquaredError:
      return output - target;
  }
  throw std::invalid_argument("unknown loss kind");
}

}  // namespace twostep
