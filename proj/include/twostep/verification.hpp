#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twostep/backprop.hpp"
#include "twostep/loss.hpp"
#include "twostep/network.hpp"
#include "twostep/types.hpp"

namespace twostep {

/// |a - b| / max(|a|, |b|, 1e-12). The floor keeps near-zero entries from
/// blowing up the quotient.
inline double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
}

struct LayerCheck {
  Index layer = 0;  // 1-based
  double max_abs = 0.0;
  double max_rel = 0.0;
  Index row = 0;  // argmax of the relative error within the layer
  Index col = 0;
  bool pass = true;
};

struct GradCheckReport {
  std::vector<LayerCheck> layers;
  double tolerance = 0.0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  Index layer = 0;  // overall argmax of the relative error
  Index row = 0;
  Index col = 0;
  bool pass = true;
};

/// Central differences over every weight entry: each evaluation is a full
/// fresh forward pass on a perturbed copy; the input network is never touched.
GradientSet finite_difference_gradients(const Network& net, LossKind kind, const ColVec& x,
                                        const ColVec& y, double eps = 1e-6);

/// Gradients of the 1-1-1 augmented network (weights w1, w2 both 1x2, scalar
/// input x, one activation kind sigma everywhere) written out by hand:
///
///   u  = w1(0,0) x + w1(0,1)                 hidden preactivation
///   z  = w2(0,0) sigma(u) + w2(0,1)          output preactivation
///   dW2 = [ sigma'(z) sigma(u),  sigma'(z) ]
///   dW1 = [ sigma'(z) sigma'(u) w2(0,0) x,  sigma'(z) sigma'(u) w2(0,0) ]
///
/// computed with scalar arithmetic only; no backward machinery involved.
/// Returns (dW1, dW2).
std::pair<Matrix, Matrix> closed_form_a111(const Matrix& w1, const Matrix& w2, double x,
                                           ActivationKind act);

/// Same idea for the 1-2-1 augmented network (w1 is 2x2, w2 is 1x3).
/// Returns (dW1 as 2x2, dW2 as 1x3).
std::pair<Matrix, Matrix> closed_form_a121(const Matrix& w1, const Matrix& w2, double x,
                                           ActivationKind act);

/// Entrywise comparison of two shape-matched gradient sets; pass iff the
/// overall max relative error is <= tol.
GradCheckReport compare_gradients(const GradientSet& a, const GradientSet& b, double tol);

std::string report_table(const GradCheckReport& report);
nlohmann::json report_json(const GradCheckReport& report);

}  // namespace twostep
