#include "twostep/verification.hpp"

#include <cstdio>
#include <stdexcept>

namespace twostep {

namespace {

double perturbed_loss(const Network& net, LossKind kind, const ColVec& x, const ColVec& y,
                      Index layer, Index row, Index col, double bump) {
  std::vector<Matrix> weights = net.weights();
  weights[static_cast<std::size_t>(layer - 1)](row, col) += bump;
  const Network probe = net.with_weights(std::move(weights));
  return loss_value(kind, output(forward(probe, x)), y);
}

void require_1x2(const char* op, const char* name, const Matrix& w) {
  if (w.rows() != 1 || w.cols() != 2)
    throw ShapeError(std::string(op) + ": " + name + " must be 1x2, got " + detail::shape_str(w));
}

}  // namespace

GradientSet finite_difference_gradients(const Network& net, LossKind kind, const ColVec& x,
                                        const ColVec& y, double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("finite_difference_gradients: eps must be positive");
  GradientSet out;
  out.grads.reserve(static_cast<std::size_t>(net.depth()));
  for (Index h = 1; h <= net.depth(); ++h) {
    const Matrix& w = net.weight(h);
    Matrix g(w.rows(), w.cols());
    for (Index i = 0; i < w.rows(); ++i) {
      for (Index j = 0; j < w.cols(); ++j) {
        const double plus = perturbed_loss(net, kind, x, y, h, i, j, eps);
        const double minus = perturbed_loss(net, kind, x, y, h, i, j, -eps);
        g(i, j) = (plus - minus) / (2.0 * eps);
      }
    }
    out.grads.push_back(std::move(g));
  }
  return out;
}

std::pair<Matrix, Matrix> closed_form_a111(const Matrix& w1, const Matrix& w2, double x,
                                           ActivationKind act) {
  require_1x2("closed_form_a111", "w1", w1);
  require_1x2("closed_form_a111", "w2", w2);
  const double u = w1(0, 0) * x + w1(0, 1);
  const double su = activate(act, u);
  const double du = activate_derivative(act, u);
  const double z = w2(0, 0) * su + w2(0, 1);
  const double dz = activate_derivative(act, z);

  Matrix d_w2(1, 2);
  d_w2 << dz * su, dz;
  Matrix d_w1(1, 2);
  d_w1 << dz * du * w2(0, 0) * x, dz * du * w2(0, 0);
  return {d_w1, d_w2};
}

std::pair<Matrix, Matrix> closed_form_a121(const Matrix& w1, const Matrix& w2, double x,
                                           ActivationKind act) {
  if (w1.rows() != 2 || w1.cols() != 2)
    throw ShapeError("closed_form_a121: w1 must be 2x2, got " + detail::shape_str(w1));
  if (w2.rows() != 1 || w2.cols() != 3)
    throw ShapeError("closed_form_a121: w2 must be 1x3, got " + detail::shape_str(w2));
  const double u1 = w1(0, 0) * x + w1(0, 1);
  const double u2 = w1(1, 0) * x + w1(1, 1);
  const double s1 = activate(act, u1);
  const double s2 = activate(act, u2);
  const double d1 = activate_derivative(act, u1);
  const double d2 = activate_derivative(act, u2);
  const double z = w2(0, 0) * s1 + w2(0, 1) * s2 + w2(0, 2);
  const double dz = activate_derivative(act, z);

  Matrix d_w2(1, 3);
  d_w2 << dz * s1, dz * s2, dz;
  Matrix d_w1(2, 2);
  d_w1 << w2(0, 0) * x * d1 * dz, w2(0, 0) * d1 * dz,  //
      w2(0, 1) * x * d2 * dz, w2(0, 1) * d2 * dz;
  return {d_w1, d_w2};
}

GradCheckReport compare_gradients(const GradientSet& a, const GradientSet& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("compare_gradients: tolerance must be positive");
  if (a.depth() != b.depth())
    throw ShapeError("compare_gradients: gradient sets have " + std::to_string(a.depth()) +
                     " vs " + std::to_string(b.depth()) + " layers");
  GradCheckReport report;
  report.tolerance = tol;
  for (Index h = 1; h <= a.depth(); ++h) {
    const Matrix& ga = a.grad(h);
    const Matrix& gb = b.grad(h);
    if (ga.rows() != gb.rows() || ga.cols() != gb.cols())
      throw ShapeError("compare_gradients: layer " + std::to_string(h) + " shapes differ, " +
                       detail::shape_str(ga) + " vs " + detail::shape_str(gb));
    LayerCheck check;
    check.layer = h;
    for (Index i = 0; i < ga.rows(); ++i) {
      for (Index j = 0; j < ga.cols(); ++j) {
        const double abs_err = std::abs(ga(i, j) - gb(i, j));
        const double rel_err = relative_error(ga(i, j), gb(i, j));
        check.max_abs = std::max(check.max_abs, abs_err);
        if (rel_err > check.max_rel) {
          check.max_rel = rel_err;
          check.row = i;
          check.col = j;
        }
      }
    }
    check.pass = check.max_rel <= tol;
    report.max_abs = std::max(report.max_abs, check.max_abs);
    if (report.layers.empty() || check.max_rel > report.max_rel) {
      report.max_rel = check.max_rel;
      report.layer = check.layer;
      report.row = check.row;
      report.col = check.col;
    }
    report.pass = report.pass && check.pass;
    report.layers.push_back(check);
  }
  return report;
}

namespace {

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string report_table(const GradCheckReport& report) {
  std::string out = "layer  max_abs       max_rel       at        pass\n";
  for (const LayerCheck& check : report.layers) {
    char line[128];
    std::snprintf(line, sizeof line, "%-6lld %-13s %-13s (%lld, %lld)%*s%s\n",
                  static_cast<long long>(check.layer), short_num(check.max_abs).c_str(),
                  short_num(check.max_rel).c_str(), static_cast<long long>(check.row),
                  static_cast<long long>(check.col), 4, "", check.pass ? "yes" : "NO");
    out += line;
  }
  out += "overall: max_rel " + short_num(report.max_rel) + " at layer " +
         std::to_string(report.layer) + " (" + std::to_string(report.row) + ", " +
         std::to_string(report.col) + "), tolerance " + short_num(report.tolerance) + " -> " +
         (report.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

nlohmann::json report_json(const GradCheckReport& report) {
  nlohmann::json layers = nlohmann::json::array();
  for (const LayerCheck& check : report.layers) {
    layers.push_back({{"layer", check.layer},
                      {"max_abs", check.max_abs},
                      {"max_rel", check.max_rel},
                      {"at", {check.row, check.col}},
                      {"pass", check.pass}});
  }
  return {{"layers", layers},
          {"max_abs", report.max_abs},
          {"max_rel", report.max_rel},
          {"at", {report.layer, report.row, report.col}},
          {"tolerance", report.tolerance},
          {"pass", report.pass}};
}

}  // namespace twostep
