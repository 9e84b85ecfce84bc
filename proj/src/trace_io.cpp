#include "twostep/trace_io.hpp"

#include "twostep/format.hpp"

namespace twostep {

void write_trace(std::ostream& os, const Network& net, const ForwardTrace& trace,
                 const BackwardResult& back, LossKind kind, const ColVec& target) {
  const NetworkSpec& spec = net.spec();
  os << "network sizes=[";
  for (std::size_t i = 0; i < spec.sizes.size(); ++i)
    os << (i ? ", " : "") << spec.sizes[i];
  os << "] bias=" << bias_mode_name(spec.bias_mode) << "\n";

  os << "forward\n";
  os << "  X^0 = " << format_vector(trace.x0) << "\n";
  for (Index h = 1; h <= trace.depth(); ++h) {
    os << "  Y^" << h << " = " << format_vector(trace.preactivation(h)) << "\n";
    os << "  X^" << h << " = " << format_vector(trace.activation(h)) << "\n";
  }

  os << "loss\n";
  os << "  kind = " << loss_name(kind) << "\n";
  os << "  target = " << format_vector(target) << "\n";
  os << "  value = " << format_double(loss_value(kind, output(trace), target)) << "\n";

  os << "backward\n";
  for (Index h = trace.depth(); h >= 1; --h) {
    os << "  delta_up^" << h << " = " << format_vector(back.deltas.delta_up(h)) << "\n";
    os << "  delta_down^" << h << " = " << format_vector(back.deltas.delta_down(h)) << "\n";
    os << "  delta_W^" << h << " = " << format_matrix(back.gradients.grad(h)) << "\n";
  }
  os << "  delta_up^0 = " << format_vector(back.deltas.delta_up(0)) << "\n";
}

}  // namespace twostep
