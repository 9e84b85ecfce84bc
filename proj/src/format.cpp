#include "twostep/format.hpp"

#include <charconv>

namespace twostep {

std::string format_double(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

std::string format_vector(const ColVec& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(v(i));
  }
  return out + "]";
}

std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += format_double(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace twostep
