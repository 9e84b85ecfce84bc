#pragma once

#include <string>

#include "twostep/types.hpp"

namespace twostep {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// "[a, b, c]"
std::string format_vector(const ColVec& v);

/// "[[a, b], [c, d]]" (row-major)
std::string format_matrix(const Matrix& m);

}  // namespace twostep
