#pragma once

#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <string>

namespace fracbdf {

/// IEEE binary128. Used where the discretization error of a high-order scheme
/// sits below the double-precision roundoff floor.
using Quad = boost::multiprecision::float128;

enum class Precision { Double, Quad };

inline std::string to_string(Precision p) { return p == Precision::Double ? "double" : "quad"; }

}  // namespace fracbdf
