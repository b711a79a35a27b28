#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace limitshape {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace limitshape
