#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace awm {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace awm
