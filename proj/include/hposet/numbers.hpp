#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hposet {

/// Exact integer for closed-form counts that outgrow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace hposet
