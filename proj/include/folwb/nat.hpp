#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace folwb {

// Arbitrary-precision natural number. All arithmetic in the workbench stays
// non-negative; subtraction is only performed where the caller has
// established dominance.
using Nat = boost::multiprecision::cpp_int;

}  // namespace folwb
