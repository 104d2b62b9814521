#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace collatz {

// Trajectory values and encoding values grow past 64 bits well inside the
// ranges this library sweeps, so all value arithmetic is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace collatz
