#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/errors.hpp"

namespace collatz {

// Upper bound on iteration steps. The conjecture is unproven, so every loop
// is bounded; 10^6 far exceeds any stopping time in the ranges swept here.
inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;

// The full value sequence n = T^0(n), T^1(n), ..., 1 under the compact map.
struct Trajectory {
    BigInt start;
    std::vector<BigInt> values;  // values.front() == start, values.back() == 1

    // Number of map applications to reach 1.
    std::uint64_t steps() const noexcept { return values.size() - 1; }
};

// Parity trace of a trajectory: bit k from the right is '1' iff the k-th
// iterate is even. Stored most-significant bit first, so `bits` prints in
// the same orientation as its decimal `value`. The leading bit is always
// '1' (the iterate before reaching 1 is 2, which is even), so no leading
// zeros are lost converting to and from `value`.
struct Encoding {
    BigInt source_n;
    std::string bits;  // MSB first, characters '0'/'1'
    BigInt value;      // bits read as a base-2 numeral
};

// One application of the compact map: n/2 if n is even, (3n+1)/2 if odd.
// Exact at any magnitude.
BigInt step(const BigInt& n);

// Iterates `step` from n until 1, returning the full value sequence.
// Throws DomainError for n < 1, CapExceeded if 1 is not reached in
// step_cap steps.
Trajectory trajectory(const BigInt& n, std::uint64_t step_cap = kDefaultStepCap);

// Number of steps to reach 1 (0 for n = 1).
std::uint64_t stopping_time(const BigInt& n, std::uint64_t step_cap = kDefaultStepCap);

// Parity encoding of n's trajectory. Requires n >= 2 (the encoding of 1
// would be empty). Bit length equals stopping_time(n).
Encoding encode(const BigInt& n, std::uint64_t step_cap = kDefaultStepCap);

// Reconstructs n from its encoding by scanning bits left to right from 1:
// double on '1', (2n-1)/3 on '0'. The sequence of values visited is the
// trajectory of the result, reversed. Throws InvalidEncoding when the
// string starts with '0', contains non-binary characters, or a '0' step
// does not land on an integer >= 2.
BigInt decode(std::string_view bits);

// The full value sequence visited by decode, starting at 1. decode(bits)
// is the last element.
std::vector<BigInt> decode_sequence(std::string_view bits);

// Binary numeral of value, MSB first. Inverse of Encoding::value for valid
// encodings. Throws DomainError for value < 1.
std::string bits_from_value(const BigInt& value);

// Bit string read as a base-2 numeral. Accepts any nonempty binary string.
BigInt value_from_bits(std::string_view bits);

}  // namespace collatz
