#include "collatz/codec.hpp"

#include <algorithm>

namespace collatz {

BigInt step(const BigInt& n) {
    if (n < 1) {
        throw DomainError("step requires n >= 1");
    }
    if ((n & 1) == 0) {
        return n >> 1;
    }
    return (3 * n + 1) >> 1;
}

Trajectory trajectory(const BigInt& n, std::uint64_t step_cap) {
    if (n < 1) {
        throw DomainError("trajectory requires n >= 1");
    }
    if (step_cap == 0) {
        throw DomainError("step_cap must be positive");
    }
    Trajectory result;
    result.start = n;
    result.values.push_back(n);
    BigInt value = n;
    std::uint64_t steps = 0;
    while (value != 1) {
        if (steps == step_cap) {
            throw CapExceeded(n.str(), step_cap);
        }
        value = step(value);
        result.values.push_back(value);
        ++steps;
    }
    return result;
}

std::uint64_t stopping_time(const BigInt& n, std::uint64_t step_cap) {
    if (n < 1) {
        throw DomainError("stopping_time requires n >= 1");
    }
    if (step_cap == 0) {
        throw DomainError("step_cap must be positive");
    }
    // Same iteration as trajectory without materializing the sequence.
    BigInt value = n;
    std::uint64_t steps = 0;
    while (value != 1) {
        if (steps == step_cap) {
            throw CapExceeded(n.str(), step_cap);
        }
        value = step(value);
        ++steps;
    }
    return steps;
}

Encoding encode(const BigInt& n, std::uint64_t step_cap) {
    if (n < 2) {
        throw DomainError("encode requires n >= 2");
    }
    Encoding enc;
    enc.source_n = n;

    // Bits are produced right to left: the parity of each iterate before
    // the step that consumes it, for every iterate except the final 1.
    std::string lsb_first;
    BigInt value = n;
    std::uint64_t steps = 0;
    while (value != 1) {
        if (steps == step_cap) {
            throw CapExceeded(n.str(), step_cap);
        }
        lsb_first.push_back((value & 1) == 0 ? '1' : '0');
        value = step(value);
        ++steps;
    }
    enc.bits.assign(lsb_first.rbegin(), lsb_first.rend());
    enc.value = value_from_bits(enc.bits);
    return enc;
}

std::vector<BigInt> decode_sequence(std::string_view bits) {
    if (bits.empty()) {
        throw InvalidEncoding("empty bit string");
    }
    if (bits.front() == '0') {
        throw InvalidEncoding("encoding starts with '0'");
    }
    std::vector<BigInt> seq;
    seq.reserve(bits.size() + 1);
    BigInt n = 1;
    seq.push_back(n);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char b = bits[i];
        if (b == '1') {
            n <<= 1;
        } else if (b == '0') {
            BigInt numerator = 2 * n - 1;
            if (numerator % 3 != 0) {
                throw InvalidEncoding("'0' step at position " + std::to_string(i) +
                                      " is not divisible by 3");
            }
            n = numerator / 3;
            // A value below 2 here would put an interior 1 in the reverse
            // sequence; no encoding of an n >= 2 does that.
            if (n < 2) {
                throw InvalidEncoding("'0' step at position " + std::to_string(i) +
                                      " falls below 2");
            }
        } else {
            throw InvalidEncoding("non-binary character in bit string");
        }
        seq.push_back(n);
    }
    return seq;
}

BigInt decode(std::string_view bits) {
    return decode_sequence(bits).back();
}

std::string bits_from_value(const BigInt& value) {
    if (value < 1) {
        throw DomainError("bits_from_value requires value >= 1");
    }
    std::string bits;
    for (BigInt v = value; v != 0; v >>= 1) {
        bits.push_back((v & 1) != 0 ? '1' : '0');
    }
    std::reverse(bits.begin(), bits.end());
    return bits;
}

BigInt value_from_bits(std::string_view bits) {
    if (bits.empty()) {
        throw DomainError("empty bit string");
    }
    BigInt value = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') {
            throw DomainError("non-binary character in bit string");
        }
        value <<= 1;
        if (b == '1') {
            value |= 1;
        }
    }
    return value;
}

}  // namespace collatz
