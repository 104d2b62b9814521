#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/errors.hpp"

namespace collatz {

// Lattice point. Coordinates stay within +/- walk length, so 32 bits hold
// any walk this library produces; geometry is integer-exact throughout.
struct Point {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x));
        auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
        return std::hash<std::uint64_t>{}((ux << 32) | uy);
    }
};

// Compass headings. Order is counterclockwise so a left turn is +1 mod 4
// and a right turn is +3 mod 4.
enum class Heading : std::uint8_t { East = 0, North = 1, West = 2, South = 3 };

// Turtle on the integer lattice. Starts at the origin facing east; turns
// are quarter turns, moves are unit steps.
struct TurtleState {
    Point position{0, 0};
    Heading heading = Heading::East;

    void turn_left() noexcept {
        heading = static_cast<Heading>((static_cast<int>(heading) + 1) % 4);
    }
    void turn_right() noexcept {
        heading = static_cast<Heading>((static_cast<int>(heading) + 3) % 4);
    }
    void advance() noexcept;
};

enum class Rule : std::uint8_t { Collatz, Reverse, OnChangeTurnRight, Dragon };

std::string_view rule_name(Rule rule) noexcept;

// Parses "collatz" / "reverse" / "on-change" / "dragon". Throws DomainError
// on anything else.
Rule rule_from_name(std::string_view name);

// A directed unit segment as traversed.
struct Segment {
    Point a;
    Point b;

    friend auto operator<=>(const Segment&, const Segment&) = default;
};

// Ordered turtle path: every consumed source symbol contributes exactly one
// unit segment, so points.size() == source.size() + 1. Retracing previously
// drawn segments is preserved here; collapsing is the graph view's job.
struct Walk {
    Rule rule = Rule::Collatz;
    std::string source;         // the bit or R/L string consumed
    std::vector<Point> points;  // starts at (0,0)

    std::size_t segment_count() const noexcept { return points.size() - 1; }
    std::vector<Segment> segments() const;
};

// Curve of a binary encoding: bits are consumed right to left; '1' turns
// right then moves, '0' turns left then moves.
Walk collatz_walk(std::string_view bits);

// Same turn rules as collatz_walk but bits are consumed left to right.
Walk reverse_walk(std::string_view bits);

// Bits are consumed right to left; the turtle moves straight while the bit
// matches the previously consumed one and turns right on a change. The
// first bit has no predecessor and moves straight.
Walk on_change_walk(std::string_view bits);

inline constexpr int kDefaultDragonOrderCap = 24;

// Dragon-curve turn string: order 1 is "R", and each further order appends
// "R" plus the previous string reversed with every symbol flipped. Length
// is 2^order - 1. Throws DomainError for order < 1 and ResourceError above
// order_cap.
std::string dragon_string(int order, int order_cap = kDefaultDragonOrderCap);

// Turtle interpretation of dragon_string, consumed left to right (R = right
// turn then move, L = left turn then move).
Walk dragon_walk(int order, int order_cap = kDefaultDragonOrderCap);

}  // namespace collatz
