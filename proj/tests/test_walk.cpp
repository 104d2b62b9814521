#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "collatz/codec.hpp"
#include "collatz/walk.hpp"
#include "oracles.hpp"

using collatz::Point;

namespace {

// Undirected segment set of a walk, for shape comparisons.
std::set<std::pair<Point, Point>> segment_set(const collatz::Walk& w) {
    std::set<std::pair<Point, Point>> out;
    for (const auto& s : w.segments()) {
        out.insert(s.a < s.b ? std::pair{s.a, s.b} : std::pair{s.b, s.a});
    }
    return out;
}

// Number of steps where the move direction differs from the previous one
// (the first segment counts as a turn when it does not head east).
int turn_count(const collatz::Walk& w) {
    int turns = 0;
    Point prev_dir{1, 0};  // initial heading is east
    for (const auto& s : w.segments()) {
        const Point dir{s.b.x - s.a.x, s.b.y - s.a.y};
        if (dir != prev_dir) {
            ++turns;
        }
        prev_dir = dir;
    }
    return turns;
}

bool is_unit_square(const std::set<std::pair<Point, Point>>& segs) {
    if (segs.size() != 4) {
        return false;
    }
    std::set<Point> corners;
    for (const auto& [a, b] : segs) {
        corners.insert(a);
        corners.insert(b);
    }
    if (corners.size() != 4) {
        return false;
    }
    const Point lo = *corners.begin();
    return corners == std::set<Point>{lo,
                                      {lo.x + 1, lo.y},
                                      {lo.x, lo.y + 1},
                                      {lo.x + 1, lo.y + 1}};
}

}  // namespace

TEST_CASE("collatz_walk geometry") {
    // A single '1': right turn from east, one step south.
    const auto one = collatz::collatz_walk("1");
    CHECK(one.points == std::vector<Point>{{0, 0}, {0, -1}});
    CHECK(one.rule == collatz::Rule::Collatz);
    CHECK(one.source == "1");

    // n=3: five turtle steps, simulated by hand.
    const auto three = collatz::collatz_walk("11100");
    CHECK(three.points ==
          std::vector<Point>{{0, 0}, {0, 1}, {-1, 1}, {-1, 2}, {0, 2}, {0, 1}});

    // n=5 traces the four sides of a unit square.
    CHECK(is_unit_square(segment_set(collatz::collatz_walk("1110"))));
}

TEST_CASE("walk input validation") {
    CHECK_THROWS_AS(collatz::collatz_walk(""), collatz::DomainError);
    CHECK_THROWS_AS(collatz::collatz_walk("10a1"), collatz::DomainError);
    CHECK_THROWS_AS(collatz::reverse_walk(""), collatz::DomainError);
    CHECK_THROWS_AS(collatz::on_change_walk("2"), collatz::DomainError);
}

TEST_CASE("reverse_walk scans left to right") {
    CHECK(collatz::reverse_walk("1").points == collatz::collatz_walk("1").points);

    // "10" reversed-scan: right turn first, then left.
    const auto w = collatz::reverse_walk("10");
    CHECK(w.points == std::vector<Point>{{0, 0}, {0, -1}, {1, -1}});
    CHECK(w.rule == collatz::Rule::Reverse);
}

TEST_CASE("palindromic sources make collatz and reverse walks identical") {
    std::mt19937 rng(2025);
    for (int trial = 0; trial < 200; ++trial) {
        std::string half = testing_oracles::random_bits(rng, 1 + trial % 12);
        std::string bits = half;
        const bool odd_middle = trial % 2 == 0;
        if (odd_middle) {
            bits.push_back('1');
        }
        bits.append(half.rbegin(), half.rend());
        CAPTURE(bits);
        CHECK(collatz::collatz_walk(bits).points == collatz::reverse_walk(bits).points);
    }
}

TEST_CASE("square family: several encodings collapse onto one unit square") {
    for (unsigned n : {16u, 32u, 64u, 128u, 5u, 21u, 85u}) {
        CAPTURE(n);
        CHECK(is_unit_square(segment_set(collatz::collatz_walk(collatz::encode(n).bits))));
    }
}

TEST_CASE("on_change_walk moves straight until the bit changes") {
    CHECK(collatz::on_change_walk("111").points ==
          std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});

    // First (rightmost) bit moves east without turning; the change to '1'
    // turns right, heading south.
    CHECK(collatz::on_change_walk("10").points ==
          std::vector<Point>{{0, 0}, {1, 0}, {1, -1}});
}

TEST_CASE("on_change_walk turns strictly less often than collatz_walk") {
    const std::string bits27 = collatz::encode(27).bits;
    const int collatz_turns = turn_count(collatz::collatz_walk(bits27));
    const int on_change_turns = turn_count(collatz::on_change_walk(bits27));
    CHECK(collatz_turns == 70);  // every bit turns
    CHECK(on_change_turns < collatz_turns);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string bits = testing_oracles::random_bits(rng, 2 + trial % 40);
        CAPTURE(bits);
        int changes = 0;
        for (std::size_t i = 1; i < bits.size(); ++i) {
            changes += bits[i] != bits[i - 1];
        }
        // The collatz rule turns on every bit, the on-change rule only on
        // bit changes, of which there are at most length-1.
        CHECK(turn_count(collatz::collatz_walk(bits)) == static_cast<int>(bits.size()));
        CHECK(turn_count(collatz::on_change_walk(bits)) == changes);
        CHECK(changes < static_cast<int>(bits.size()));
    }
}

TEST_CASE("every walk takes unit axis steps, one per source symbol") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string bits = testing_oracles::random_bits(rng, 1 + trial % 30);
        for (const auto& walk : {collatz::collatz_walk(bits), collatz::reverse_walk(bits),
                                 collatz::on_change_walk(bits)}) {
            REQUIRE(walk.points.size() == bits.size() + 1);
            CHECK(walk.segment_count() == bits.size());
            CHECK(walk.points.front() == Point{0, 0});
            for (const auto& s : walk.segments()) {
                CHECK(std::abs(s.a.x - s.b.x) + std::abs(s.a.y - s.b.y) == 1);
            }
        }
    }
}

TEST_CASE("dragon_string recursion") {
    CHECK(collatz::dragon_string(1) == "R");
    CHECK(collatz::dragon_string(2) == "RRL");
    CHECK(collatz::dragon_string(3) == "RRLRRLL");
    CHECK(collatz::dragon_string(4) == "RRLRRLLRRRLLRLL");
    for (int order = 1; order <= 16; ++order) {
        CHECK(collatz::dragon_string(order).size() == (std::size_t{1} << order) - 1);
    }
    // Each string extends the previous one.
    for (int order = 2; order <= 10; ++order) {
        const auto prev = collatz::dragon_string(order - 1);
        CHECK(collatz::dragon_string(order).substr(0, prev.size()) == prev);
    }
    CHECK_THROWS_AS(collatz::dragon_string(0), collatz::DomainError);
    CHECK_THROWS_AS(collatz::dragon_string(-3), collatz::DomainError);
    CHECK_THROWS_AS(collatz::dragon_string(25), collatz::ResourceError);
    CHECK(collatz::dragon_string(8, 8).size() == 255);  // cap is inclusive
}

TEST_CASE("dragon_walk never retraces a segment") {
    CHECK(collatz::dragon_walk(1).points == std::vector<Point>{{0, 0}, {0, -1}});
    for (int order = 1; order <= 12; ++order) {
        CAPTURE(order);
        const auto walk = collatz::dragon_walk(order);
        CHECK(walk.segment_count() == (std::size_t{1} << order) - 1);
        CHECK(segment_set(walk).size() == walk.segment_count());
    }
}

TEST_CASE("rule names round-trip") {
    for (auto rule : {collatz::Rule::Collatz, collatz::Rule::Reverse,
                      collatz::Rule::OnChangeTurnRight, collatz::Rule::Dragon}) {
        CHECK(collatz::rule_from_name(collatz::rule_name(rule)) == rule);
    }
    CHECK_THROWS_AS(collatz::rule_from_name("spiral"), collatz::DomainError);
}
