#include "collatz/walk.hpp"

#include <algorithm>

namespace collatz {

namespace {

constexpr std::array<Point, 4> kUnit = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

void require_bits(std::string_view bits) {
    if (bits.empty()) {
        throw DomainError("bit string is empty");
    }
    if (bits.find_first_not_of("01") != std::string_view::npos) {
        throw DomainError("bit string contains characters other than 0/1");
    }
}

}  // namespace

void TurtleState::advance() noexcept {
    const Point d = kUnit[static_cast<int>(heading)];
    position.x += d.x;
    position.y += d.y;
}

std::string_view rule_name(Rule rule) noexcept {
    switch (rule) {
        case Rule::Collatz: return "collatz";
        case Rule::Reverse: return "reverse";
        case Rule::OnChangeTurnRight: return "on-change";
        case Rule::Dragon: return "dragon";
    }
    return "?";
}

Rule rule_from_name(std::string_view name) {
    if (name == "collatz") return Rule::Collatz;
    if (name == "reverse") return Rule::Reverse;
    if (name == "on-change") return Rule::OnChangeTurnRight;
    if (name == "dragon") return Rule::Dragon;
    throw DomainError("unknown rule '" + std::string(name) +
                      "' (expected collatz, reverse, on-change or dragon)");
}

std::vector<Segment> Walk::segments() const {
    std::vector<Segment> segs;
    segs.reserve(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        segs.push_back({points[i], points[i + 1]});
    }
    return segs;
}

namespace {

// Turn-then-move over an already-oriented symbol sequence.
template <typename Iter>
std::vector<Point> run_turtle(Iter first, Iter last, auto&& turn_of) {
    TurtleState turtle;
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(std::distance(first, last)) + 1);
    points.push_back(turtle.position);
    for (Iter it = first; it != last; ++it) {
        switch (turn_of(*it)) {
            case 'R': turtle.turn_right(); break;
            case 'L': turtle.turn_left(); break;
            default: break;  // no turn
        }
        turtle.advance();
        points.push_back(turtle.position);
    }
    return points;
}

char bit_turn(char b) { return b == '1' ? 'R' : 'L'; }

}  // namespace

Walk collatz_walk(std::string_view bits) {
    require_bits(bits);
    Walk walk;
    walk.rule = Rule::Collatz;
    walk.source.assign(bits);
    walk.points = run_turtle(bits.rbegin(), bits.rend(), bit_turn);
    return walk;
}

Walk reverse_walk(std::string_view bits) {
    require_bits(bits);
    Walk walk;
    walk.rule = Rule::Reverse;
    walk.source.assign(bits);
    walk.points = run_turtle(bits.begin(), bits.end(), bit_turn);
    return walk;
}

Walk on_change_walk(std::string_view bits) {
    require_bits(bits);
    Walk walk;
    walk.rule = Rule::OnChangeTurnRight;
    walk.source.assign(bits);

    // The first consumed bit has no predecessor: no change yet, no turn.
    TurtleState turtle;
    walk.points.reserve(bits.size() + 1);
    walk.points.push_back(turtle.position);
    char prev = 0;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        if (prev != 0 && *it != prev) {
            turtle.turn_right();
        }
        prev = *it;
        turtle.advance();
        walk.points.push_back(turtle.position);
    }
    return walk;
}

std::string dragon_string(int order, int order_cap) {
    if (order < 1) {
        throw DomainError("dragon order must be >= 1");
    }
    if (order > order_cap) {
        throw ResourceError("dragon order " + std::to_string(order) +
                            " exceeds cap " + std::to_string(order_cap));
    }
    std::string s = "R";
    s.reserve((std::size_t{1} << order) - 1);
    for (int k = 1; k < order; ++k) {
        const std::size_t n = s.size();
        s.push_back('R');
        // Append the first n symbols reversed and flipped.
        for (std::size_t i = 0; i < n; ++i) {
            s.push_back(s[n - 1 - i] == 'R' ? 'L' : 'R');
        }
    }
    return s;
}

Walk dragon_walk(int order, int order_cap) {
    Walk walk;
    walk.rule = Rule::Dragon;
    walk.source = dragon_string(order, order_cap);
    walk.points = run_turtle(walk.source.begin(), walk.source.end(),
                             [](char c) { return c; });
    return walk;
}

}  // namespace collatz
