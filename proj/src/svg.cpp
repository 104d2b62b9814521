#include "collatz/svg.hpp"

#include <algorithm>
#include <sstream>

namespace collatz {

namespace {

// Shortest decimal text for a double ("1" not "1.000000").
std::string number_text(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

}  // namespace

std::string render_svg(const Walk& walk, const RenderOptions& opts) {
    if (walk.points.size() < 2) {
        throw DomainError("cannot render an empty walk");
    }
    if (opts.scale < 1) {
        throw DomainError("scale must be >= 1");
    }
    if (opts.margin < 0) {
        throw DomainError("margin must be >= 0");
    }
    if (opts.stroke_width <= 0.0) {
        throw DomainError("stroke width must be positive");
    }

    auto [min_x_it, max_x_it] = std::minmax_element(
        walk.points.begin(), walk.points.end(),
        [](const Point& a, const Point& b) { return a.x < b.x; });
    auto [min_y_it, max_y_it] = std::minmax_element(
        walk.points.begin(), walk.points.end(),
        [](const Point& a, const Point& b) { return a.y < b.y; });
    const long min_x = min_x_it->x;
    const long max_y = max_y_it->y;

    // Lattice north is up; SVG y grows downward, so y flips around max_y.
    const auto px = [&](const Point& p) {
        return std::pair<long, long>{
            (p.x - min_x) * opts.scale + opts.margin,
            (max_y - p.y) * opts.scale + opts.margin,
        };
    };

    const long width = (max_x_it->x - min_x) * opts.scale + 2L * opts.margin;
    const long height = (max_y - min_y_it->y) * opts.scale + 2L * opts.margin;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << width << "\" height=\"" << height << "\" "
        << "viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "  <path d=\"";
    for (std::size_t i = 0; i < walk.points.size(); ++i) {
        const auto [x, y] = px(walk.points[i]);
        svg << (i == 0 ? "M" : " L") << x << " " << y;
    }
    svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
        << number_text(opts.stroke_width)
        << "\" stroke-linecap=\"square\" stroke-linejoin=\"miter\"/>\n";
    if (opts.mark_start) {
        const auto [x, y] = px(walk.points.front());
        svg << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\""
            << number_text(opts.stroke_width * 2.0) << "\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace collatz
