#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "collatz/walk.hpp"

namespace collatz {

// Undirected simple graph of lattice vertices and unit edges. Built from a
// Walk by collapsing retraced segments to a single edge; every vertex has
// degree at most 4.
class SegmentGraph {
public:
    SegmentGraph() = default;

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<Point>& vertices() const noexcept { return vertices_; }

    // Edges with endpoints ordered (min, max), sorted; canonical for
    // set comparison.
    std::vector<std::pair<Point, Point>> edges() const;

    // Neighbour indices of vertex i.
    std::array<int, 4> neighbors(std::size_t i) const noexcept { return adj_[i]; }
    int degree(std::size_t i) const noexcept { return degree_[i]; }

    // Index of a point, or -1 if absent.
    int index_of(const Point& p) const;

    // Inserts the vertex if new; returns its index.
    int add_vertex(const Point& p);

    // Inserts an undirected unit edge, deduplicating. Endpoints are added
    // as needed.
    void add_edge(const Point& a, const Point& b);

    // Same vertex set and same edge set.
    friend bool operator==(const SegmentGraph& lhs, const SegmentGraph& rhs);

private:
    std::vector<Point> vertices_;
    std::unordered_map<Point, int, PointHash> index_;
    std::vector<std::array<int, 4>> adj_;
    std::vector<std::uint8_t> degree_;
    std::size_t edge_count_ = 0;
};

// Deduplicated graph view of a walk: vertex set = distinct visited points,
// edge set = distinct undirected unit segments.
SegmentGraph graph_of(const Walk& walk);

// Forest test via union-find, implemented independently of girth() so the
// two can cross-check each other.
bool is_acyclic(const SegmentGraph& g);

// Length of the shortest cycle, or nullopt when the graph has none.
// BFS rooted at every vertex; on these lattice graphs any finite result is
// even and at least 4.
std::optional<int> girth(const SegmentGraph& g);

}  // namespace collatz
