#include "collatz/gridgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace collatz {

std::vector<std::pair<Point, Point>> SegmentGraph::edges() const {
    std::vector<std::pair<Point, Point>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (int d = 0; d < degree_[i]; ++d) {
            const int j = adj_[i][d];
            if (static_cast<std::size_t>(j) > i) {
                const Point a = vertices_[i];
                const Point b = vertices_[j];
                out.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int SegmentGraph::index_of(const Point& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int SegmentGraph::add_vertex(const Point& p) {
    auto [it, inserted] = index_.try_emplace(p, static_cast<int>(vertices_.size()));
    if (inserted) {
        vertices_.push_back(p);
        adj_.push_back({-1, -1, -1, -1});
        degree_.push_back(0);
    }
    return it->second;
}

void SegmentGraph::add_edge(const Point& a, const Point& b) {
    const int dx = std::abs(a.x - b.x);
    const int dy = std::abs(a.y - b.y);
    if (dx + dy != 1) {
        throw DomainError("segment endpoints must be one lattice unit apart");
    }
    const int i = add_vertex(a);
    const int j = add_vertex(b);
    for (int d = 0; d < degree_[i]; ++d) {
        if (adj_[i][d] == j) {
            return;  // retraced segment collapses
        }
    }
    adj_[i][degree_[i]++] = j;
    adj_[j][degree_[j]++] = i;
    ++edge_count_;
}

bool operator==(const SegmentGraph& lhs, const SegmentGraph& rhs) {
    if (lhs.vertex_count() != rhs.vertex_count() || lhs.edge_count() != rhs.edge_count()) {
        return false;
    }
    auto lv = lhs.vertices_;
    auto rv = rhs.vertices_;
    std::sort(lv.begin(), lv.end());
    std::sort(rv.begin(), rv.end());
    return lv == rv && lhs.edges() == rhs.edges();
}

SegmentGraph graph_of(const Walk& walk) {
    SegmentGraph g;
    if (walk.points.empty()) {
        return g;
    }
    g.add_vertex(walk.points.front());
    for (std::size_t i = 0; i + 1 < walk.points.size(); ++i) {
        g.add_edge(walk.points[i], walk.points[i + 1]);
    }
    return g;
}

bool is_acyclic(const SegmentGraph& g) {
    // Union-find over the edge list: an edge inside one component closes
    // a cycle.
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        for (int d = 0; d < g.degree(i); ++d) {
            const int j = g.neighbors(i)[d];
            if (static_cast<std::size_t>(j) < i) {
                continue;  // each undirected edge once
            }
            const int ri = find(static_cast<int>(i));
            const int rj = find(j);
            if (ri == rj) {
                return false;
            }
            parent[ri] = rj;
        }
    }
    return true;
}

std::optional<int> girth(const SegmentGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0) {
        return std::nullopt;
    }

    // Unit-lattice graphs are simple and bipartite, so 4 is the shortest
    // cycle possible; reaching it ends the search.
    constexpr int kFloor = 4;

    int best = -1;  // -1 = no cycle seen yet
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    std::vector<int> queue(n);

    for (std::size_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        queue[0] = static_cast<int>(root);
        std::size_t head = 0, tail = 1;
        while (head < tail) {
            const int u = queue[head++];
            // The cheapest cycle closable from u costs 2*dist[u] (via a
            // neighbour one level up); deeper pops only cost more.
            if (best > 0 && 2 * dist[u] >= best) {
                break;
            }
            for (int d = 0; d < g.degree(u); ++d) {
                const int v = g.neighbors(u)[d];
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue[tail++] = v;
                } else if (v != parent[u]) {
                    const int cycle = dist[u] + dist[v] + 1;
                    if (best < 0 || cycle < best) {
                        best = cycle;
                    }
                }
            }
        }
        if (best == kFloor) {
            break;
        }
    }
    if (best < 0) {
        return std::nullopt;
    }
    return best;
}

}  // namespace collatz
