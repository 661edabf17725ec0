#include "pldig/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace pldig {

namespace {

DistanceOracle bfs_all_pairs(int n, const std::vector<std::vector<int>>& out) {
    std::vector<int> matrix(static_cast<std::size_t>(n) * n, DistanceOracle::kInfinity);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        int* row = matrix.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y : out[x]) {
                if (row[y] == DistanceOracle::kInfinity) {
                    row[y] = row[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return DistanceOracle(n, std::move(matrix));
}

}  // namespace

Digraph build_digraph(int n, const ArcSet& arcs) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "vertex count must be non-negative");
    Digraph d;
    d.n_ = n;
    d.arcs_ = arcs;
    std::sort(d.arcs_.begin(), d.arcs_.end());
    for (std::size_t i = 0; i < d.arcs_.size(); ++i) {
        const Arc& a = d.arcs_[i];
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            fail(ErrorKind::VertexOutOfRange,
                 "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                     ") outside 0.." + std::to_string(n - 1));
        if (a.tail == a.head)
            fail(ErrorKind::LoopArc, "loop at vertex " + std::to_string(a.tail));
        if (i > 0 && d.arcs_[i - 1] == a)
            fail(ErrorKind::DuplicateArc,
                 "duplicate arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
    }
    d.out_.assign(n, {});
    d.in_.assign(n, {});
    for (const Arc& a : d.arcs_) {
        d.out_[a.tail].push_back(a.head);
        d.in_[a.head].push_back(a.tail);
    }
    d.dist_ = bfs_all_pairs(n, d.out_);
    d.girth_ = DistanceOracle::kInfinity;
    for (const Arc& a : d.arcs_) {
        int back = d.dist_(a.head, a.tail);
        if (back != DistanceOracle::kInfinity)
            d.girth_ = std::min(d.girth_, back + 1);
    }
    return d;
}

bool Digraph::has_arc(int u, int v) const { return arc_index(u, v) >= 0; }

int Digraph::arc_index(int u, int v) const {
    Arc probe{u, v};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), probe);
    if (it != arcs_.end() && *it == probe) return static_cast<int>(it - arcs_.begin());
    return -1;
}

int min_in_degree(const Digraph& d) {
    if (d.vertex_count() == 0) return 0;
    int best = d.vertex_count();
    for (int v = 0; v < d.vertex_count(); ++v)
        best = std::min(best, static_cast<int>(d.in_neighbors(v).size()));
    return best;
}

const DistanceOracle& all_pairs_distances(const Digraph& d) { return d.distances(); }

int girth(const Digraph& d) { return d.girth_; }

ArcSet omega_minus_set(const Digraph& d, const VertexSet& u) {
    std::vector<char> inside(d.vertex_count(), 0);
    for (int v : u) inside[v] = 1;
    ArcSet result;
    for (const Arc& a : d.arcs())
        if (inside[a.head] && !inside[a.tail]) result.push_back(a);
    return result;
}

ArcSet omega_plus_set(const Digraph& d, const VertexSet& u) {
    std::vector<char> inside(d.vertex_count(), 0);
    for (int v : u) inside[v] = 1;
    ArcSet result;
    for (const Arc& a : d.arcs())
        if (inside[a.tail] && !inside[a.head]) result.push_back(a);
    return result;
}

VertexSet heads(const ArcSet& arcs) {
    VertexSet result;
    result.reserve(arcs.size());
    for (const Arc& a : arcs) result.push_back(a.head);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

VertexSet out_neighborhood_r(const Digraph& d, int x, int r) {
    if (x < 0 || x >= d.vertex_count()) fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(x));
    if (r < 1) fail(ErrorKind::InvalidArgument, "radius must be >= 1");
    VertexSet result;
    for (int y = 0; y < d.vertex_count(); ++y) {
        int dist = d.distance(x, y);
        if (dist >= 1 && dist <= r) result.push_back(y);
    }
    return result;
}

}  // namespace pldig
