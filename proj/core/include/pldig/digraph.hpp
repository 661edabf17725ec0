#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "pldig/error.hpp"

namespace pldig {

// ordered pair (tail, head), 0-based vertex ids
struct Arc {
    int tail = 0;
    int head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// canonical encodings: VertexSet and ArcSet are kept sorted ascending,
// GrundyLabeling is indexed by vertex id
using VertexSet = std::vector<int>;
using ArcSet = std::vector<Arc>;
using SetFamily = std::vector<VertexSet>;

// all-pairs shortest directed path lengths; unreachable = infinity sentinel
class DistanceOracle {
  public:
    static constexpr int kInfinity = std::numeric_limits<int>::max();

    DistanceOracle() = default;
    DistanceOracle(int n, std::vector<int> matrix) : n_(n), matrix_(std::move(matrix)) {}

    int operator()(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v]; }
    int size() const { return n_; }

    static bool finite(int d) { return d != kInfinity; }

    // saturating: infinity absorbs
    static int add(int a, int b) {
        if (a == kInfinity || b == kInfinity) return kInfinity;
        return a + b;
    }

  private:
    int n_ = 0;
    std::vector<int> matrix_;
};

// immutable loopless simple digraph over vertices 0..n-1; digons allowed.
// adjacency and all-pairs distances are derived eagerly at construction
class Digraph {
  public:
    Digraph() = default;

    int vertex_count() const { return n_; }
    const ArcSet& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    const DistanceOracle& distances() const { return dist_; }
    int distance(int u, int v) const { return dist_(u, v); }

    bool has_arc(int u, int v) const;
    // index into arcs() or -1
    int arc_index(int u, int v) const;

    friend Digraph build_digraph(int n, const ArcSet& arcs);

  private:
    int n_ = 0;
    ArcSet arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    DistanceOracle dist_;
    int girth_ = DistanceOracle::kInfinity;

    friend int girth(const Digraph&);
};

// validates looplessness, simplicity and vertex range
Digraph build_digraph(int n, const ArcSet& arcs);

int min_in_degree(const Digraph& d);
const DistanceOracle& all_pairs_distances(const Digraph& d);

// length of the shortest directed cycle; DistanceOracle::kInfinity when acyclic
int girth(const Digraph& d);

// arcs (x,y) with y in u, x outside u
ArcSet omega_minus_set(const Digraph& d, const VertexSet& u);
// arcs (s,x) with s in u, x outside u
ArcSet omega_plus_set(const Digraph& d, const VertexSet& u);
// terminal vertices of the arcs
VertexSet heads(const ArcSet& arcs);

// { y : 1 <= d(x,y) <= r }; never contains x
VertexSet out_neighborhood_r(const Digraph& d, int x, int r);

}  // namespace pldig
