#include "pldig/domination.hpp"

#include <algorithm>
#include <string>

namespace pldig {

void validate_kernel_query(const KernelQuery& q) {
    if (q.k < 2) fail(ErrorKind::InvalidArgument, "kernel query requires k >= 2, got " + std::to_string(q.k));
    if (q.l < 1) fail(ErrorKind::InvalidArgument, "kernel query requires l >= 1, got " + std::to_string(q.l));
}

bool is_k_independent(const Digraph& d, const VertexSet& u, int k) {
    if (k < 2) fail(ErrorKind::InvalidArgument, "independence radius must be >= 2");
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (i != j && d.distance(u[i], u[j]) < k) return false;
    return true;
}

bool is_l_absorbing(const Digraph& d, const VertexSet& u, int l) {
    if (l < 1) fail(ErrorKind::InvalidArgument, "absorption radius must be >= 1");
    if (u.empty()) return d.vertex_count() == 0;
    std::vector<char> inside(d.vertex_count(), 0);
    for (int v : u) inside[v] = 1;
    for (int x = 0; x < d.vertex_count(); ++x) {
        if (inside[x]) continue;
        int best = DistanceOracle::kInfinity;
        for (int v : u) best = std::min(best, d.distance(x, v));
        if (best > l) return false;
    }
    return true;
}

namespace {

// shared scaffolding for the exhaustive enumerators: subsets come out in
// lexicographic member-list order via DFS that visits vertices ascending.
// conflict[v] masks vertices that cannot coexist with v at radius k
struct IndependenceSearch {
    int n;
    std::vector<std::uint64_t> conflict;

    IndependenceSearch(const Digraph& d, int k) : n(d.vertex_count()), conflict(n, 0) {
        if (n > 63) fail(ErrorKind::InvalidArgument, "exhaustive enumeration supports at most 63 vertices");
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && (d.distance(u, v) < k || d.distance(v, u) < k))
                    conflict[u] |= 1ull << v;
    }

    template <typename Visit>
    void run(Visit&& visit) const {
        std::vector<int> members;
        dfs(0, 0ull, members, visit);
    }

  private:
    template <typename Visit>
    void dfs(int start, std::uint64_t forbidden, std::vector<int>& members, Visit&& visit) const {
        visit(static_cast<const std::vector<int>&>(members));
        for (int v = start; v < n; ++v) {
            if ((forbidden >> v) & 1ull) continue;
            members.push_back(v);
            dfs(v + 1, forbidden | conflict[v], members, visit);
            members.pop_back();
        }
    }
};

}  // namespace

SetFamily enumerate_kl_kernels(const Digraph& d, const KernelQuery& q) {
    validate_kernel_query(q);
    const int n = d.vertex_count();
    IndependenceSearch search(d, q.k);
    // absorb[x] = vertices u with d(x,u) <= l
    std::vector<std::uint64_t> absorb(n, 0);
    for (int x = 0; x < n; ++x)
        for (int u = 0; u < n; ++u)
            if (d.distance(x, u) <= q.l) absorb[x] |= 1ull << u;

    SetFamily family;
    search.run([&](const VertexSet& members) {
        if (members.empty() && n > 0) return;
        std::uint64_t mask = 0;
        for (int v : members) mask |= 1ull << v;
        for (int x = 0; x < n; ++x) {
            if ((mask >> x) & 1ull) continue;
            if (!(absorb[x] & mask)) return;
        }
        family.push_back(members);
    });
    return family;
}

SetFamily enumerate_kernels(const Digraph& d) { return enumerate_kl_kernels(d, KernelQuery{2, 1}); }

SetFamily enumerate_k_independent_sets(const Digraph& d, int k, bool include_empty) {
    if (k < 2) fail(ErrorKind::InvalidArgument, "independence radius must be >= 2");
    IndependenceSearch search(d, k);
    SetFamily family;
    search.run([&](const VertexSet& members) {
        if (members.empty() && !include_empty) return;
        family.push_back(members);
    });
    return family;
}

std::uint64_t fibonacci_number(const Digraph& d) {
    IndependenceSearch search(d, 2);
    std::uint64_t count = 0;
    search.run([&](const VertexSet&) { ++count; });
    return count;
}

bool is_semikernel(const Digraph& d, const VertexSet& s) {
    if (s.empty()) return false;
    if (!is_k_independent(d, s, 2)) return false;
    std::vector<char> inside(d.vertex_count(), 0);
    for (int v : s) inside[v] = 1;
    for (int v : s) {
        for (int x : d.out_neighbors(v)) {
            if (inside[x]) continue;  // cannot happen for independent s, kept for clarity
            bool answered = false;
            for (int y : d.out_neighbors(x))
                if (inside[y]) { answered = true; break; }
            if (!answered) return false;
        }
    }
    return true;
}

SetFamily enumerate_semikernels(const Digraph& d) {
    const int n = d.vertex_count();
    IndependenceSearch search(d, 2);
    // out_heads[x] as mask, to test "some arc (x,s') enters s"
    std::vector<std::uint64_t> out_heads(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y : d.out_neighbors(x)) out_heads[x] |= 1ull << y;

    SetFamily family;
    search.run([&](const VertexSet& members) {
        if (members.empty()) return;
        std::uint64_t mask = 0;
        for (int v : members) mask |= 1ull << v;
        for (int v : members)
            for (int x : d.out_neighbors(v)) {
                if ((mask >> x) & 1ull) continue;
                if (!(out_heads[x] & mask)) return;
            }
        family.push_back(members);
    });
    return family;
}

VertexSet map_f(const PartialLineMap& map, const VertexSet& k) {
    ArcSet boundary = omega_minus_set(map.base, k);
    VertexSet result;
    for (const Arc& a : boundary) {
        int pos = map.a_prime_position(a);
        if (pos >= 0) result.push_back(pos);
    }
    std::sort(result.begin(), result.end());
    return result;
}

VertexSet map_h(const PartialLineMap& map, const VertexSet& khat) {
    ArcSet labeled;
    labeled.reserve(khat.size());
    for (int id : khat) {
        if (id < 0 || id >= static_cast<int>(map.a_prime.size()))
            fail(ErrorKind::VertexOutOfRange, "pld vertex " + std::to_string(id));
        labeled.push_back(map.a_prime[id]);
    }
    return heads(labeled);
}

}  // namespace pldig
