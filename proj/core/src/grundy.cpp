#include "pldig/grundy.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "pldig/domination.hpp"
#include "pldig/error.hpp"

namespace pldig {

void validate_grundy_query(const GrundyQuery& q) {
    if (q.k < 2) fail(ErrorKind::InvalidArgument, "grundy query requires k >= 2, got " + std::to_string(q.k));
    if (q.l < 1) fail(ErrorKind::InvalidArgument, "grundy query requires l >= 1, got " + std::to_string(q.l));
}

bool is_kl_grundy(const Digraph& d, const GrundyLabeling& g, const GrundyQuery& q) {
    validate_grundy_query(q);
    const int n = d.vertex_count();
    if (static_cast<int>(g.size()) != n)
        fail(ErrorKind::InvalidArgument, "labeling size does not match vertex count");
    // condition (1) forces g(x) <= |N+_l(x)| <= n-1, so out-of-range values
    // can be rejected up front
    for (int v = 0; v < n; ++v)
        if (g[v] < 0 || g[v] >= n) return false;

    const DistanceOracle& dist = d.distances();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        int t = g[x];
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            int dxy = dist(x, y);
            if (dxy <= q.k - 1 && g[y] == t) return false;  // condition (2)
            if (dxy <= q.l) seen[g[y]] = 1;
        }
        for (int j = 0; j < t; ++j)
            if (!seen[j]) return false;  // condition (1)
    }
    return true;
}

bool is_grundy(const Digraph& d, const GrundyLabeling& g) {
    return is_kl_grundy(d, g, GrundyQuery{2, 1});
}

namespace {

// backtracking over value vectors, vertices in id order, candidate values
// ascending, so results come out in ascending lexicographic order.
// condition (2) says equal-valued classes are k-independent: pruned with the
// same conflict masks as independence enumeration. condition (1) for x closes
// once x and all of N+_l(x) are assigned; the trigger table fires it there
class GrundySearch {
  public:
    GrundySearch(const Digraph& d, const GrundyQuery& q, std::uint64_t cap,
                 const std::function<void(const GrundyLabeling&)>& visit)
        : n_(d.vertex_count()), cap_limit_(cap), visit_(visit) {
        const DistanceOracle& dist = d.distances();
        conflict_.assign(n_, 0);
        nl_.resize(n_);
        trigger_.resize(n_);
        cap_.assign(n_, 0);
        for (int x = 0; x < n_; ++x) {
            int last = x;
            for (int y = 0; y < n_; ++y) {
                if (y == x) continue;
                if (dist(x, y) <= q.k - 1 || dist(y, x) <= q.k - 1)
                    conflict_[x] |= std::uint64_t{1} << y;
                if (dist(x, y) <= q.l) {
                    nl_[x].push_back(y);
                    last = std::max(last, y);
                }
            }
            cap_[x] = static_cast<int>(nl_[x].size());
            trigger_[last].push_back(x);
        }
        g_.assign(n_, -1);
        used_.assign(n_, 0);
    }

    GrundyScan run() {
        GrundyScan scan;
        scan.truncated = !dfs(0);
        scan.count = count_;
        return scan;
    }

  private:
    bool condition_one(int x) const {
        int t = g_[x];
        if (t == 0) return true;
        std::uint64_t vals = 0;
        for (int y : nl_[x]) vals |= std::uint64_t{1} << g_[y];
        std::uint64_t want = (std::uint64_t{1} << t) - 1;
        return (vals & want) == want;
    }

    // false aborts the whole search once the cap is reached
    bool dfs(int i) {
        if (i == n_) {
            ++count_;
            if (visit_) visit_(g_);
            return count_ < cap_limit_;
        }
        std::uint64_t bit = std::uint64_t{1} << i;
        for (int v = 0; v <= cap_[i]; ++v) {
            if (used_[v] & conflict_[i]) continue;
            g_[i] = v;
            used_[v] |= bit;
            bool ok = true;
            for (int x : trigger_[i])
                if (!condition_one(x)) {
                    ok = false;
                    break;
                }
            bool keep_going = !ok || dfs(i + 1);
            used_[v] &= ~bit;
            if (!keep_going) return false;
        }
        g_[i] = -1;
        return true;
    }

    int n_;
    std::uint64_t cap_limit_;
    const std::function<void(const GrundyLabeling&)>& visit_;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> conflict_;
    std::vector<std::vector<int>> nl_;
    std::vector<std::vector<int>> trigger_;
    std::vector<int> cap_;
    GrundyLabeling g_;
    std::vector<std::uint64_t> used_;
};

}  // namespace

GrundyScan scan_kl_grundy(const Digraph& d, const GrundyQuery& q, std::uint64_t cap,
                          const std::function<void(const GrundyLabeling&)>& visit) {
    validate_grundy_query(q);
    if (d.vertex_count() > 63)
        fail(ErrorKind::InvalidArgument, "exhaustive enumeration supports at most 63 vertices");
    if (cap < 1) fail(ErrorKind::InvalidArgument, "enumeration cap must be >= 1");
    return GrundySearch(d, q, cap, visit).run();
}

std::vector<GrundyLabeling> enumerate_kl_grundy(const Digraph& d, const GrundyQuery& q) {
    std::vector<GrundyLabeling> out;
    scan_kl_grundy(d, q, UINT64_MAX, [&out](const GrundyLabeling& g) { out.push_back(g); });
    return out;
}

GrundyLabeling acyclic_grundy(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> pending(n);
    std::vector<int> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) {
        pending[v] = static_cast<int>(d.out_neighbors(v).size());
        if (pending[v] == 0) order.push_back(v);
    }
    GrundyLabeling g(n, -1);
    std::vector<char> present;
    // sinks first; a vertex enters the queue only after all out-neighbors got
    // their value, so the mex below reads finished values only
    for (std::size_t head = 0; head < order.size(); ++head) {
        int x = order[head];
        const std::vector<int>& out = d.out_neighbors(x);
        present.assign(out.size() + 1, 0);
        for (int y : out)
            if (g[y] <= static_cast<int>(out.size())) present[g[y]] = 1;
        int mex = 0;
        while (present[mex]) ++mex;
        g[x] = mex;
        for (int y : d.in_neighbors(x))
            if (--pending[y] == 0) order.push_back(y);
    }
    if (static_cast<int>(order.size()) != n)
        fail(ErrorKind::NotAcyclic, "digraph has a directed cycle");
    return g;
}

VertexSet grundy_zero_kernel(const Digraph& d, const GrundyLabeling& g, const GrundyQuery& q) {
    if (!is_kl_grundy(d, g, q))
        fail(ErrorKind::NotAGrundyFunction, "labeling is not a (k,l)-grundy function");
    VertexSet zero;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (g[v] == 0) zero.push_back(v);
    // condition (2) makes the zero class k-independent and condition (1)
    // places value 0 within distance l of every other vertex
    if (!is_k_independent(d, zero, q.k) || !is_l_absorbing(d, zero, q.l))
        fail(ErrorKind::InvalidArgument, "zero level set failed the kernel postcondition");
    return zero;
}

GrundyLabeling lift_grundy(const PartialLineMap& map, const GrundyLabeling& g, const GrundyQuery& q) {
    validate_grundy_query(q);
    if (!is_kl_grundy(map.base, g, q))
        fail(ErrorKind::NotAGrundyFunction, "base labeling is not a (k,l)-grundy function");
    LabeledPld pld = build_pld(map);
    GrundyLabeling h(pld.labels.size());
    for (std::size_t i = 0; i < pld.labels.size(); ++i) h[i] = g[pld.labels[i].head];
    // head values can collide at pld distance < k when the base has short
    // cycles, in which case the lift is not a grundy function
    if (!is_kl_grundy(pld.digraph, h, q))
        fail(ErrorKind::NotAGrundyFunction, "lifted labeling violates condition (2) on the pld");
    return h;
}

GrundyLabeling project_grundy(const PartialLineMap& map, const GrundyLabeling& h, const GrundyQuery& q) {
    validate_grundy_query(q);
    if (q.l > q.k - 1)
        fail(ErrorKind::PreconditionLViolation,
             "projection requires l <= k-1, got k=" + std::to_string(q.k) + " l=" + std::to_string(q.l));
    LabeledPld pld = build_pld(map);
    if (!is_kl_grundy(pld.digraph, h, q))
        fail(ErrorKind::NotAGrundyFunction, "pld labeling is not a (k,l)-grundy function");

    const int n = map.base.vertex_count();
    GrundyLabeling g(n, -1);
    for (std::size_t i = 0; i < pld.labels.size(); ++i) {
        int x = pld.labels[i].head;
        if (g[x] == -1) {
            g[x] = h[i];
        } else if (g[x] != h[i]) {
            fail(ErrorKind::IllDefinedProjection,
                 "arcs of A' into vertex " + std::to_string(x) + " carry distinct values");
        }
    }
    // condition (i) on A' covers every head, so g is total here
    if (!is_kl_grundy(map.base, g, q))
        fail(ErrorKind::NotAGrundyFunction, "projected labeling is not a (k,l)-grundy function on the base");
    return g;
}

}  // namespace pldig
