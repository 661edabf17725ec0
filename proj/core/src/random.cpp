#include "pldig/random.hpp"

#include <vector>

#include "pldig/error.hpp"

namespace pldig {

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "random digraph needs n >= 2");
    if (!(p > 0.0) || !(p < 1.0))
        fail(ErrorKind::InvalidArgument, "arc probability must lie in (0,1)");
    SplitMix64 rng(seed);
    ArcSet arcs;
    std::vector<int> in_degree(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.next_double() < p) {
                arcs.push_back(Arc{u, v});
                ++in_degree[v];
            }
        }
    // repair pass; the new tail is drawn among the other n-1 vertices and the
    // arc cannot collide because v had no in-arcs
    for (int v = 0; v < n; ++v) {
        if (in_degree[v] > 0) continue;
        int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        if (t >= v) ++t;
        arcs.push_back(Arc{t, v});
    }
    return build_digraph(n, arcs);
}

}  // namespace pldig
