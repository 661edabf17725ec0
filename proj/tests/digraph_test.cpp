#include <doctest.h>

#include <algorithm>

#include "pldig/digraph.hpp"
#include "pldig/error.hpp"
#include "pldig/random.hpp"

#include "oracles.hpp"

using namespace pldig;

TEST_CASE("build_digraph validates its input") {
    CHECK_THROWS_AS(build_digraph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(build_digraph(3, {{0, 1}, {0, 1}}), Error);
    CHECK_THROWS_AS(build_digraph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(build_digraph(3, {{-1, 0}}), Error);
    CHECK_THROWS_AS(build_digraph(-1, {}), Error);

    try {
        build_digraph(2, {{0, 0}});
        FAIL("expected a LoopArc error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LoopArc);
    }
    try {
        build_digraph(2, {{0, 1}, {1, 0}, {0, 1}});
        FAIL("expected a DuplicateArc error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateArc);
    }
    try {
        build_digraph(2, {{0, 2}});
        FAIL("expected a VertexOutOfRange error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VertexOutOfRange);
    }
}

TEST_CASE("arcs are stored sorted and digons are allowed") {
    auto d = dg(3, {{2, 0}, {0, 1}, {1, 0}, {1, 2}});
    ArcSet expect = {{0, 1}, {1, 0}, {1, 2}, {2, 0}};
    CHECK(d.arcs() == expect);
    CHECK(d.arc_count() == 4);
    CHECK(d.has_arc(1, 0));
    CHECK(!d.has_arc(0, 2));
    CHECK(d.arc_index(1, 2) == 2);
    CHECK(d.arc_index(2, 1) == -1);

    CHECK(d.out_neighbors(1) == std::vector<int>{0, 2});
    CHECK(d.in_neighbors(0) == std::vector<int>{1, 2});
}

TEST_CASE("distances match a reference BFS") {
    SplitMix64 rng(7);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng.next_below(6));
        auto d = random_digraph(n, 0.35, rng.next());
        auto ref = oracle::distance_matrix(d);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) CHECK(d.distance(u, v) == ref[u][v]);
    }
}

TEST_CASE("unreachable pairs report the infinity sentinel") {
    auto d = dg(3, {{0, 1}, {1, 2}});
    CHECK(d.distance(0, 2) == 2);
    CHECK(d.distance(2, 0) == DistanceOracle::kInfinity);
    CHECK(d.distance(1, 1) == 0);
}

TEST_CASE("girth on known digraphs") {
    CHECK(girth(path_digraph(3)) == DistanceOracle::kInfinity);
    CHECK(girth(dg(2, {{0, 1}, {1, 0}})) == 2);
    CHECK(girth(cycle_digraph(5)) == 5);
    CHECK(girth(cycle_digraph(7)) == 7);
    // a 3-cycle with a pendant digon: the digon wins
    CHECK(girth(dg(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 0}})) == 2);
}

TEST_CASE("girth matches the reference on random digraphs") {
    SplitMix64 rng(11);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng.next_below(6));
        auto d = random_digraph(n, 0.3, rng.next());
        CHECK(girth(d) == oracle::girth(d));
    }
}

TEST_CASE("min_in_degree and the random generator floor") {
    CHECK(min_in_degree(path_digraph(3)) == 0);
    CHECK(min_in_degree(cycle_digraph(4)) == 1);
    SplitMix64 rng(13);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        auto d = random_digraph(n, 0.15, rng.next());
        CHECK(min_in_degree(d) >= 1);
    }
}

TEST_CASE("random_digraph is reproducible for a fixed seed") {
    auto a = random_digraph(6, 0.3, 42);
    auto b = random_digraph(6, 0.3, 42);
    auto c = random_digraph(6, 0.3, 43);
    CHECK(a.arcs() == b.arcs());
    CHECK(a.arcs() != c.arcs());
}

TEST_CASE("arc boundary sets and heads") {
    auto d = dg(4, {{0, 1}, {1, 2}, {2, 1}, {3, 1}, {1, 3}});
    VertexSet u = {1};
    ArcSet into = omega_minus_set(d, u);
    ArcSet outof = omega_plus_set(d, u);
    CHECK(into == ArcSet{{0, 1}, {2, 1}, {3, 1}});
    CHECK(outof == ArcSet{{1, 2}, {1, 3}});
    CHECK(heads(into) == VertexSet{1});
    CHECK(heads(outof) == VertexSet{2, 3});

    // arcs inside u are neither entering nor leaving
    VertexSet both = {1, 2};
    CHECK(omega_minus_set(d, both) == ArcSet{{0, 1}, {3, 1}});
    CHECK(omega_plus_set(d, both) == ArcSet{{1, 3}});
}

TEST_CASE("out_neighborhood_r follows the distance matrix") {
    SplitMix64 rng(17);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        auto d = random_digraph(n, 0.35, rng.next());
        auto dist = oracle::distance_matrix(d);
        for (int x = 0; x < n; ++x) {
            for (int r = 1; r <= n; ++r) {
                VertexSet expect;
                for (int y = 0; y < n; ++y)
                    if (y != x && dist[x][y] >= 1 && dist[x][y] <= r) expect.push_back(y);
                CHECK(out_neighborhood_r(d, x, r) == expect);
            }
        }
    }
}

TEST_CASE("out_neighborhood_r at radius one is the sorted out-neighbor list") {
    auto d = dg(4, {{0, 2}, {0, 1}, {1, 3}, {3, 0}});
    CHECK(out_neighborhood_r(d, 0, 1) == VertexSet{1, 2});
    CHECK(out_neighborhood_r(d, 0, 2) == VertexSet{1, 2, 3});
    CHECK(out_neighborhood_r(d, 0, 3) == VertexSet{1, 2, 3});
}
