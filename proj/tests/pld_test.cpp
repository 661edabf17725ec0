#include <doctest.h>

#include <algorithm>

#include "pldig/error.hpp"
#include "pldig/fixtures.hpp"
#include "pldig/pld.hpp"
#include "pldig/random.hpp"

#include "oracles.hpp"

using namespace pldig;

namespace {

ErrorKind pld_kind(const Digraph& base, const ArcSet& a_prime, const std::vector<int>& phi) {
    try {
        validate_pld(base, a_prime, phi);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected validate_pld to reject");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("validate_pld enforces both defining conditions") {
    // 0->1, 1->2, 2->0, 0->2: in-arcs of 2 are {1->2, 0->2}
    auto d = dg(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
    // arcs() sorted: (0,1)=0 (0,2)=1 (1,2)=2 (2,0)=3
    std::vector<int> id = {0, 1, 2, 3};

    SUBCASE("identity is valid") {
        auto m = validate_pld(d, d.arcs(), id);
        CHECK(m.a_prime == d.arcs());
    }
    SUBCASE("dropping 0->2 keeps heads covered") {
        ArcSet ap = {{0, 1}, {1, 2}, {2, 0}};
        auto m = validate_pld(d, ap, {0, 2, 2, 3});
        CHECK(m.a_prime == ap);
        CHECK(m.phi_image(1) == Arc{1, 2});
    }
    SUBCASE("heads must cover every vertex") {
        // dropping both in-arcs of 2 uncovers it
        ArcSet ap = {{0, 1}, {2, 0}};
        CHECK(pld_kind(d, ap, {0, 0, 0, 3}) == ErrorKind::HeadsNotCovering);
    }
    SUBCASE("phi must fix a_prime") {
        CHECK(pld_kind(d, d.arcs(), {0, 2, 2, 3}) == ErrorKind::PhiNotFixing);
    }
    SUBCASE("phi image must keep the head") {
        ArcSet ap = {{0, 1}, {1, 2}, {2, 0}};
        CHECK(pld_kind(d, ap, {0, 0, 2, 3}) == ErrorKind::PhiWrongHead);
    }
    SUBCASE("phi image must lie in a_prime") {
        ArcSet ap = {{0, 1}, {1, 2}, {2, 0}};
        CHECK(pld_kind(d, ap, {0, 1, 2, 3}) == ErrorKind::PhiImageNotInAPrime);
    }
    SUBCASE("phi must have one entry per base arc") {
        CHECK_THROWS_AS(validate_pld(d, d.arcs(), {0, 1, 2}), Error);
    }
}

TEST_CASE("pld construction needs positive minimum in-degree") {
    auto d = path_digraph(3);  // vertex 0 has no in-arc
    try {
        line_digraph(d);
        FAIL("expected MinInDegreeZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MinInDegreeZero);
    }
    CHECK_THROWS_AS(enumerate_plds(d, 10), Error);
}

TEST_CASE("line digraph of fig2_left is fig2_right") {
    auto left = fixture("fig2_left").digraph;
    auto right = fixture("fig2_right").digraph;
    auto ld = line_digraph(left);
    CHECK(ld.digraph.vertex_count() == right.vertex_count());
    CHECK(ld.digraph.arcs() == right.arcs());
    CHECK(ld.labels == left.arcs());
    // identity map underneath
    CHECK(ld.source.a_prime == left.arcs());
    for (std::size_t i = 0; i < ld.source.phi.size(); ++i)
        CHECK(ld.source.phi[i] == static_cast<int>(i));
}

TEST_CASE("line digraph matches the textbook construction on random digraphs") {
    SplitMix64 rng(31);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        auto d = random_digraph(n, 0.4, rng.next());
        auto ld = line_digraph(d);
        auto ref = oracle::line_digraph(d);
        CHECK(ld.digraph.vertex_count() == ref.vertex_count());
        CHECK(ld.digraph.arcs() == ref.arcs());
    }
}

TEST_CASE("build_pld on the fig1 map reproduces the drawn digraph") {
    auto f = fixture("fig1");
    REQUIRE(f.has_map);
    auto pld = build_pld(f.map);
    CHECK(pld.digraph.vertex_count() == 9);
    CHECK(pld.digraph.arc_count() == 18);

    // labels, 1-based: 13 21 25 36 42 43 54 56 61
    ArcSet labels = {{0, 2}, {1, 0}, {1, 4}, {2, 5}, {3, 1}, {3, 2}, {4, 3}, {4, 5}, {5, 0}};
    CHECK(pld.labels == labels);

    auto at = [&](int tail1, int head1) {
        int idx = -1;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i].tail == tail1 - 1 && labels[i].head == head1 - 1)
                idx = static_cast<int>(i);
        REQUIRE(idx >= 0);
        return idx;
    };
    // the transcription of the right-hand drawing, as label pairs
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> drawn = {
        {{2, 1}, {4, 2}}, {{6, 1}, {4, 2}}, {{2, 1}, {1, 3}}, {{6, 1}, {1, 3}},
        {{4, 2}, {2, 1}}, {{4, 2}, {2, 5}}, {{1, 3}, {5, 4}}, {{4, 3}, {5, 4}},
        {{1, 3}, {3, 6}}, {{4, 3}, {3, 6}}, {{5, 4}, {4, 2}}, {{5, 4}, {4, 3}},
        {{2, 5}, {5, 4}}, {{2, 5}, {5, 6}}, {{3, 6}, {6, 1}}, {{5, 6}, {6, 1}},
        {{3, 6}, {2, 5}}, {{5, 6}, {2, 5}}};
    ArcSet expect;
    for (const auto& [from, to] : drawn)
        expect.push_back(Arc{at(from.first, from.second), at(to.first, to.second)});
    std::sort(expect.begin(), expect.end());
    CHECK(pld.digraph.arcs() == expect);
}

TEST_CASE("pld arc count identity") {
    // |A(LD)| = sum over base arcs (j,k) of |omega_minus(j) ∩ A'|
    SplitMix64 rng(37);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng.next_below(4));
        auto d = random_digraph(n, 0.4, rng.next());
        auto en = enumerate_plds(d, 200);
        for (const auto& m : en.maps) {
            auto pld = build_pld(m);
            CHECK(pld.digraph.vertex_count() == static_cast<int>(m.a_prime.size()));
            long long expect = 0;
            for (const auto& a : d.arcs())
                for (const auto& b : m.a_prime)
                    if (b.head == a.tail) ++expect;
            CHECK(pld.digraph.arc_count() == expect);
        }
    }
}

TEST_CASE("enumerate_plds matches the exhaustive oracle") {
    SplitMix64 rng(41);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng.next_below(3));
        auto d = random_digraph(n, 0.5, rng.next());
        if (d.arc_count() > 12) continue;
        auto en = enumerate_plds(d, 1u << 20);
        REQUIRE(!en.truncated);
        std::vector<oracle::PldChoice> got;
        for (const auto& m : en.maps) got.push_back(oracle::choice_of(m));
        auto want = oracle::all_plds(d);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("enumerate_plds counts on known digraphs") {
    CHECK(enumerate_plds(fixture("fig1").digraph, 10000).maps.size() == 729);
    CHECK(enumerate_plds(fixture("fig2_left").digraph, 100).maps.size() == 3);
    CHECK(enumerate_plds(cycle_digraph(3), 10).maps.size() == 1);
    CHECK(enumerate_plds(dg(2, {{0, 1}, {1, 0}}), 10).maps.size() == 1);
}

TEST_CASE("enumerate_plds cap truncates and flags") {
    auto d = fixture("fig1").digraph;
    auto en = enumerate_plds(d, 10);
    CHECK(en.truncated);
    CHECK(en.maps.size() == 10);
    auto full = enumerate_plds(d, 729);
    CHECK(!full.truncated);
    // the capped prefix agrees with the full enumeration order
    for (int i = 0; i < 10; ++i) {
        CHECK(en.maps[i].a_prime == full.maps[i].a_prime);
        CHECK(en.maps[i].phi == full.maps[i].phi);
    }
}

TEST_CASE("every enumerated pld builds and the identity map comes from A'=A") {
    auto d = fixture("fig2_left").digraph;
    auto en = enumerate_plds(d, 100);
    bool saw_identity = false;
    for (const auto& m : en.maps) {
        auto pld = build_pld(m);  // must not throw
        CHECK(pld.labels == m.a_prime);
        if (m.a_prime == d.arcs()) {
            saw_identity = true;
            CHECK(pld.digraph.arcs() == line_digraph(d).digraph.arcs());
        }
    }
    CHECK(saw_identity);
}
