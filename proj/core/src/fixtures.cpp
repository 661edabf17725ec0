#include "pldig/fixtures.hpp"

#include <utility>

#include "pldig/error.hpp"

namespace pldig {

namespace {

// arc lists below are 1-based as drawn in the figures
Digraph make(int n, std::initializer_list<std::pair<int, int>> arcs) {
    ArcSet converted;
    converted.reserve(arcs.size());
    for (auto [u, v] : arcs) converted.push_back(Arc{u - 1, v - 1});
    return build_digraph(n, converted);
}

Digraph fig2_left_digraph() {
    // vertices x,y,z,t as 1..4
    return make(4, {{1, 4}, {4, 3}, {1, 2}, {2, 3}, {3, 1}});
}

Digraph fig2_right_digraph() {
    // vertices xy,xt,yz,zx,tz as 1..5, the line digraph of fig2_left
    return make(5, {{1, 3}, {2, 5}, {3, 4}, {4, 1}, {4, 2}, {5, 4}});
}

Fixture fig1() {
    Fixture f;
    f.name = "fig1";
    f.digraph = make(6, {{1, 3}, {3, 6}, {6, 1}, {2, 5}, {5, 4}, {4, 2},
                         {2, 1}, {1, 2}, {3, 4}, {4, 3}, {5, 6}, {6, 5}});
    // A' = A minus {12, 34, 65}; phi(12)=42, phi(34)=54, phi(65)=25
    ArcSet a_prime;
    for (const Arc& a : f.digraph.arcs()) {
        bool dropped = (a.tail == 0 && a.head == 1) || (a.tail == 2 && a.head == 3) ||
                       (a.tail == 5 && a.head == 4);
        if (!dropped) a_prime.push_back(a);
    }
    std::vector<int> phi(f.digraph.arcs().size());
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = static_cast<int>(i);
    phi[f.digraph.arc_index(0, 1)] = f.digraph.arc_index(3, 1);
    phi[f.digraph.arc_index(2, 3)] = f.digraph.arc_index(4, 3);
    phi[f.digraph.arc_index(5, 4)] = f.digraph.arc_index(1, 4);
    f.map = validate_pld(f.digraph, a_prime, phi);
    f.has_map = true;
    return f;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "fig1",      "fig2_left", "fig2_right", "fig3",
        "fig4_left", "fig4_right", "fig5_left", "fig5_right"};
    return names;
}

Fixture fixture(const std::string& name) {
    if (name == "fig1") return fig1();
    Fixture f;
    f.name = name;
    if (name == "fig2_left") {
        f.digraph = fig2_left_digraph();
    } else if (name == "fig2_right") {
        f.digraph = fig2_right_digraph();
    } else if (name == "fig3") {
        f.digraph = make(9, {{2, 1}, {1, 3}, {3, 7}, {7, 6}, {6, 2},
                             {4, 1}, {1, 5}, {5, 9}, {9, 8}, {8, 4}, {8, 9}});
    } else if (name == "fig4_left") {
        f.digraph = make(5, {{1, 2}, {1, 4}, {2, 3}, {4, 3}, {1, 5}, {5, 1}});
    } else if (name == "fig4_right") {
        // line digraph of fig4_left in the drawn labeling:
        // 1=15, 2=51, 3=12, 4=14, 5=23, 6=43
        f.digraph = make(6, {{1, 2}, {2, 1}, {2, 3}, {2, 4}, {3, 5}, {4, 6}});
    } else if (name == "fig5_left") {
        f.digraph = fig2_left_digraph();
        f.labeling = {2, 0, 1, 0};
        f.query = GrundyQuery{2, 2};
        f.has_labeling = true;
    } else if (name == "fig5_right") {
        f.digraph = fig2_right_digraph();
        f.labeling = {2, 2, 0, 1, 0};
        f.query = GrundyQuery{3, 2};
        f.has_labeling = true;
    } else {
        fail(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
    }
    return f;
}

}  // namespace pldig
