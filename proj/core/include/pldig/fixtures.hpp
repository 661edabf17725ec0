#pragma once

#include <string>
#include <vector>

#include "pldig/digraph.hpp"
#include "pldig/grundy.hpp"
#include "pldig/pld.hpp"

namespace pldig {

// figure transcriptions. fig1 carries its (A', phi) pair; the fig5 entries
// carry the drawn labeling and the (k,l) it is claimed for
struct Fixture {
    std::string name;
    Digraph digraph;
    bool has_map = false;
    PartialLineMap map;
    bool has_labeling = false;
    GrundyLabeling labeling;
    GrundyQuery query{2, 1};
};

const std::vector<std::string>& fixture_names();

// throws UnknownFixture for names outside fixture_names()
Fixture fixture(const std::string& name);

}  // namespace pldig
