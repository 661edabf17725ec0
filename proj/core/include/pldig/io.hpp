#pragma once

#include <string>

#include "pldig/digraph.hpp"
#include "pldig/grundy.hpp"
#include "pldig/pld.hpp"

namespace pldig {

// text formats use 1-based vertex ids throughout; internal ids are 0-based.
// json-producing functions return serialized text so the vendored json
// library stays out of the installed headers

// edge list: first line "n m", then m lines "u v"; '#' starts a comment,
// blank lines are skipped. ParseError messages carry the 1-based line number
Digraph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Digraph& d);

// dot export lists every vertex as a node statement so isolated vertices
// survive a round trip; parse_dot accepts exactly that shape
std::string to_dot(const Digraph& d);
Digraph parse_dot(const std::string& text);
bool looks_like_dot(const std::string& text);

// sniffs dot vs edge list
Digraph parse_digraph_text(const std::string& text);

std::string digraph_json(const Digraph& d);

// {"a_prime": [[u,v],...], "phi": [[[u,v],[x,y]],...]} with phi entries for
// the arcs outside a_prime (entries for fixed arcs are accepted on input but
// must be identity)
std::string partial_line_map_json(const PartialLineMap& map);
PartialLineMap parse_partial_line_map_json(const Digraph& base, const std::string& text);

// {"vertices": .., "arcs": [[i,j],...], "labels": [[u,v],...]}; labels are
// base arcs in pld vertex order
std::string labeled_pld_json(const LabeledPld& pld, bool include_map);

// list of sorted 1-based vertex lists
std::string set_family_json(const SetFamily& family);

// object mapping 1-based vertex to value
std::string grundy_labeling_json(const GrundyLabeling& g);

}  // namespace pldig
