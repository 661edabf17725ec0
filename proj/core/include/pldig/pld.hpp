#pragma once

#include <vector>

#include "pldig/digraph.hpp"

namespace pldig {

// a validated (A', phi) pair for some base digraph.
// phi is stored as base-arc-index -> base-arc-index; images always lie in a_prime.
// construct through validate_pld so the invariants hold
struct PartialLineMap {
    Digraph base;
    ArcSet a_prime;            // sorted subset of base.arcs()
    std::vector<int> phi;      // indexed by base arc index

    const Arc& phi_image(int base_arc_index) const { return base.arcs()[phi[base_arc_index]]; }
    bool in_a_prime(const Arc& a) const;
    // position of a in a_prime or -1
    int a_prime_position(const Arc& a) const;
};

// the constructed partial line digraph; vertex i of `digraph` is labels[i],
// which is the i-th arc of a_prime in sorted order
struct LabeledPld {
    Digraph digraph;
    ArcSet labels;
    PartialLineMap source;
};

// checks condition (i) heads(A')=V and condition (ii) phi fixes A' and
// phi(i,j) lies in omega_minus(j) intersected with A'.
// phi is given arc-indexed into base.arcs()
PartialLineMap validate_pld(const Digraph& base, const ArcSet& a_prime, const std::vector<int>& phi);

// vertex set A', arc set {(ij, phi(j,k)) : (j,k) in A}
LabeledPld build_pld(const PartialLineMap& map);

// the A'=A, phi=id special case
LabeledPld line_digraph(const Digraph& base);

struct PldEnumeration {
    std::vector<PartialLineMap> maps;
    bool truncated = false;
};

// every valid (A', phi) pair, canonical order: A' subsets lexicographic over
// sorted arc indices (a set precedes its proper extensions), and for fixed A'
// the phi choices in lexicographic product order over the missing arcs.
// stops after cap maps and flags truncation when more exist
PldEnumeration enumerate_plds(const Digraph& base, std::size_t cap);

// emitted pair count when no cap hit: sum over valid A' of
// prod over (i,j) not in A' of |omega_minus(j) ∩ A'|
}  // namespace pldig
