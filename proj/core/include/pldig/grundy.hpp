#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pldig/digraph.hpp"
#include "pldig/pld.hpp"

namespace pldig {

// value per vertex, indexed by vertex id; valid labelings keep every value < n
using GrundyLabeling = std::vector<int>;

struct GrundyQuery {
    int k = 2;  // >= 2
    int l = 1;  // >= 1; lift/count theorems need l <= k-1, enforced per operation
};

void validate_grundy_query(const GrundyQuery& q);

// condition (1): g(x)=t>0 implies every j<t appears on N+_l(x)
// condition (2): no y in N+_{k-1}(x) shares g(x)
bool is_kl_grundy(const Digraph& d, const GrundyLabeling& g, const GrundyQuery& q);

// the classical k=2, l=1 case
bool is_grundy(const Digraph& d, const GrundyLabeling& g);

// all valid labelings with values in 0..n-1 (pigeonhole bound from condition
// (1)), ascending lexicographic by value vector
std::vector<GrundyLabeling> enumerate_kl_grundy(const Digraph& d, const GrundyQuery& q);

struct GrundyScan {
    std::uint64_t count = 0;
    bool truncated = false;  // stopped at the cap; count is a lower bound then
};

// streaming form of the enumeration: visit (may be empty) is called per
// labeling in the same ascending order, nothing is stored; stops after cap
// labelings. labeling families grow combinatorially, so bulk consumers
// should prefer this over materializing the vector
GrundyScan scan_kl_grundy(const Digraph& d, const GrundyQuery& q, std::uint64_t cap,
                          const std::function<void(const GrundyLabeling&)>& visit);

// unique Grundy function of an acyclic digraph: mex over out-neighbor values
// in reverse topological order; throws NotAcyclic otherwise
GrundyLabeling acyclic_grundy(const Digraph& d);

// zero-level set of a valid labeling; postcondition (checked): it is a
// (k,l)-kernel. throws NotAGrundyFunction when g is not valid for q
VertexSet grundy_zero_kernel(const Digraph& d, const GrundyLabeling& g, const GrundyQuery& q);

// g_L(yx) = g(x): assigns each pld vertex the base value of its label's head.
// Requires g valid on the base; the result is validated on the pld and
// NotAGrundyFunction is thrown when the lifted labeling breaks condition (2)
// there (possible when girth(base) < k; see the campaign's lift row)
GrundyLabeling lift_grundy(const PartialLineMap& map, const GrundyLabeling& g, const GrundyQuery& q);

// g_D(x) = h(yx) for any yx in A' with head x. Requires l <= k-1
// (PreconditionLViolation) and h valid on the pld (NotAGrundyFunction).
// Well-definedness (all in-arcs of x in A' carrying one value) is recomputed,
// not assumed; IllDefinedProjection reports a concrete witness vertex
GrundyLabeling project_grundy(const PartialLineMap& map, const GrundyLabeling& h, const GrundyQuery& q);

}  // namespace pldig
