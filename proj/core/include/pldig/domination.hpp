#pragma once

#include <cstdint>

#include "pldig/digraph.hpp"
#include "pldig/pld.hpp"

namespace pldig {

struct KernelQuery {
    int k = 2;  // independence radius, >= 2
    int l = 1;  // absorption radius, >= 1
};

// throws InvalidArgument unless k >= 2 and l >= 1
void validate_kernel_query(const KernelQuery& q);

// d(u,v) >= k for every ordered pair of distinct members (both directions)
bool is_k_independent(const Digraph& d, const VertexSet& u, int k);

// every vertex outside u reaches u within distance l; empty u fails when V nonempty
bool is_l_absorbing(const Digraph& d, const VertexSet& u, int l);

// all nonempty k-independent l-absorbing sets, lexicographic by member list
SetFamily enumerate_kl_kernels(const Digraph& d, const KernelQuery& q);

// the (2,1) case
SetFamily enumerate_kernels(const Digraph& d);

SetFamily enumerate_k_independent_sets(const Digraph& d, int k, bool include_empty);

// number of 2-independent subsets including the empty set
std::uint64_t fibonacci_number(const Digraph& d);

// independent nonempty s where every arc (s,x) leaving s is answered by some
// arc (x,s') entering s
bool is_semikernel(const Digraph& d, const VertexSet& s);

SetFamily enumerate_semikernels(const Digraph& d);

// f(K) = omega_minus(K) ∩ A' as a set of pld vertex ids
VertexSet map_f(const PartialLineMap& map, const VertexSet& k);

// h(Khat) = heads of the labeled arcs, as base vertex ids
VertexSet map_h(const PartialLineMap& map, const VertexSet& khat);

}  // namespace pldig
