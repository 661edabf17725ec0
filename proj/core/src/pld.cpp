#include "pldig/pld.hpp"

#include <algorithm>
#include <string>

namespace pldig {

namespace {

std::string arc_str(const Arc& a) {
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

bool PartialLineMap::in_a_prime(const Arc& a) const { return a_prime_position(a) >= 0; }

int PartialLineMap::a_prime_position(const Arc& a) const {
    auto it = std::lower_bound(a_prime.begin(), a_prime.end(), a);
    if (it != a_prime.end() && *it == a) return static_cast<int>(it - a_prime.begin());
    return -1;
}

PartialLineMap validate_pld(const Digraph& base, const ArcSet& a_prime, const std::vector<int>& phi) {
    if (min_in_degree(base) < 1)
        fail(ErrorKind::MinInDegreeZero, "base digraph must have minimum in-degree >= 1");
    if (phi.size() != base.arcs().size())
        fail(ErrorKind::InvalidArgument, "phi must map every arc of the base digraph");

    PartialLineMap map;
    map.base = base;
    map.a_prime = a_prime;
    std::sort(map.a_prime.begin(), map.a_prime.end());
    map.a_prime.erase(std::unique(map.a_prime.begin(), map.a_prime.end()), map.a_prime.end());
    for (const Arc& a : map.a_prime)
        if (base.arc_index(a.tail, a.head) < 0)
            fail(ErrorKind::InvalidArgument, "A' member " + arc_str(a) + " is not a base arc");

    // condition (i): H(A') = V
    VertexSet covered = heads(map.a_prime);
    if (static_cast<int>(covered.size()) != base.vertex_count()) {
        for (int v = 0; v < base.vertex_count(); ++v)
            if (!std::binary_search(covered.begin(), covered.end(), v))
                fail(ErrorKind::HeadsNotCovering, "vertex " + std::to_string(v) + " is not a head of A'");
    }

    // condition (ii)
    map.phi = phi;
    int m = base.arc_count();
    for (int i = 0; i < m; ++i) {
        const Arc& a = base.arcs()[i];
        if (map.phi[i] < 0 || map.phi[i] >= m)
            fail(ErrorKind::InvalidArgument, "phi image index out of range for arc " + arc_str(a));
        const Arc& img = base.arcs()[map.phi[i]];
        bool fixed = map.in_a_prime(a);
        if (fixed && map.phi[i] != i)
            fail(ErrorKind::PhiNotFixing, "phi must fix A' member " + arc_str(a));
        if (img.head != a.head)
            fail(ErrorKind::PhiWrongHead,
                 "phi" + arc_str(a) + " = " + arc_str(img) + " changes the head");
        if (!map.in_a_prime(img))
            fail(ErrorKind::PhiImageNotInAPrime,
                 "phi" + arc_str(a) + " = " + arc_str(img) + " is outside A'");
    }
    return map;
}

LabeledPld build_pld(const PartialLineMap& map) {
    const Digraph& base = map.base;
    int nv = static_cast<int>(map.a_prime.size());

    ArcSet pld_arcs;
    for (int i = 0; i < nv; ++i) {
        const Arc& ij = map.a_prime[i];
        int j = ij.head;
        for (int k : base.out_neighbors(j)) {
            int jk = base.arc_index(j, k);
            int target = map.a_prime_position(base.arcs()[map.phi[jk]]);
            pld_arcs.push_back(Arc{i, target});
        }
    }
    // phi preserves heads, so (j,k) != (j,k') have distinct images and no
    // duplicates can arise from one source vertex; dedupe anyway to keep the
    // set semantics explicit
    std::sort(pld_arcs.begin(), pld_arcs.end());
    pld_arcs.erase(std::unique(pld_arcs.begin(), pld_arcs.end()), pld_arcs.end());

    LabeledPld result;
    result.digraph = build_digraph(nv, pld_arcs);
    result.labels = map.a_prime;
    result.source = map;
    return result;
}

LabeledPld line_digraph(const Digraph& base) {
    std::vector<int> identity(base.arcs().size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    return build_pld(validate_pld(base, base.arcs(), identity));
}

namespace {

// DFS over arc indices emitting subsets in lexicographic order (a prefix is
// emitted before its extensions). A partial subset P considered at position i
// is extended only while P together with the still-available arcs {i..m-1}
// can cover all heads, so every expansion reaches at least one valid A'
class PldEnumerator {
  public:
    PldEnumerator(const Digraph& base, std::size_t cap) : base_(base), cap_(cap) {
        m_ = base.arc_count();
        n_ = base.vertex_count();
        // suffix_heads[i] = head set coverable by arcs i..m-1
        suffix_heads_.assign(m_ + 1, 0);
        for (int i = m_ - 1; i >= 0; --i)
            suffix_heads_[i] = suffix_heads_[i + 1] | (1ull << base.arcs()[i].head);
        full_ = n_ == 64 ? ~0ull : ((1ull << n_) - 1);
    }

    PldEnumeration run() {
        chosen_.clear();
        recurse(0, 0);
        return std::move(result_);
    }

  private:
    bool full_cover(std::uint64_t covered) const { return covered == full_; }

    // returns false once the cap made further work pointless
    bool recurse(int next, std::uint64_t covered) {
        if (full_cover(covered)) {
            if (!emit_all_phi()) return false;
        }
        for (int i = next; i < m_; ++i) {
            if (!full_cover(covered | suffix_heads_[i])) break;  // no completion possible, nor for larger i
            chosen_.push_back(i);
            bool keep_going = recurse(i + 1, covered | (1ull << base_.arcs()[i].head));
            chosen_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    // odometer over the arcs outside A', most significant first, each digit
    // running ascending over omega_minus(head) ∩ A'
    bool emit_all_phi() {
        ArcSet aprime;
        aprime.reserve(chosen_.size());
        std::vector<char> in_ap(m_, 0);
        for (int i : chosen_) {
            aprime.push_back(base_.arcs()[i]);
            in_ap[i] = 1;
        }
        std::vector<int> missing;
        for (int i = 0; i < m_; ++i)
            if (!in_ap[i]) missing.push_back(i);

        std::vector<std::vector<int>> candidates(missing.size());
        for (std::size_t t = 0; t < missing.size(); ++t) {
            int j = base_.arcs()[missing[t]].head;
            for (int x : base_.in_neighbors(j)) {
                int idx = base_.arc_index(x, j);
                if (in_ap[idx]) candidates[t].push_back(idx);
            }
            std::sort(candidates[t].begin(), candidates[t].end());
            // nonempty because A' covers every head
        }

        std::vector<std::size_t> digit(missing.size(), 0);
        while (true) {
            if (result_.maps.size() == cap_) {
                result_.truncated = true;
                return false;
            }
            PartialLineMap map;
            map.base = base_;
            map.a_prime = aprime;
            map.phi.resize(m_);
            for (int i = 0; i < m_; ++i) map.phi[i] = i;
            for (std::size_t t = 0; t < missing.size(); ++t)
                map.phi[missing[t]] = candidates[t][digit[t]];
            result_.maps.push_back(std::move(map));

            // advance odometer, last digit fastest
            std::size_t t = missing.size();
            while (t > 0) {
                --t;
                if (++digit[t] < candidates[t].size()) break;
                digit[t] = 0;
                if (t == 0) return true;
            }
            if (missing.empty()) return true;
        }
    }

    const Digraph& base_;
    std::size_t cap_;
    int m_ = 0;
    int n_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> suffix_heads_;
    std::vector<int> chosen_;
    PldEnumeration result_;
};

}  // namespace

PldEnumeration enumerate_plds(const Digraph& base, std::size_t cap) {
    if (min_in_degree(base) < 1)
        fail(ErrorKind::MinInDegreeZero, "base digraph must have minimum in-degree >= 1");
    if (base.vertex_count() > 64)
        fail(ErrorKind::InvalidArgument, "pld enumeration supports at most 64 vertices");
    return PldEnumerator(base, cap).run();
}

}  // namespace pldig
