#include "pldig/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include <json.hpp>

#include "pldig/domination.hpp"
#include "pldig/error.hpp"
#include "pldig/fixtures.hpp"
#include "pldig/grundy.hpp"
#include "pldig/io.hpp"
#include "pldig/pld.hpp"
#include "pldig/random.hpp"

namespace pldig {

namespace {

using ordered_json = nlohmann::ordered_json;

// violation records embed at most this many family members
constexpr std::size_t kFamilyJsonCap = 50;

// base digraphs are small (max_n <= 8), so their labelings are materialized;
// this bound keeps a pathological family from eating memory anyway
constexpr std::uint64_t kBaseGrundyCap = 200000;

std::vector<KlPair> dedupe_grid(const std::vector<KlPair>& grid) {
    std::vector<KlPair> out;
    for (const KlPair& p : grid)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

std::vector<int> distinct_ks(const std::vector<KlPair>& grid) {
    std::vector<int> ks;
    for (const KlPair& p : grid)
        if (std::find(ks.begin(), ks.end(), p.k) == ks.end()) ks.push_back(p.k);
    std::sort(ks.begin(), ks.end());
    return ks;
}

std::string kl_suffix(int k, int l) { return std::to_string(k) + "_" + std::to_string(l); }

// fixed row order: per-pair rows embed (k,l) in the name; the *_when_* rows
// aggregate the corrected-hypothesis diagnostics across the grid
struct RowLayout {
    std::vector<std::string> names;
    std::vector<int> indep_leq, mapf_indep;    // per distinct k
    int fib = -1;
    std::vector<int> ker_leq, ker_eq;          // per grid pair
    int semi_leq = -1, semi_iff = -1, semi_image = -1;
    std::vector<int> gr_eq, gr_lift, gr_proj;  // per grid pair
    int gr_zero = -1;
    int d_ker_leq = -1, d_ker_eq = -1, d_gr_eq = -1;
    int d_gr_lift = -1, d_gr_proj = -1, d_mapf = -1;

    int add(std::string name) {
        names.push_back(std::move(name));
        return static_cast<int>(names.size()) - 1;
    }
};

RowLayout make_layout(const std::vector<KlPair>& grid, const std::vector<int>& ks) {
    RowLayout lay;
    for (int k : ks) lay.indep_leq.push_back(lay.add("k_independent_leq_k" + std::to_string(k)));
    for (int k : ks) lay.mapf_indep.push_back(lay.add("map_f_independent_k" + std::to_string(k)));
    lay.fib = lay.add("fibonacci_leq");
    for (const KlPair& p : grid) lay.ker_leq.push_back(lay.add("kl_kernels_leq_" + kl_suffix(p.k, p.l)));
    for (const KlPair& p : grid) lay.ker_eq.push_back(lay.add("kl_kernels_equal_" + kl_suffix(p.k, p.l)));
    lay.semi_leq = lay.add("semikernels_leq");
    lay.semi_iff = lay.add("semikernels_iff");
    lay.semi_image = lay.add("semikernels_image");
    for (const KlPair& p : grid) lay.gr_eq.push_back(lay.add("kl_grundy_equal_" + kl_suffix(p.k, p.l)));
    for (const KlPair& p : grid) lay.gr_lift.push_back(lay.add("grundy_lift_valid_" + kl_suffix(p.k, p.l)));
    for (const KlPair& p : grid) lay.gr_proj.push_back(lay.add("grundy_project_ok_" + kl_suffix(p.k, p.l)));
    lay.gr_zero = lay.add("grundy_zero_kernel");
    lay.d_ker_leq = lay.add("kl_kernels_leq_when_girth_ge_k");
    lay.d_ker_eq = lay.add("kl_kernels_equal_when_girth_ge_k");
    lay.d_gr_eq = lay.add("kl_grundy_equal_when_girth_ge_k");
    lay.d_gr_lift = lay.add("grundy_lift_valid_when_girth_ge_k");
    lay.d_gr_proj = lay.add("grundy_project_ok_when_girth_gt_l");
    lay.d_mapf = lay.add("map_f_independent_when_girth_ge_k");
    return lay;
}

std::vector<TheoremTally> make_tallies(const RowLayout& lay) {
    std::vector<TheoremTally> rows(lay.names.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].name = lay.names[i];
    return rows;
}

// the record is built only while the row is under its cap; counting continues
template <typename MakeFn>
void add_violation(TheoremTally& t, MakeFn&& make) {
    ++t.violation_count;
    if (t.violations.size() < kViolationCap) t.violations.push_back(make());
}

struct GrundyFamily {
    std::vector<GrundyLabeling> labelings;
    bool truncated = false;
};

struct Families {
    std::vector<SetFamily> kernels;        // per grid pair
    std::vector<GrundyFamily> grundys;     // per grid pair, base digraphs only
    std::vector<SetFamily> independents;   // per distinct k
    SetFamily semikernels;
    std::uint64_t fib = 0;
};

Families compute_families(const Digraph& d, const std::vector<KlPair>& grid,
                          const std::vector<int>& ks, bool with_grundys) {
    Families f;
    f.kernels.reserve(grid.size());
    for (const KlPair& p : grid) f.kernels.push_back(enumerate_kl_kernels(d, KernelQuery{p.k, p.l}));
    if (with_grundys) {
        f.grundys.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            GrundyFamily& gf = f.grundys[i];
            GrundyScan scan =
                scan_kl_grundy(d, GrundyQuery{grid[i].k, grid[i].l}, kBaseGrundyCap,
                               [&gf](const GrundyLabeling& g) { gf.labelings.push_back(g); });
            gf.truncated = scan.truncated;
        }
    }
    for (int k : ks) f.independents.push_back(enumerate_k_independent_sets(d, k, true));
    f.semikernels = enumerate_semikernels(d);
    f.fib = fibonacci_number(d);
    return f;
}

std::string set_text(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

std::string set_family_json_capped(const SetFamily& fam) {
    if (fam.size() <= kFamilyJsonCap) return set_family_json(fam);
    SetFamily head(fam.begin(), fam.begin() + kFamilyJsonCap);
    std::string out = set_family_json(head);
    out.pop_back();
    out += ",\"+" + std::to_string(fam.size() - kFamilyJsonCap) + " more\"]";
    return out;
}

std::string grundy_family_json(const std::vector<GrundyLabeling>& gs, std::uint64_t total) {
    std::string out = "[";
    std::size_t shown = std::min(gs.size(), kFamilyJsonCap);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) out += ",";
        out += grundy_labeling_json(gs[i]);
    }
    if (total > shown) {
        if (shown) out += ",";
        out += "\"+" + std::to_string(total - shown) + " more\"";
    }
    return out + "]";
}

// zero level set of a labeling the enumerator already certified; mirrors the
// grundy_zero_kernel postcondition without revalidating
std::string zero_kernel_problem(const Digraph& d, const GrundyLabeling& g, int k, int l) {
    VertexSet zero;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (g[v] == 0) zero.push_back(v);
    if (!is_k_independent(d, zero, k))
        return "zero level set of " + grundy_labeling_json(g) + " is not k-independent";
    if (!is_l_absorbing(d, zero, l))
        return "zero level set of " + grundy_labeling_json(g) + " is not l-absorbing";
    return {};
}

struct Checker {
    const std::vector<KlPair>& grid;
    const std::vector<int>& ks;
    const RowLayout& lay;
    std::vector<TheoremTally>& rows;
    int trial;
    const Digraph& base;
    const Families& fb;
    const PartialLineMap& map;
    const LabeledPld& pld;
    const Families& fp;
    int base_girth;
    std::uint64_t grundy_cap;

    Violation make_violation(const std::string& row, int k, int l, long long lhs, long long rhs,
                             std::string lf, std::string rf, std::string detail) const {
        Violation v;
        v.row = row;
        v.trial = trial;
        v.k = k;
        v.l = l;
        v.lhs = lhs;
        v.rhs = rhs;
        v.digraph = serialize_edge_list(base);
        v.map = partial_line_map_json(map);
        v.lhs_family = std::move(lf);
        v.rhs_family = std::move(rf);
        v.detail = std::move(detail);
        return v;
    }

    template <typename FamilyFn>
    void leq(int row_idx, int k, int l, long long lhs, long long rhs, FamilyFn&& families) {
        TheoremTally& t = rows[row_idx];
        ++t.checked;
        if (lhs == rhs) ++t.tight;
        if (lhs > rhs)
            add_violation(t, [&] {
                auto [lf, rf] = families();
                return make_violation(t.name, k, l, lhs, rhs, std::move(lf), std::move(rf),
                                      "base count exceeds pld count");
            });
    }

    GrundyLabeling lift_values(const GrundyLabeling& g) const {
        GrundyLabeling h(pld.labels.size());
        for (std::size_t j = 0; j < pld.labels.size(); ++j) h[j] = g[pld.labels[j].head];
        return h;
    }

    // nullopt when two a_prime arcs into one head carry distinct values
    std::optional<GrundyLabeling> project_values(const GrundyLabeling& h) const {
        GrundyLabeling g(base.vertex_count(), -1);
        for (std::size_t j = 0; j < pld.labels.size(); ++j) {
            int x = pld.labels[j].head;
            if (g[x] == -1)
                g[x] = h[j];
            else if (g[x] != h[j])
                return std::nullopt;
        }
        return g;
    }

    void run() {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const SetFamily& ib = fb.independents[i];
            const SetFamily& ip = fp.independents[i];
            leq(lay.indep_leq[i], ks[i], 0, static_cast<long long>(ib.size()),
                static_cast<long long>(ip.size()),
                [&] { return std::pair(set_family_json_capped(ib), set_family_json_capped(ip)); });
            check_map_f(i);
        }
        leq(lay.fib, 0, 0, static_cast<long long>(fb.fib), static_cast<long long>(fp.fib),
            [] { return std::pair(std::string(), std::string()); });
        for (std::size_t i = 0; i < grid.size(); ++i) {
            check_kernels(i);
            check_grundy(i);
        }
        check_semikernels();
    }

    void check_map_f(std::size_t i) {
        int k = ks[i];
        bool girth_ok = base_girth >= k;
        const SetFamily& ib = fb.independents[i];
        std::string problem;
        std::vector<VertexSet> images;
        images.reserve(ib.size());
        for (const VertexSet& s : ib) {
            if (s.empty()) continue;
            VertexSet img = map_f(map, s);
            if (!is_k_independent(pld.digraph, img, k)) {
                problem = "map_f(" + set_text(s) + ") is not " + std::to_string(k) +
                          "-independent in the pld";
                break;
            }
            images.push_back(std::move(img));
        }
        if (problem.empty()) {
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end())
                problem = "map_f is not injective on the k-independent family";
        }
        property_outcome(lay.mapf_indep[i], lay.d_mapf, girth_ok, k, 0,
                         static_cast<long long>(ib.size()),
                         static_cast<long long>(fp.independents[i].size()), problem, [&] {
                             return std::pair(set_family_json_capped(ib),
                                              set_family_json_capped(fp.independents[i]));
                         });
    }

    // shared tally pattern: a property row plus its girth-gated diagnostic
    template <typename FamilyFn>
    void property_outcome(int row_idx, int diag_idx, bool diag_gate, int k, int l, long long lhs,
                          long long rhs, const std::string& problem, FamilyFn&& families) {
        TheoremTally& t = rows[row_idx];
        TheoremTally& dt = rows[diag_idx];
        ++t.checked;
        if (diag_gate)
            ++dt.checked;
        else
            ++dt.not_applicable;
        if (problem.empty()) {
            ++t.equal;
            if (diag_gate) ++dt.equal;
            return;
        }
        auto [lf, rf] = families();
        add_violation(t, [&] { return make_violation(t.name, k, l, lhs, rhs, lf, rf, problem); });
        if (diag_gate)
            add_violation(dt,
                          [&] { return make_violation(dt.name, k, l, lhs, rhs, lf, rf, problem); });
    }

    void check_kernels(std::size_t i) {
        int k = grid[i].k, l = grid[i].l;
        const SetFamily& kb = fb.kernels[i];
        const SetFamily& kp = fp.kernels[i];
        auto fams = [&] {
            return std::pair(set_family_json_capped(kb), set_family_json_capped(kp));
        };
        leq(lay.ker_leq[i], k, l, static_cast<long long>(kb.size()),
            static_cast<long long>(kp.size()), fams);
        if (base_girth >= k)
            leq(lay.d_ker_leq, k, l, static_cast<long long>(kb.size()),
                static_cast<long long>(kp.size()), fams);
        else
            ++rows[lay.d_ker_leq].not_applicable;

        kernel_equality(lay.ker_eq[i], l < k && base_girth >= l + 1, i);
        kernel_equality(lay.d_ker_eq, l < k && base_girth >= k, i);
    }

    void kernel_equality(int row_idx, bool gate, std::size_t i) {
        TheoremTally& t = rows[row_idx];
        if (!gate) {
            ++t.not_applicable;
            return;
        }
        ++t.checked;
        int k = grid[i].k, l = grid[i].l;
        const SetFamily& kb = fb.kernels[i];
        const SetFamily& kp = fp.kernels[i];
        std::string problem;
        if (kb.size() != kp.size()) {
            problem = "kernel counts differ under the equality hypothesis";
        } else {
            for (const VertexSet& K : kb) {
                VertexSet img = map_f(map, K);
                if (std::find(kp.begin(), kp.end(), img) == kp.end()) {
                    problem = "map_f(" + set_text(K) + ") is not a (k,l)-kernel of the pld";
                    break;
                }
                if (map_h(map, img) != K) {
                    problem = "map_h(map_f(K)) != K for K = " + set_text(K);
                    break;
                }
            }
        }
        if (problem.empty()) {
            ++t.equal;
            return;
        }
        add_violation(t, [&] {
            return make_violation(t.name, k, l, static_cast<long long>(kb.size()),
                                  static_cast<long long>(kp.size()), set_family_json_capped(kb),
                                  set_family_json_capped(kp), problem);
        });
    }

    void check_semikernels() {
        const SetFamily& sb = fb.semikernels;
        const SetFamily& sp = fp.semikernels;
        auto fams = [&] {
            return std::pair(set_family_json_capped(sb), set_family_json_capped(sp));
        };
        leq(lay.semi_leq, 0, 0, static_cast<long long>(sb.size()),
            static_cast<long long>(sp.size()), fams);

        TheoremTally& ti = rows[lay.semi_iff];
        ++ti.checked;
        if (sb.empty() == sp.empty()) {
            ++ti.equal;
        } else {
            add_violation(ti, [&] {
                auto [lf, rf] = fams();
                return make_violation(ti.name, 0, 0, static_cast<long long>(sb.size()),
                                      static_cast<long long>(sp.size()), std::move(lf),
                                      std::move(rf),
                                      "semikernel existence differs between base and pld");
            });
        }

        TheoremTally& tm = rows[lay.semi_image];
        ++tm.checked;
        std::string problem;
        for (const VertexSet& s : sb) {
            VertexSet img = map_f(map, s);
            if (!is_semikernel(pld.digraph, img)) {
                problem = "map_f(" + set_text(s) + ") is not a semikernel of the pld";
                break;
            }
        }
        if (problem.empty()) {
            ++tm.equal;
        } else {
            add_violation(tm, [&] {
                auto [lf, rf] = fams();
                return make_violation(tm.name, 0, 0, static_cast<long long>(sb.size()),
                                      static_cast<long long>(sp.size()), std::move(lf),
                                      std::move(rf), problem);
            });
        }
    }

    void check_grundy(std::size_t i) {
        int k = grid[i].k, l = grid[i].l;
        GrundyQuery q{k, l};
        const GrundyFamily& gb = fb.grundys[i];
        bool proj_applies = l <= k - 1;

        // one streaming pass over the pld labelings serves the count row, the
        // projection row and the zero-kernel row; labelings are not stored
        std::vector<GrundyLabeling> sample;
        std::string proj_problem, zero_problem;
        GrundyScan scan = scan_kl_grundy(
            pld.digraph, q, grundy_cap, [&](const GrundyLabeling& h) {
                if (sample.size() < kFamilyJsonCap) sample.push_back(h);
                if (proj_applies && proj_problem.empty()) {
                    std::optional<GrundyLabeling> g = project_values(h);
                    if (!g)
                        proj_problem = "projection of " + grundy_labeling_json(h) +
                                       " is ill-defined (a_prime arcs into one head carry "
                                       "distinct values)";
                    else if (!is_kl_grundy(base, *g, q))
                        proj_problem = "projection of " + grundy_labeling_json(h) +
                                       " is not a (k,l)-grundy function on the base";
                    else if (lift_values(*g) != h)
                        proj_problem = "lift(project(h)) != h for h = " + grundy_labeling_json(h);
                }
                if (zero_problem.empty())
                    zero_problem = zero_kernel_problem(pld.digraph, h, k, l);
            });

        auto fams = [&] {
            return std::pair(grundy_family_json(gb.labelings, gb.labelings.size()),
                             grundy_family_json(sample, scan.count));
        };
        long long lhs = static_cast<long long>(gb.labelings.size());
        long long rhs = static_cast<long long>(scan.count);

        // counts require both enumerations complete
        bool counts_ok = !gb.truncated && !scan.truncated;
        grundy_equality(lay.gr_eq[i], proj_applies && counts_ok, i, lhs, rhs, fams);
        grundy_equality(lay.d_gr_eq, proj_applies && counts_ok && base_girth >= k, i, lhs, rhs,
                        fams);

        // lift row walks the materialized base family
        std::string lift_problem;
        if (!gb.truncated) {
            for (const GrundyLabeling& g : gb.labelings) {
                if (is_kl_grundy(pld.digraph, lift_values(g), q)) continue;
                lift_problem = "lift of " + grundy_labeling_json(g) +
                               " is not a (k,l)-grundy function on the pld";
                break;
            }
        }
        property_pair(lay.gr_lift[i], !gb.truncated, k, l, lhs, rhs, lift_problem, fams);
        property_pair(lay.d_gr_lift, !gb.truncated && base_girth >= k, k, l, lhs, rhs,
                      lift_problem, fams);

        // projection round trip from the base side: project(lift(g)) == g holds
        // whenever the lift is valid, by construction; checked as plumbing
        if (proj_applies && proj_problem.empty() && !gb.truncated) {
            for (const GrundyLabeling& g : gb.labelings) {
                GrundyLabeling h = lift_values(g);
                if (!is_kl_grundy(pld.digraph, h, q)) continue;  // recorded by the lift row
                std::optional<GrundyLabeling> back = project_values(h);
                if (!back || *back != g) {
                    proj_problem = "project(lift(g)) != g for g = " + grundy_labeling_json(g);
                    break;
                }
            }
        }
        bool proj_gate = proj_applies && !scan.truncated && !gb.truncated;
        property_pair(lay.gr_proj[i], proj_gate, k, l, lhs, rhs, proj_problem, fams);
        property_pair(lay.d_gr_proj, proj_gate && base_girth >= l + 1, k, l, lhs, rhs,
                      proj_problem, fams);

        // zero-kernel row, pld side; a failing labeling is a violation even
        // when the scan was cut off afterwards
        TheoremTally& tz = rows[lay.gr_zero];
        if (!zero_problem.empty()) {
            ++tz.checked;
            add_violation(tz, [&] {
                return make_violation(tz.name, k, l, rhs, 0,
                                      grundy_family_json(sample, scan.count), std::string(),
                                      zero_problem);
            });
        } else if (scan.truncated) {
            ++tz.not_applicable;
        } else {
            ++tz.checked;
            ++tz.equal;
        }
    }

    template <typename FamilyFn>
    void grundy_equality(int row_idx, bool gate, std::size_t i, long long lhs, long long rhs,
                         FamilyFn&& fams) {
        TheoremTally& t = rows[row_idx];
        if (!gate) {
            ++t.not_applicable;
            return;
        }
        ++t.checked;
        if (lhs == rhs) {
            ++t.equal;
            return;
        }
        add_violation(t, [&] {
            auto [lf, rf] = fams();
            return make_violation(t.name, grid[i].k, grid[i].l, lhs, rhs, std::move(lf),
                                  std::move(rf), "grundy function counts differ");
        });
    }

    // one gated row sharing a precomputed problem string
    template <typename FamilyFn>
    void property_pair(int row_idx, bool gate, int k, int l, long long lhs, long long rhs,
                       const std::string& problem, FamilyFn&& fams) {
        TheoremTally& t = rows[row_idx];
        if (!gate) {
            ++t.not_applicable;
            return;
        }
        ++t.checked;
        if (problem.empty()) {
            ++t.equal;
            return;
        }
        add_violation(t, [&] {
            auto [lf, rf] = fams();
            return make_violation(t.name, k, l, lhs, rhs, std::move(lf), std::move(rf), problem);
        });
    }
};

// zero-kernel row over a digraph's own labelings (no map in the record, so
// the violation replays from the edge list alone)
void check_zero_list(const Digraph& d, const Families& f, const std::vector<KlPair>& grid,
                     const RowLayout& lay, std::vector<TheoremTally>& rows, int trial) {
    TheoremTally& t = rows[lay.gr_zero];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const GrundyFamily& gf = f.grundys[i];
        std::string problem;
        for (const GrundyLabeling& g : gf.labelings) {
            problem = zero_kernel_problem(d, g, grid[i].k, grid[i].l);
            if (!problem.empty()) break;
        }
        if (!problem.empty()) {
            ++t.checked;
            add_violation(t, [&] {
                Violation v;
                v.row = t.name;
                v.trial = trial;
                v.k = grid[i].k;
                v.l = grid[i].l;
                v.lhs = static_cast<long long>(gf.labelings.size());
                v.rhs = 0;
                v.digraph = serialize_edge_list(d);
                v.lhs_family = grundy_family_json(gf.labelings, gf.labelings.size());
                v.detail = problem;
                return v;
            });
        } else if (gf.truncated) {
            ++t.not_applicable;
        } else {
            ++t.checked;
            ++t.equal;
        }
    }
}

// an oversized pld skips the instance; mirror the touch pattern of
// Checker::run so checked + not_applicable stays comparable across rows
void skip_instance(const std::vector<KlPair>& grid, const std::vector<int>& ks,
                   const RowLayout& lay, std::vector<TheoremTally>& rows) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
        ++rows[lay.indep_leq[i]].not_applicable;
        ++rows[lay.mapf_indep[i]].not_applicable;
        ++rows[lay.d_mapf].not_applicable;
    }
    ++rows[lay.fib].not_applicable;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ++rows[lay.ker_leq[i]].not_applicable;
        ++rows[lay.d_ker_leq].not_applicable;
        ++rows[lay.ker_eq[i]].not_applicable;
        ++rows[lay.d_ker_eq].not_applicable;
        ++rows[lay.gr_eq[i]].not_applicable;
        ++rows[lay.d_gr_eq].not_applicable;
        ++rows[lay.gr_lift[i]].not_applicable;
        ++rows[lay.d_gr_lift].not_applicable;
        ++rows[lay.gr_proj[i]].not_applicable;
        ++rows[lay.d_gr_proj].not_applicable;
        ++rows[lay.gr_zero].not_applicable;
    }
    ++rows[lay.semi_leq].not_applicable;
    ++rows[lay.semi_iff].not_applicable;
    ++rows[lay.semi_image].not_applicable;
}

struct TrialOutcome {
    std::vector<TheoremTally> rows;
    bool truncated = false;
};

TrialOutcome run_one_digraph(const Digraph& base, const std::vector<KlPair>& grid,
                             const std::vector<int>& ks, const RowLayout& lay,
                             const CampaignConfig& cfg, int trial) {
    TrialOutcome out{make_tallies(lay), false};
    Families fb = compute_families(base, grid, ks, true);
    check_zero_list(base, fb, grid, lay, out.rows, trial);
    PldEnumeration plds = enumerate_plds(base, cfg.pld_cap);
    out.truncated = plds.truncated;
    int bg = girth(base);
    for (const PartialLineMap& m : plds.maps) {
        LabeledPld pld = build_pld(m);
        if (static_cast<std::size_t>(pld.digraph.vertex_count()) > cfg.pld_vertex_cap) {
            skip_instance(grid, ks, lay, out.rows);
            continue;
        }
        Families fp = compute_families(pld.digraph, grid, ks, false);
        Checker checker{grid, ks, lay, out.rows, trial, base, fb, m, pld, fp, bg, cfg.grundy_cap};
        checker.run();
    }
    return out;
}

void merge_outcome(TheoremReport& report, const TrialOutcome& outcome) {
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        TheoremTally& into = report.rows[i];
        const TheoremTally& from = outcome.rows[i];
        into.checked += from.checked;
        into.tight += from.tight;
        into.equal += from.equal;
        into.not_applicable += from.not_applicable;
        into.violation_count += from.violation_count;
        for (const Violation& v : from.violations) {
            if (into.violations.size() >= kViolationCap) break;
            into.violations.push_back(v);
        }
    }
    report.truncated = report.truncated || outcome.truncated;
}

ordered_json violation_to_json(const Violation& v) {
    ordered_json j;
    j["row"] = v.row;
    j["trial"] = v.trial;
    j["k"] = v.k;
    j["l"] = v.l;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["digraph"] = v.digraph;
    j["map"] = v.map.empty() ? ordered_json() : ordered_json::parse(v.map);
    j["lhs_family"] = v.lhs_family.empty() ? ordered_json() : ordered_json::parse(v.lhs_family);
    j["rhs_family"] = v.rhs_family.empty() ? ordered_json() : ordered_json::parse(v.rhs_family);
    j["detail"] = v.detail;
    return j;
}

}  // namespace

void validate_campaign_config(const CampaignConfig& cfg) {
    if (cfg.trials < 1) fail(ErrorKind::InvalidArgument, "trials must be >= 1");
    if (cfg.max_n < 2 || cfg.max_n > 8)
        fail(ErrorKind::InvalidArgument, "max_n must lie in 2..8");
    if (!(cfg.arc_probability > 0.0) || !(cfg.arc_probability < 1.0))
        fail(ErrorKind::InvalidArgument, "arc probability must lie in (0,1)");
    if (cfg.pld_cap < 1) fail(ErrorKind::InvalidArgument, "pld_cap must be >= 1");
    if (cfg.pld_vertex_cap < 2 || cfg.pld_vertex_cap > 63)
        fail(ErrorKind::InvalidArgument, "pld_vertex_cap must lie in 2..63");
    if (cfg.grundy_cap < 1) fail(ErrorKind::InvalidArgument, "grundy_cap must be >= 1");
    if (cfg.kl_grid.empty()) fail(ErrorKind::InvalidArgument, "kl grid must be nonempty");
    for (const KlPair& p : cfg.kl_grid) {
        if (p.k < 2) fail(ErrorKind::InvalidArgument, "grid pair requires k >= 2");
        if (p.l < 1) fail(ErrorKind::InvalidArgument, "grid pair requires l >= 1");
    }
}

long long TheoremReport::total_violations() const {
    long long n = 0;
    for (const TheoremTally& t : rows) n += t.violation_count;
    return n;
}

const TheoremTally* TheoremReport::row(const std::string& name) const {
    for (const TheoremTally& t : rows)
        if (t.name == name) return &t;
    return nullptr;
}

TheoremReport run_campaign(const CampaignConfig& cfg, int threads) {
    validate_campaign_config(cfg);
    std::vector<KlPair> grid = dedupe_grid(cfg.kl_grid);
    std::vector<int> ks = distinct_ks(grid);
    RowLayout lay = make_layout(grid, ks);

    std::vector<std::uint64_t> trial_seeds(static_cast<std::size_t>(cfg.trials));
    SplitMix64 master(cfg.seed);
    for (std::uint64_t& s : trial_seeds) s = master.next();

    auto run_trial = [&](int t) {
        SplitMix64 rng(trial_seeds[static_cast<std::size_t>(t)]);
        int n = cfg.max_n > 2 ? 2 + static_cast<int>(rng.next_below(
                                        static_cast<std::uint64_t>(cfg.max_n - 1)))
                              : 2;
        Digraph base = random_digraph(n, cfg.arc_probability, rng.next());
        return run_one_digraph(base, grid, ks, lay, cfg, t);
    };

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
    int workers = std::max(1, threads);
    if (workers == 1) {
        for (int t = 0; t < cfg.trials; ++t) outcomes[static_cast<std::size_t>(t)] = run_trial(t);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr first_error;
        std::mutex error_lock;
        auto worker = [&] {
            for (;;) {
                int t = next.fetch_add(1);
                if (t >= cfg.trials) break;
                try {
                    outcomes[static_cast<std::size_t>(t)] = run_trial(t);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(error_lock);
                    if (!first_error) first_error = std::current_exception();
                    break;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    TheoremReport report;
    report.config = cfg;
    report.rows = make_tallies(lay);
    for (const TrialOutcome& oc : outcomes) merge_outcome(report, oc);
    return report;
}

TheoremReport run_fixture_campaign(const std::vector<KlPair>& grid_in, std::size_t pld_cap) {
    CampaignConfig cfg;
    cfg.kl_grid = grid_in;
    cfg.pld_cap = pld_cap;
    cfg.trials = static_cast<int>(fixture_names().size());
    validate_campaign_config(cfg);
    std::vector<KlPair> grid = dedupe_grid(grid_in);
    std::vector<int> ks = distinct_ks(grid);
    RowLayout lay = make_layout(grid, ks);

    TheoremReport report;
    report.config = cfg;
    report.rows = make_tallies(lay);
    int trial = 0;
    for (const std::string& name : fixture_names()) {
        Digraph base = fixture(name).digraph;
        merge_outcome(report, run_one_digraph(base, grid, ks, lay, cfg, trial));
        ++trial;
    }
    return report;
}

std::string report_json(const TheoremReport& report) {
    ordered_json j;
    ordered_json cfg;
    cfg["trials"] = report.config.trials;
    cfg["max_n"] = report.config.max_n;
    cfg["arc_probability"] = report.config.arc_probability;
    cfg["seed"] = report.config.seed;
    cfg["pld_cap"] = report.config.pld_cap;
    cfg["pld_vertex_cap"] = report.config.pld_vertex_cap;
    cfg["grundy_cap"] = report.config.grundy_cap;
    ordered_json grid = ordered_json::array();
    for (const KlPair& p : report.config.kl_grid) grid.push_back(ordered_json::array({p.k, p.l}));
    cfg["kl_grid"] = grid;
    j["config"] = cfg;

    ordered_json per = ordered_json::object();
    for (const TheoremTally& t : report.rows) {
        ordered_json row;
        row["checked"] = t.checked;
        row["tight"] = t.tight;
        row["equal"] = t.equal;
        row["not_applicable"] = t.not_applicable;
        row["violation_count"] = t.violation_count;
        ordered_json vs = ordered_json::array();
        for (const Violation& v : t.violations) vs.push_back(violation_to_json(v));
        row["violations"] = vs;
        per[t.name] = row;
    }
    j["per_theorem"] = per;
    j["truncated"] = report.truncated;
    return j.dump();
}

bool replay_violation(const std::string& violation_json) {
    ordered_json j;
    try {
        j = ordered_json::parse(violation_json);
    } catch (const ordered_json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    const std::string row = j.at("row").get<std::string>();
    const int k = j.at("k").get<int>();
    const int l = j.at("l").get<int>();
    const long long lhs = j.at("lhs").get<long long>();
    const long long rhs = j.at("rhs").get<long long>();
    Digraph base = parse_edge_list(j.at("digraph").get<std::string>());

    std::vector<KlPair> grid;
    if (k >= 2 && l >= 1)
        grid = {{k, l}};
    else if (k >= 2)
        grid = {{k, 1}};
    else
        grid = {{2, 1}};
    std::vector<int> ks = distinct_ks(grid);
    RowLayout lay = make_layout(grid, ks);
    std::vector<TheoremTally> rows = make_tallies(lay);
    CampaignConfig defaults;  // replay assumes the default budgets

    const ordered_json& map_field = j.at("map");
    if (map_field.is_null()) {
        Families f = compute_families(base, grid, ks, true);
        check_zero_list(base, f, grid, lay, rows, 0);
    } else {
        PartialLineMap m = parse_partial_line_map_json(base, map_field.dump());
        Families fb = compute_families(base, grid, ks, true);
        LabeledPld pld = build_pld(m);
        Families fp = compute_families(pld.digraph, grid, ks, false);
        Checker checker{grid, ks, lay,         rows, 0, base, fb, m, pld, fp,
                        girth(base), defaults.grundy_cap};
        checker.run();
    }
    for (const TheoremTally& t : rows)
        for (const Violation& v : t.violations)
            if (v.row == row && v.lhs == lhs && v.rhs == rhs) return true;
    return false;
}

}  // namespace pldig
