#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pldig/digraph.hpp"

namespace pldig {

struct KlPair {
    int k = 2;
    int l = 1;
    friend bool operator==(const KlPair&, const KlPair&) = default;
};

struct CampaignConfig {
    int trials = 100;
    int max_n = 6;  // <= 8, exhaustive enumeration feasibility
    double arc_probability = 0.3;
    std::uint64_t seed = 1;
    std::size_t pld_cap = 100;
    // instances whose pld exceeds this vertex count are skipped wholesale
    // (counted not_applicable): the exhaustive subset scans are 2^n
    std::size_t pld_vertex_cap = 16;
    // per-instance grundy enumeration budget; rows needing the full family
    // go not_applicable when an enumeration is cut off here
    std::uint64_t grundy_cap = 20000;
    std::vector<KlPair> kl_grid = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
};

void validate_campaign_config(const CampaignConfig& cfg);

// full reproduction data: the instance can be rebuilt from digraph (edge
// list) and map (json), then re-checked through the public operations
struct Violation {
    std::string row;
    int trial = -1;
    int k = 0;  // 0 when the row is not (k,l)-bound
    int l = 0;
    long long lhs = 0;
    long long rhs = 0;
    std::string digraph;
    std::string map;  // empty for rows checked on a digraph alone
    std::string lhs_family;
    std::string rhs_family;
    std::string detail;
};

inline constexpr std::size_t kViolationCap = 25;

struct TheoremTally {
    std::string name;
    long long checked = 0;
    long long tight = 0;            // inequality instances holding with equality
    long long equal = 0;            // equalities / properties verified
    long long not_applicable = 0;   // hypothesis-gated instances skipped
    long long violation_count = 0;
    std::vector<Violation> violations;  // first kViolationCap of them
};

struct TheoremReport {
    CampaignConfig config;
    std::vector<TheoremTally> rows;
    bool truncated = false;

    long long total_violations() const;
    const TheoremTally* row(const std::string& name) const;
};

// deterministic for a fixed config regardless of thread count: trial
// sub-reports merge in trial order
TheoremReport run_campaign(const CampaignConfig& cfg, int threads = 1);

// the same checks over the eight figure fixtures (trial = fixture index);
// trials/max_n/arc_probability/seed in the embedded config are informational
TheoremReport run_fixture_campaign(const std::vector<KlPair>& grid, std::size_t pld_cap);

std::string report_json(const TheoremReport& report);

// rebuilds one serialized violation record and re-derives it through the
// public operations; true iff the violation reproduces
bool replay_violation(const std::string& violation_json);

}  // namespace pldig
