// pldig: command line front end for the partial line digraph library.
// JSON results go to stdout, logs to stderr. exit 0 on success, 1 when a
// campaign recorded violations, 2 on any error (emitted as a JSON object).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pldig/campaign.hpp"
#include "pldig/domination.hpp"
#include "pldig/error.hpp"
#include "pldig/fixtures.hpp"
#include "pldig/grundy.hpp"
#include "pldig/io.hpp"
#include "pldig/pld.hpp"

namespace {

struct Options {
    std::string input;
    std::string fixture;
    std::string output;
    std::string map_path;
    int k = 2;
    int l = 1;
    bool include_empty = true;
    int trials = 100;
    int max_n = 6;
    double p = 0.3;
    std::string seed_text;  // unset -> PLDIG_SEED -> 1
    std::size_t pld_cap = 100;
    std::size_t pld_vertex_cap = 16;
    std::uint64_t grundy_cap = 20000;
    std::string grid_text = "2:1,2:2,3:1,3:2";
    int threads = 1;
    bool fixtures_only = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) pldig::fail(pldig::ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pldig::Digraph load_digraph(const Options& o) {
    if (!o.input.empty() && !o.fixture.empty())
        pldig::fail(pldig::ErrorKind::OptionConflict, "--input and --fixture are mutually exclusive");
    if (o.input.empty() && o.fixture.empty())
        pldig::fail(pldig::ErrorKind::OptionConflict, "one of --input or --fixture is required");
    if (!o.fixture.empty()) return pldig::fixture(o.fixture).digraph;
    return pldig::parse_digraph_text(read_file(o.input));
}

void emit(const Options& o, std::string text) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) pldig::fail(pldig::ErrorKind::InvalidArgument, "cannot write '" + o.output + "'");
    out << text;
}

std::vector<pldig::KlPair> parse_grid(const std::string& text) {
    std::vector<pldig::KlPair> grid;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            pldig::fail(pldig::ErrorKind::InvalidArgument,
                        "grid entry '" + item + "' is not of the form k:l");
        try {
            int k = std::stoi(item.substr(0, colon));
            int l = std::stoi(item.substr(colon + 1));
            grid.push_back({k, l});
        } catch (const std::exception&) {
            pldig::fail(pldig::ErrorKind::InvalidArgument,
                        "grid entry '" + item + "' is not of the form k:l");
        }
    }
    if (grid.empty())
        pldig::fail(pldig::ErrorKind::InvalidArgument, "grid must contain at least one k:l pair");
    return grid;
}

std::uint64_t resolve_seed(const std::string& seed_text) {
    std::string text = seed_text;
    if (text.empty()) {
        const char* env = std::getenv("PLDIG_SEED");
        if (env) text = env;
    }
    if (text.empty()) return 1;
    try {
        std::size_t used = 0;
        std::uint64_t seed = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return seed;
    } catch (const std::exception&) {
        pldig::fail(pldig::ErrorKind::InvalidArgument, "seed '" + text + "' is not a 64-bit integer");
    }
}

std::string grundy_list_json(const std::vector<pldig::GrundyLabeling>& gs) {
    std::string out = "{\"count\":" + std::to_string(gs.size()) + ",\"labelings\":[";
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i) out += ",";
        out += pldig::grundy_labeling_json(gs[i]);
    }
    return out + "]}";
}

std::string family_json(const pldig::SetFamily& fam, const char* key) {
    return "{\"count\":" + std::to_string(fam.size()) + ",\"" + key + "\":" +
           pldig::set_family_json(fam) + "}";
}

int run_campaign_cmd(const Options& o) {
    std::vector<pldig::KlPair> grid = parse_grid(o.grid_text);
    pldig::TheoremReport report;
    if (o.fixtures_only) {
        std::cerr << "campaign: fixtures only, pld_cap=" << o.pld_cap << "\n";
        report = pldig::run_fixture_campaign(grid, o.pld_cap);
    } else {
        pldig::CampaignConfig cfg;
        cfg.trials = o.trials;
        cfg.max_n = o.max_n;
        cfg.arc_probability = o.p;
        cfg.seed = resolve_seed(o.seed_text);
        cfg.pld_cap = o.pld_cap;
        cfg.pld_vertex_cap = o.pld_vertex_cap;
        cfg.grundy_cap = o.grundy_cap;
        cfg.kl_grid = grid;
        std::cerr << "campaign: " << cfg.trials << " trials, max_n=" << cfg.max_n
                  << ", p=" << cfg.arc_probability << ", seed=" << cfg.seed
                  << ", threads=" << o.threads << "\n";
        report = pldig::run_campaign(cfg, o.threads);
    }
    long long violations = report.total_violations();
    std::cerr << "campaign: done, " << violations << " violation(s)\n";
    emit(o, pldig::report_json(report));
    return violations > 0 ? 1 : 0;
}

int dispatch(const CLI::App& app, const Options& o) {
    if (app.got_subcommand("build-pld")) {
        pldig::Digraph base = load_digraph(o);
        pldig::PartialLineMap map;
        if (!o.map_path.empty()) {
            map = pldig::parse_partial_line_map_json(base, read_file(o.map_path));
        } else if (!o.fixture.empty() && pldig::fixture(o.fixture).has_map) {
            map = pldig::fixture(o.fixture).map;
        } else {
            pldig::fail(pldig::ErrorKind::OptionConflict,
                        "build-pld needs --map, or a fixture that carries one");
        }
        emit(o, pldig::labeled_pld_json(pldig::build_pld(map), true));
        return 0;
    }
    if (app.got_subcommand("line-digraph")) {
        emit(o, pldig::labeled_pld_json(pldig::line_digraph(load_digraph(o)), false));
        return 0;
    }
    if (app.got_subcommand("kernels")) {
        pldig::SetFamily fam =
            pldig::enumerate_kl_kernels(load_digraph(o), pldig::KernelQuery{o.k, o.l});
        emit(o, family_json(fam, "sets"));
        return 0;
    }
    if (app.got_subcommand("semikernels")) {
        emit(o, family_json(pldig::enumerate_semikernels(load_digraph(o)), "sets"));
        return 0;
    }
    if (app.got_subcommand("grundy")) {
        emit(o, grundy_list_json(
                    pldig::enumerate_kl_grundy(load_digraph(o), pldig::GrundyQuery{o.k, o.l})));
        return 0;
    }
    if (app.got_subcommand("fibonacci")) {
        std::uint64_t fib = pldig::fibonacci_number(load_digraph(o));
        if (!o.include_empty) --fib;  // fibonacci_number always counts the empty set
        emit(o, "{\"fibonacci\":" + std::to_string(fib) + "}");
        return 0;
    }
    if (app.got_subcommand("fixtures")) {
        std::string out = "[";
        bool first = true;
        for (const std::string& name : pldig::fixture_names()) {
            const pldig::Digraph& d = pldig::fixture(name).digraph;
            if (!first) out += ",";
            first = false;
            out += "{\"name\":\"" + name + "\",\"vertices\":" + std::to_string(d.vertex_count()) +
                   ",\"arcs\":" + std::to_string(d.arc_count()) + "}";
        }
        emit(o, out + "]");
        return 0;
    }
    if (app.got_subcommand("export-dot")) {
        emit(o, pldig::to_dot(load_digraph(o)));
        return 0;
    }
    if (app.got_subcommand("campaign")) return run_campaign_cmd(o);
    pldig::fail(pldig::ErrorKind::InvalidArgument, "no subcommand given");
}

void print_error(pldig::ErrorKind kind, const std::string& message) {
    std::string msg;
    msg.reserve(message.size());
    for (char c : message) {  // message is library-generated; escape the json specials anyway
        if (c == '"' || c == '\\') msg += '\\';
        if (c == '\n') {
            msg += "\\n";
            continue;
        }
        msg += c;
    }
    std::cout << "{\"error\":{\"kind\":\"" << pldig::error_kind_name(kind) << "\",\"message\":\""
              << msg << "\"}}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial line digraph toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&o](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("--input", o.input, "digraph file (edge list or DOT)");
            sub->add_option("--fixture", o.fixture, "figure fixture name");
        }
        sub->add_option("--output", o.output, "write the result here instead of stdout");
    };

    CLI::App* build = app.add_subcommand("build-pld", "construct a partial line digraph");
    add_io(build, true);
    build->add_option("--map", o.map_path, "partial line map json file");

    add_io(app.add_subcommand("line-digraph", "construct the full line digraph"), true);

    CLI::App* kernels = app.add_subcommand("kernels", "enumerate (k,l)-kernels");
    add_io(kernels, true);
    kernels->add_option("--k", o.k, "independence parameter")->required();
    kernels->add_option("--l", o.l, "absorption parameter")->required();

    add_io(app.add_subcommand("semikernels", "enumerate semikernels"), true);

    CLI::App* grundy = app.add_subcommand("grundy", "enumerate (k,l)-grundy functions");
    add_io(grundy, true);
    grundy->add_option("--k", o.k, "condition (2) parameter")->required();
    grundy->add_option("--l", o.l, "condition (1) parameter")->required();

    CLI::App* fib = app.add_subcommand("fibonacci", "count independent vertex subsets");
    add_io(fib, true);
    fib->add_flag("--include-empty,!--exclude-empty", o.include_empty,
                  "count the empty set (default on)");

    add_io(app.add_subcommand("fixtures", "list the figure fixtures"), false);

    add_io(app.add_subcommand("export-dot", "emit the digraph in DOT format"), true);

    CLI::App* campaign = app.add_subcommand("campaign", "run the theorem verification campaign");
    add_io(campaign, false);
    campaign->add_option("--trials", o.trials, "number of random digraphs");
    campaign->add_option("--max-n", o.max_n, "vertex count upper bound");
    campaign->add_option("--p", o.p, "arc probability");
    campaign->add_option("--seed", o.seed_text, "64-bit seed (default: PLDIG_SEED env, then 1)");
    campaign->add_option("--pld-cap", o.pld_cap, "partial line digraphs per trial digraph");
    campaign->add_option("--pld-vertex-cap", o.pld_vertex_cap,
                         "skip instances whose pld has more vertices");
    campaign->add_option("--grundy-cap", o.grundy_cap, "per-instance grundy enumeration budget");
    campaign->add_option("--grid", o.grid_text, "comma separated k:l pairs");
    campaign->add_option("--threads", o.threads, "worker threads");
    campaign->add_flag("--fixtures", o.fixtures_only, "run over the figure fixtures instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error(pldig::ErrorKind::InvalidArgument, e.what());
        return 2;
    }

    try {
        return dispatch(app, o);
    } catch (const pldig::Error& e) {
        print_error(e.kind(), e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error(pldig::ErrorKind::InvalidArgument, e.what());
        return 2;
    }
}
