#include "pldig/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pldig/error.hpp"

namespace pldig {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(int line, const std::string& what) {
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
    std::size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// splits into (1-based line number, content) pairs, comments and blanks gone
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string body = strip_comment(line);
        if (!blank(body)) out.emplace_back(number, body);
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& body, int line, std::size_t expected) {
    std::istringstream iss(body);
    std::vector<long long> values;
    long long v;
    while (iss >> v) values.push_back(v);
    if (!iss.eof()) {
        iss.clear();
        std::string rest;
        iss >> rest;
        parse_fail(line, "unexpected token '" + rest + "'");
    }
    if (values.size() != expected)
        parse_fail(line, "expected " + std::to_string(expected) + " integers, found " +
                             std::to_string(values.size()));
    return values;
}

int external_vertex(long long v, long long n, int line) {
    if (v < 1 || v > n)
        parse_fail(line, "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

ordered_json arc_pair(const Arc& a) {
    return ordered_json::array({a.tail + 1, a.head + 1});
}

ordered_json arcs_json(const ArcSet& arcs) {
    ordered_json out = ordered_json::array();
    for (const Arc& a : arcs) out.push_back(arc_pair(a));
    return out;
}

ordered_json map_json(const PartialLineMap& map) {
    ordered_json j;
    j["a_prime"] = arcs_json(map.a_prime);
    ordered_json phi = ordered_json::array();
    const ArcSet& arcs = map.base.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (map.in_a_prime(arcs[i])) continue;
        phi.push_back(ordered_json::array(
            {arc_pair(arcs[i]), arc_pair(arcs[map.phi[i]])}));
    }
    j["phi"] = phi;
    return j;
}

Arc arc_from_json(const ordered_json& j, const Digraph& base, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        fail(ErrorKind::ParseError, std::string(what) + " must be a [u, v] pair");
    long long u = j[0].get<long long>();
    long long v = j[1].get<long long>();
    long long n = base.vertex_count();
    if (u < 1 || u > n || v < 1 || v > n)
        fail(ErrorKind::VertexOutOfRange,
             std::string(what) + " [" + std::to_string(u) + ", " + std::to_string(v) +
                 "] outside 1.." + std::to_string(n));
    return Arc{static_cast<int>(u - 1), static_cast<int>(v - 1)};
}

}  // namespace

Digraph parse_edge_list(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) fail(ErrorKind::ParseError, "empty input, expected 'n m' header");
    auto header = parse_ints(lines[0].second, lines[0].first, 2);
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) parse_fail(lines[0].first, "negative counts in header");
    if (static_cast<long long>(lines.size()) - 1 < m)
        fail(ErrorKind::ParseError,
             "expected " + std::to_string(m) + " arc lines, found " +
                 std::to_string(lines.size() - 1));
    if (static_cast<long long>(lines.size()) - 1 > m)
        parse_fail(lines[1 + m].first, "unexpected trailing content");
    ArcSet arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const auto& [number, body] = lines[static_cast<std::size_t>(i) + 1];
        auto uv = parse_ints(body, number, 2);
        arcs.push_back(Arc{external_vertex(uv[0], n, number), external_vertex(uv[1], n, number)});
    }
    return build_digraph(static_cast<int>(n), arcs);
}

std::string serialize_edge_list(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail + 1 << ' ' << a.head + 1 << '\n';
    return out.str();
}

std::string to_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
    for (const Arc& a : d.arcs()) out << "  " << a.tail + 1 << " -> " << a.head + 1 << ";\n";
    out << "}\n";
    return out.str();
}

bool looks_like_dot(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return text.compare(i, 7, "digraph") == 0;
}

Digraph parse_dot(const std::string& text) {
    if (!looks_like_dot(text)) fail(ErrorKind::ParseError, "missing 'digraph' keyword");
    std::size_t open = text.find('{');
    std::size_t close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        fail(ErrorKind::ParseError, "unbalanced braces in dot input");
    std::string body = text.substr(open + 1, close - open - 1);

    long long max_id = 0;
    std::vector<std::pair<long long, long long>> raw_arcs;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t end = body.find(';', start);
        std::string stmt = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
        start = end == std::string::npos ? body.size() + 1 : end + 1;
        if (blank(stmt)) continue;
        std::istringstream iss(stmt);
        long long u;
        if (!(iss >> u)) fail(ErrorKind::ParseError, "bad dot statement '" + stmt + "'");
        std::string arrow;
        if (iss >> arrow) {
            long long v;
            if (arrow != "->" || !(iss >> v))
                fail(ErrorKind::ParseError, "bad dot statement '" + stmt + "'");
            std::string rest;
            if (iss >> rest) fail(ErrorKind::ParseError, "bad dot statement '" + stmt + "'");
            if (u < 1 || v < 1) fail(ErrorKind::ParseError, "dot vertex ids are 1-based");
            max_id = std::max({max_id, u, v});
            raw_arcs.emplace_back(u, v);
        } else {
            if (u < 1) fail(ErrorKind::ParseError, "dot vertex ids are 1-based");
            max_id = std::max(max_id, u);
        }
    }
    ArcSet arcs;
    arcs.reserve(raw_arcs.size());
    for (auto [u, v] : raw_arcs)
        arcs.push_back(Arc{static_cast<int>(u - 1), static_cast<int>(v - 1)});
    return build_digraph(static_cast<int>(max_id), arcs);
}

Digraph parse_digraph_text(const std::string& text) {
    return looks_like_dot(text) ? parse_dot(text) : parse_edge_list(text);
}

std::string digraph_json(const Digraph& d) {
    ordered_json j;
    j["vertices"] = d.vertex_count();
    j["arcs"] = arcs_json(d.arcs());
    return j.dump();
}

std::string partial_line_map_json(const PartialLineMap& map) {
    return map_json(map).dump();
}

PartialLineMap parse_partial_line_map_json(const Digraph& base, const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("a_prime") || !j.contains("phi"))
        fail(ErrorKind::ParseError, "expected an object with 'a_prime' and 'phi'");

    ArcSet a_prime;
    for (const auto& entry : j["a_prime"]) {
        Arc a = arc_from_json(entry, base, "a_prime member");
        if (base.arc_index(a.tail, a.head) < 0)
            fail(ErrorKind::InvalidArgument,
                 "a_prime member (" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) +
                     ") is not a base arc");
        a_prime.push_back(a);
    }
    std::sort(a_prime.begin(), a_prime.end());

    const ArcSet& arcs = base.arcs();
    std::vector<char> fixed(arcs.size(), 0);
    for (const Arc& a : a_prime) fixed[base.arc_index(a.tail, a.head)] = 1;

    std::vector<int> phi(arcs.size(), -1);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (fixed[i]) phi[i] = static_cast<int>(i);

    for (const auto& entry : j["phi"]) {
        if (!entry.is_array() || entry.size() != 2)
            fail(ErrorKind::ParseError, "phi entry must be a [[u,v],[x,y]] pair");
        Arc from = arc_from_json(entry[0], base, "phi source");
        Arc to = arc_from_json(entry[1], base, "phi image");
        int fi = base.arc_index(from.tail, from.head);
        int ti = base.arc_index(to.tail, to.head);
        if (fi < 0 || ti < 0)
            fail(ErrorKind::InvalidArgument, "phi entry references a non-arc");
        if (fixed[fi]) {
            if (ti != fi)
                fail(ErrorKind::PhiNotFixing,
                     "phi must fix a_prime member (" + std::to_string(from.tail + 1) + "," +
                         std::to_string(from.head + 1) + ")");
            continue;
        }
        phi[fi] = ti;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (phi[i] < 0)
            fail(ErrorKind::InvalidArgument,
                 "phi missing for arc (" + std::to_string(arcs[i].tail + 1) + "," +
                     std::to_string(arcs[i].head + 1) + ")");
    return validate_pld(base, a_prime, phi);
}

std::string labeled_pld_json(const LabeledPld& pld, bool include_map) {
    ordered_json j;
    j["vertices"] = pld.digraph.vertex_count();
    j["arcs"] = arcs_json(pld.digraph.arcs());
    ordered_json labels = ordered_json::array();
    for (const Arc& a : pld.labels) labels.push_back(arc_pair(a));
    j["labels"] = labels;
    if (include_map) j["map"] = map_json(pld.source);
    return j.dump();
}

std::string set_family_json(const SetFamily& family) {
    ordered_json j = ordered_json::array();
    for (const VertexSet& s : family) {
        ordered_json row = ordered_json::array();
        for (int v : s) row.push_back(v + 1);
        j.push_back(row);
    }
    return j.dump();
}

std::string grundy_labeling_json(const GrundyLabeling& g) {
    ordered_json j = ordered_json::object();
    for (std::size_t v = 0; v < g.size(); ++v) j[std::to_string(v + 1)] = g[v];
    return j.dump();
}

}  // namespace pldig
