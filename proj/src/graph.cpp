#include "ivif/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>
#include <utility>

namespace ivif {

GraphSpec::GraphSpec(std::size_t node_count, std::vector<Edge> edges, std::string label)
    : node_count_(node_count), edges_(std::move(edges)), label_(std::move(label)) {
    if (node_count_ == 0)
        throw ValidationError("graph needs at least one node");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Edge& e : edges_) {
        if (e.u < 1 || e.u > node_count_ || e.v < 1 || e.v > node_count_)
            throw ValidationError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") uses node ids outside 1.." + std::to_string(node_count_));
        if (e.u == e.v)
            throw ValidationError("self-loop on node " + std::to_string(e.u));
        if (!seen.insert(std::minmax(e.u, e.v)).second)
            throw ValidationError("duplicate edge between nodes " + std::to_string(e.u) +
                                  " and " + std::to_string(e.v));
        // throws ValidationError when the interval pair is inconsistent
        (void)Value(e.crowdness, e.loneliness);
    }
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r')
            out += c;
    return out;
}

std::size_t parse_id(std::string_view field, std::size_t line) {
    field = trim(field);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size())
        throw ParseError("'" + std::string(field) + "' is not a node id", line);
    return value;
}

double parse_bound(std::string_view field, std::size_t line) {
    field = trim(field);
    double value = 0.0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size())
        throw ParseError("'" + std::string(field) + "' is not a number", line);
    return value;
}

std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        if (comma == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, comma));
        s.remove_prefix(comma + 1);
    }
}

constexpr std::string_view kHeader = "u,v,mu_lo,mu_hi,nu_lo,nu_hi";

} // namespace

GraphSpec parse_graph(std::string_view text) {
    std::size_t node_count = 0;
    bool have_count = false;
    bool have_header = false;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;

        if (!have_count) {
            const std::string flat = strip_spaces(line);
            if (flat.rfind("n=", 0) != 0)
                throw ParseError("expected the node count as n=<count>", line_no);
            node_count = parse_id(std::string_view(flat).substr(2), line_no);
            have_count = true;
            continue;
        }
        if (!have_header) {
            if (strip_spaces(line) != kHeader)
                throw ParseError("expected the header " + std::string(kHeader), line_no);
            have_header = true;
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != 6)
            throw ParseError("expected 6 comma-separated fields, got " +
                             std::to_string(fields.size()), line_no);
        edges.push_back(Edge{parse_id(fields[0], line_no), parse_id(fields[1], line_no),
                             UnitInterval(parse_bound(fields[2], line_no),
                                          parse_bound(fields[3], line_no)),
                             UnitInterval(parse_bound(fields[4], line_no),
                                          parse_bound(fields[5], line_no))});
    }

    if (!have_count)
        throw ParseError("missing the n=<count> line");
    if (!have_header)
        throw ParseError("missing the header " + std::string(kHeader));
    return GraphSpec(node_count, std::move(edges));
}

Matrix build_matrix(const GraphSpec& g) {
    const std::size_t n = g.node_count();
    std::vector<Value> cells(n * n, Value::bottom());
    for (const Edge& e : g.edges()) {
        const Value v(e.crowdness, e.loneliness);
        cells[(e.u - 1) * n + (e.v - 1)] = v;
        cells[(e.v - 1) * n + (e.u - 1)] = v;
    }
    return Matrix(n, n, std::move(cells));
}

} // namespace ivif
