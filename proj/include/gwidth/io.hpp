#ifndef GWIDTH_IO_HPP
#define GWIDTH_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "gwidth/building_set.hpp"
#include "gwidth/errors.hpp"
#include "gwidth/graph.hpp"
#include "gwidth/rational.hpp"
#include "gwidth/subset.hpp"

namespace gwidth {
namespace io {

namespace detail {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Tokenized non-blank lines; '#' starts a comment; blank lines survive as
// empty token lists so callers can split blocks on them.
inline std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line line;
        line.number = number;
        std::istringstream ss(raw);
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        out.push_back(std::move(line));
    }
    return out;
}

inline long long parse_int(const std::string& tok, int line, int column) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": expected an integer, got '" + tok + "'");
    }
}

} // namespace detail

// Graph file: blocks separated by blank lines; each block starts with the
// vertex count, followed by one "u v" edge per line.
inline std::vector<Graph> parse_graphs(std::istream& in) {
    auto lines = detail::tokenize(in);
    std::vector<Graph> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        while (i < lines.size() && lines[i].tokens.empty()) ++i;
        if (i == lines.size()) break;
        const auto& head = lines[i];
        if (head.tokens.size() != 1)
            throw InputError("line " + std::to_string(head.number) +
                             ": expected a single vertex count to start a graph");
        long long n = detail::parse_int(head.tokens[0], head.number, 1);
        if (n < 1 || n > kMaxGroundSize)
            throw InputError("line " + std::to_string(head.number) +
                             ": vertex count out of range");
        Graph g(static_cast<int>(n));
        ++i;
        while (i < lines.size() && !lines[i].tokens.empty()) {
            const auto& row = lines[i];
            if (row.tokens.size() != 2)
                throw InputError("line " + std::to_string(row.number) +
                                 ": expected an edge 'u v'");
            long long u = detail::parse_int(row.tokens[0], row.number, 1);
            long long v = detail::parse_int(row.tokens[1], row.number, 2);
            try {
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
            } catch (const InputError& e) {
                throw InputError("line " + std::to_string(row.number) + ": " + e.what());
            }
            ++i;
        }
        out.push_back(std::move(g));
    }
    if (out.empty()) throw InputError("no graphs found in input");
    return out;
}

inline std::vector<Graph> parse_graphs_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_graphs(ss);
}

// Building-set file: ground size on the first line, then one member per line
// as space-separated vertex labels.
inline BuildingSet parse_building_set(std::istream& in) {
    auto lines = detail::tokenize(in);
    std::size_t i = 0;
    while (i < lines.size() && lines[i].tokens.empty()) ++i;
    if (i == lines.size()) throw InputError("no building set found in input");
    const auto& head = lines[i];
    if (head.tokens.size() != 1)
        throw InputError("line " + std::to_string(head.number) +
                         ": expected a single ground size");
    long long ground = detail::parse_int(head.tokens[0], head.number, 1);
    if (ground < 1 || ground > kMaxGroundSize)
        throw InputError("line " + std::to_string(head.number) + ": ground size out of range");
    std::vector<Subset> members;
    for (++i; i < lines.size(); ++i) {
        if (lines[i].tokens.empty()) continue;
        Subset m = 0;
        for (std::size_t col = 0; col < lines[i].tokens.size(); ++col) {
            long long v =
                detail::parse_int(lines[i].tokens[col], lines[i].number,
                                  static_cast<int>(col) + 1);
            if (v < 1 || v > ground)
                throw InputError("line " + std::to_string(lines[i].number) + ": vertex " +
                                 std::to_string(v) + " outside the ground set");
            m |= singleton(static_cast<int>(v));
        }
        members.push_back(m);
    }
    return BuildingSet(static_cast<int>(ground), std::move(members));
}

inline BuildingSet parse_building_set_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_building_set(ss);
}

// Comma- or whitespace-separated exact rationals ("p" or "p/q").
inline std::vector<Rational> parse_values(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream ss(normalized);
    std::vector<Rational> out;
    std::string tok;
    while (ss >> tok) out.push_back(parse_rational(tok));
    if (out.empty()) throw InputError("no values given");
    return out;
}

// The same shape parse_graphs reads back.
inline std::string graph_to_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edge_list())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace io
} // namespace gwidth

#endif // GWIDTH_IO_HPP
