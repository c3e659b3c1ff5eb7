#include "cg/io.hpp"

#include <sstream>

namespace cg {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

ParseResult parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (!(ls >> n >> m) || n < 0 || m < 0)
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected header \"n m\"");
        break;
    }
    if (n < 0) throw ParseError("edge list: missing header line \"n m\"");
    GraphBuilder b(int(n));
    std::vector<std::string> warnings;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        long long u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list line " + std::to_string(lineno) + ": vertex out of range");
        if (u == v)
            throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop rejected");
        ++seen;
        if (b.has_edge(int(u), int(v))) {
            warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge " + std::to_string(u) + " " + std::to_string(v) + " (deduped)");
            continue;
        }
        b.add_edge(int(u), int(v));
    }
    if (seen != m)
        warnings.push_back("header announced " + std::to_string(m) + " edges, file contains " + std::to_string(seen));
    return ParseResult{b.build(), std::move(warnings)};
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
    return out.str();
}

ParseResult parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    GraphBuilder b(0);
    std::vector<std::string> warnings;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> n >> m) || fmt != "edge" || n < 0)
                throw ParseError("dimacs line " + std::to_string(lineno) + ": expected \"p edge n m\"");
            b = GraphBuilder(int(n));
            have_header = true;
        } else if (line[0] == 'e') {
            if (!have_header) throw ParseError("dimacs: edge before problem line");
            std::string e;
            long long u, v;
            if (!(ls >> e >> u >> v))
                throw ParseError("dimacs line " + std::to_string(lineno) + ": expected \"e u v\"");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("dimacs line " + std::to_string(lineno) + ": vertex out of range (1-indexed)");
            if (u == v)
                throw ParseError("dimacs line " + std::to_string(lineno) + ": self-loop rejected");
            if (b.has_edge(int(u - 1), int(v - 1))) {
                warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge (deduped)");
                continue;
            }
            b.add_edge(int(u - 1), int(v - 1));
        } else if (!blank_or_comment(line)) {
            throw ParseError("dimacs line " + std::to_string(lineno) + ": unrecognized record");
        }
    }
    if (!have_header) throw ParseError("dimacs: missing \"p edge\" line");
    return ParseResult{b.build(), std::move(warnings)};
}

}  // namespace cg
