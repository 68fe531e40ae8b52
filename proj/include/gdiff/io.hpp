// Group-spec mini-language ("2:2;3:1"), line-oriented graph files and DOT
// export. Reading a canonical file and writing it back is byte-identical.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "graph.hpp"
#include "group_graphs.hpp"

namespace gdiff {

struct parse_error : group_error {
    using group_error::group_error;
};

// "p:r1,r2,...;q:t1,t2,..." -> canonical GroupSpec
inline GroupSpec parse_group_spec(const std::string& text) {
    auto parse_side = [&](const std::string& part, std::size_t offset) {
        std::size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw parse_error("group spec: missing ':' at position " + std::to_string(offset));
        std::int64_t prime = 0;
        std::vector<int> exps;
        try {
            std::size_t used = 0;
            prime = std::stoll(part.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("");
            std::string rest = part.substr(colon + 1);
            std::istringstream is(rest);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                exps.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument("");
            }
            if (rest.empty() || rest.back() == ',') throw std::invalid_argument("");
        } catch (const std::logic_error&) {
            throw parse_error("group spec: bad number near position " + std::to_string(offset));
        }
        return SylowSpec(prime, exps);
    };
    std::size_t semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw parse_error("group spec: expected exactly one ';'");
    return GroupSpec(parse_side(text.substr(0, semi), 0),
                     parse_side(text.substr(semi + 1), semi + 1));
}

inline std::string format_sylow_spec(const SylowSpec& s) {
    std::ostringstream os;
    os << s.prime << ":";
    for (std::size_t i = 0; i < s.exponents.size(); ++i)
        os << (i ? "," : "") << s.exponents[i];
    return os.str();
}

inline std::string format_group_spec(const GroupSpec& g) {
    return format_sylow_spec(g.sylow_a) + ";" + format_sylow_spec(g.sylow_b);
}

// Line-oriented graph document. Canonical layout:
//   gdiff-graph 1
//   directed 0
//   vertices N
//   edges M
//   <u> <v>          (sorted, u < v for undirected graphs)
//   label <v> <coordsA>;<coordsB>   (optional, ascending v)
//   spec <text>                      (optional)
struct GraphFile {
    int version = 1;
    bool directed = false;
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> labels;
    std::optional<std::string> spec;
};

inline std::string format_label(const GroupElement& e) {
    auto join = [](const std::vector<std::int64_t>& c) {
        std::ostringstream os;
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        return os.str();
    };
    return join(e.coords_a) + ";" + join(e.coords_b);
}

inline std::string write_graph(const GraphFile& f) {
    std::ostringstream os;
    os << "gdiff-graph " << f.version << "\n";
    os << "directed " << (f.directed ? 1 : 0) << "\n";
    os << "vertices " << f.vertex_count << "\n";
    os << "edges " << f.edges.size() << "\n";
    for (const auto& [u, v] : f.edges) os << u << " " << v << "\n";
    for (const auto& [v, lab] : f.labels) os << "label " << v << " " << lab << "\n";
    if (f.spec) os << "spec " << *f.spec << "\n";
    return os.str();
}

inline GraphFile read_graph(const std::string& text) {
    GraphFile f;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto bad = [&](const std::string& why) {
        throw parse_error("graph file line " + std::to_string(lineno) + ": " + why);
    };
    auto next = [&](const char* what) {
        if (!std::getline(is, line)) bad(std::string("expected ") + what);
        ++lineno;
        return line;
    };
    {
        std::istringstream ls(next("header"));
        std::string magic;
        if (!(ls >> magic >> f.version) || magic != "gdiff-graph" || f.version != 1)
            bad("bad header");
    }
    int dir = 0;
    {
        std::istringstream ls(next("directed flag"));
        std::string key;
        if (!(ls >> key >> dir) || key != "directed" || (dir != 0 && dir != 1))
            bad("bad directed flag");
        f.directed = dir == 1;
    }
    {
        std::istringstream ls(next("vertex count"));
        std::string key;
        if (!(ls >> key >> f.vertex_count) || key != "vertices" || f.vertex_count < 0)
            bad("bad vertex count");
    }
    std::size_t edge_count = 0;
    {
        std::istringstream ls(next("edge count"));
        std::string key;
        if (!(ls >> key >> edge_count) || key != "edges") bad("bad edge count");
    }
    for (std::size_t i = 0; i < edge_count; ++i) {
        std::istringstream ls(next("edge"));
        int u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) bad("bad edge line");
        if (u < 0 || v < 0 || u >= f.vertex_count || v >= f.vertex_count)
            bad("edge endpoint out of range");
        if (u == v) bad("loop edge");
        if (!f.directed && u > v) bad("undirected edge must have u < v");
        if (!f.edges.empty() && !(f.edges.back() < std::make_pair(u, v)))
            bad("edges out of order or duplicated");
        f.edges.emplace_back(u, v);
    }
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "label") {
            int v = -1;
            std::string lab;
            if (!(ls >> v >> lab)) bad("bad label line");
            if (v < 0 || v >= f.vertex_count) bad("label vertex out of range");
            if (f.labels.count(v)) bad("duplicate label");
            f.labels[v] = lab;
        } else if (key == "spec") {
            std::string rest;
            if (!(ls >> rest)) bad("bad spec line");
            if (f.spec) bad("duplicate spec");
            f.spec = rest;
        } else {
            bad("unknown section '" + key + "'");
        }
    }
    return f;
}

inline GraphFile to_graph_file(const SimpleGraph& g) {
    GraphFile f;
    f.vertex_count = g.vertex_count();
    f.edges = g.edges();
    return f;
}

inline GraphFile to_graph_file(const LabeledDiffGraph& L) {
    GraphFile f = to_graph_file(L.graph);
    for (std::size_t v = 0; v < L.labels.size(); ++v)
        f.labels[static_cast<int>(v)] = format_label(L.labels[v]);
    f.spec = format_group_spec(L.spec);
    return f;
}

inline GraphFile to_graph_file(const DirectedGraph& g) {
    GraphFile f;
    f.directed = true;
    f.vertex_count = g.vertex_count();
    f.edges = g.arcs();
    return f;
}

inline SimpleGraph graph_from_file(const GraphFile& f) {
    if (f.directed) throw parse_error("expected an undirected graph");
    SimpleGraph g(f.vertex_count);
    for (const auto& [u, v] : f.edges) g.add_edge(u, v);
    return g;
}

// DOT text; deterministic across runs.
inline std::string export_dot(const GraphFile& f) {
    std::ostringstream os;
    os << (f.directed ? "digraph" : "graph") << " G {\n";
    for (int v = 0; v < f.vertex_count; ++v) {
        os << "  " << v;
        auto it = f.labels.find(v);
        if (it != f.labels.end()) os << " [label=\"" << it->second << "\"]";
        os << ";\n";
    }
    const char* sep = f.directed ? " -> " : " -- ";
    for (const auto& [u, v] : f.edges) os << "  " << u << sep << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gdiff
