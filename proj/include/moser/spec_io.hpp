#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "moser/digraph.hpp"
#include "moser/error.hpp"
#include "moser/group.hpp"

namespace moser {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw Error("");
        return v;
    } catch (...) {
        throw Error("expected an integer for " + what + ", got '" + s + "'");
    }
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(part, what));
    return out;
}

}  // namespace detail

// Cayley-table file: line 1 holds the order n, lines 2..n+1 hold n
// space-separated element indices (row i = mul(i, .)), then optional
// trailing label lines of the form "# i name".
inline FiniteGroup load_group_table(std::istream& in, const std::string& name = "table") {
    std::string line;
    int n = -1;
    std::vector<int> table;
    std::vector<std::string> labels;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            int idx;
            std::string lab;
            if (!(ls >> idx >> lab)) throw Error(name + ": malformed label line '" + line + "'");
            if (n < 0 || idx < 0 || idx >= n) throw Error(name + ": label index out of range in '" + line + "'");
            if (labels.empty()) labels.assign(size_t(n), "");
            labels[size_t(idx)] = lab;
            continue;
        }
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n <= 0) throw Error(name + ": first line must be a positive order");
            table.reserve(size_t(n) * n);
            continue;
        }
        if (rows >= n) throw Error(name + ": more than " + std::to_string(n) + " table rows");
        int x;
        int cols = 0;
        while (ls >> x) {
            table.push_back(x);
            ++cols;
        }
        if (cols != n) throw Error(name + ": row " + std::to_string(rows) + " has " + std::to_string(cols) +
                                   " entries, expected " + std::to_string(n));
        ++rows;
    }
    if (n < 0) throw Error(name + ": empty table file");
    if (rows != n) throw Error(name + ": got " + std::to_string(rows) + " rows, expected " + std::to_string(n));
    return FiniteGroup::from_table(n, std::move(table), std::move(labels), name);
}

// Group spec DSL: Zn | Dn | Sn | Q8 | AxB (direct product, left
// associative) | table:PATH. Product components must be family specs.
inline FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) {
        std::string path = spec.substr(6);
        std::ifstream in(path);
        if (!in) throw Error("cannot open table file '" + path + "'");
        return load_group_table(in, spec);
    }
    if (spec.find('x') != std::string::npos) {
        auto parts = detail::split(spec, 'x');
        FiniteGroup g = parse_group_spec(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i) g = FiniteGroup::direct_product(g, parse_group_spec(parts[i]));
        return g;
    }
    if (spec == "Q8") return FiniteGroup::quaternion8();
    if (spec.size() >= 2 && (spec[0] == 'Z' || spec[0] == 'D' || spec[0] == 'S')) {
        int n = detail::parse_int(spec.substr(1), "group family parameter");
        if (spec[0] == 'Z') return FiniteGroup::cyclic(n);
        if (spec[0] == 'D') return FiniteGroup::dihedral(n);
        return FiniteGroup::symmetric(n);
    }
    throw Error("unsupported group spec '" + spec + "' (expected Zn, Dn, Sn, Q8, AxB or table:PATH)");
}

// Edge-list file: first line n, then one "u v" pair per line, 0-based.
inline Digraph load_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n <= 0) throw Error("edge list: first line must be a positive vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw Error("edge list: malformed line '" + line + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw Error("edge list: empty file");
    return Digraph(n, edges);
}

// A parsed graph plus whatever group structure came with it. Cayley-built
// graphs carry their translations as a transitivity hint and keep the
// group and connection set around for the Cayley-side cross-checks.
struct LoadedGraph {
    Digraph graph;
    std::string spec;
    std::optional<FiniteGroup> group;
    std::optional<VertexSet> connection;
    std::optional<std::vector<std::vector<int>>> hint;
};

// Specs are re-canonicalized from the actual connection set so instance
// keys always name the graph that was really used.
inline LoadedGraph make_cayley_loaded(FiniteGroup g, const std::vector<int>& connection, bool circulant_form) {
    VertexSet s(g.order());
    for (int x : connection) {
        if (x < 0 || x >= g.order())
            throw Error("connection element " + std::to_string(x) + " out of range for " + g.name());
        s.insert(x);
    }
    LoadedGraph lg;
    lg.graph = cayley_graph(g, s);
    lg.spec = circulant_form ? "circulant:" + std::to_string(g.order()) + ":" + s.to_string()
                             : "cayley:" + g.name() + ":" + s.to_string();
    lg.hint = left_translations(g);
    lg.group = std::move(g);
    lg.connection = std::move(s);
    return lg;
}

// Graph spec DSL: circulant:n:s1,s2,... | cayley:GROUPSPEC:s1,... |
// file:PATH. With apply_reflexive_closure the loaded graph gets a loop at
// every vertex (for Cayley specs, by inserting the identity into S, so the
// group structure stays usable).
inline LoadedGraph parse_graph_spec(const std::string& spec, bool apply_reflexive_closure = false) {
    LoadedGraph lg;
    if (spec.rfind("circulant:", 0) == 0) {
        auto parts = detail::split(spec, ':');
        if (parts.size() != 3) throw Error("circulant spec must be circulant:n:s1,s2,...");
        int n = detail::parse_int(parts[1], "circulant order");
        auto conn = detail::parse_int_list(parts[2], "circulant connection set");
        if (apply_reflexive_closure) conn.push_back(0);
        lg = make_cayley_loaded(FiniteGroup::cyclic(n), conn, true);
    } else if (spec.rfind("cayley:", 0) == 0) {
        std::string rest = spec.substr(7);
        size_t cut = rest.rfind(':');
        if (cut == std::string::npos) throw Error("cayley spec must be cayley:GROUPSPEC:s1,s2,...");
        auto conn = detail::parse_int_list(rest.substr(cut + 1), "cayley connection set");
        FiniteGroup g = parse_group_spec(rest.substr(0, cut));
        if (apply_reflexive_closure) conn.push_back(g.identity());
        lg = make_cayley_loaded(std::move(g), conn, false);
    } else if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw Error("cannot open edge-list file '" + path + "'");
        lg.graph = load_edge_list(in);
        lg.spec = spec;
        if (apply_reflexive_closure) lg.graph = reflexive_closure(lg.graph);
    } else {
        throw Error("unsupported graph spec '" + spec + "' (expected circulant:..., cayley:... or file:PATH)");
    }
    return lg;
}

}  // namespace moser
