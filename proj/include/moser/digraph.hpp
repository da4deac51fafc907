#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "moser/error.hpp"
#include "moser/vertex_set.hpp"

namespace moser {

// Finite directed relation. Loops are ordinary edges, kept explicitly in
// the adjacency, which lets the boundary operators below work with no
// special cases. Immutable once constructed; the in-adjacency is the exact
// transpose of the out-adjacency.
class Digraph {
  public:
    Digraph() : n_(0), reflexive_(false) {}

    Digraph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : n_(vertex_count) {
        if (vertex_count <= 0) throw Error("Digraph: vertex count must be positive");
        out_.assign(n_, {});
        in_.assign(n_, {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw Error("Digraph: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            out_[u].push_back(v);
        }
        for (auto& row : out_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
        for (int u = 0; u < n_; ++u) {
            for (int v : out_[u]) in_[v].push_back(u);
        }
        out_mask_.assign(n_, VertexSet(n_));
        in_mask_.assign(n_, VertexSet(n_));
        for (int u = 0; u < n_; ++u) {
            for (int v : out_[u]) {
                out_mask_[u].insert(v);
                in_mask_[v].insert(u);
            }
        }
        reflexive_ = true;
        for (int u = 0; u < n_; ++u) {
            if (!out_mask_[u].contains(u)) {
                reflexive_ = false;
                break;
            }
        }
    }

    int order() const { return n_; }

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    const VertexSet& out_set(int v) const { return out_mask_[v]; }
    const VertexSet& in_set(int v) const { return in_mask_[v]; }

    int out_degree(int v) const { return int(out_[v].size()); }
    int in_degree(int v) const { return int(in_[v].size()); }

    bool has_edge(int u, int v) const { return out_mask_[u].contains(v); }
    bool has_loop(int v) const { return out_mask_[v].contains(v); }

    bool reflexive() const { return reflexive_; }

    bool loopless() const {
        for (int v = 0; v < n_; ++v) {
            if (has_loop(v)) return false;
        }
        return true;
    }

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += out_degree(v);
        return m;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(edge_count());
        for (int u = 0; u < n_; ++u) {
            for (int v : out_[u]) es.emplace_back(u, v);
        }
        return es;
    }

    Digraph transpose() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(edge_count());
        for (int u = 0; u < n_; ++u) {
            for (int v : out_[u]) es.emplace_back(v, u);
        }
        return Digraph(n_, es);
    }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }
    bool operator!=(const Digraph& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<VertexSet> out_mask_, in_mask_;
    bool reflexive_;
};

// Image of F under the relation: union of out-neighborhoods.
inline VertexSet image(const Digraph& g, const VertexSet& F) {
    VertexSet r(g.order());
    F.for_each([&](int v) { r |= g.out_set(v); });
    return r;
}

// Image under the transposed relation.
inline VertexSet preimage(const Digraph& g, const VertexSet& F) {
    VertexSet r(g.order());
    F.for_each([&](int v) { r |= g.in_set(v); });
    return r;
}

// Boundary: image(F) \ F.
inline VertexSet boundary(const Digraph& g, const VertexSet& F) {
    return image(g, F) - F;
}

// Exterior: everything outside F and its image. F, boundary(F) and
// exterior(F) always partition the vertex set.
inline VertexSet exterior(const Digraph& g, const VertexSet& F) {
    return (F | image(g, F)).complement();
}

// The transposed boundary operator: preimage(F) \ F.
inline VertexSet neg_boundary(const Digraph& g, const VertexSet& F) {
    return preimage(g, F) - F;
}

// Adds a loop at every vertex. Idempotent; boundary values of every set
// are unchanged because only loops are added.
inline Digraph reflexive_closure(const Digraph& g) {
    if (g.reflexive()) return g;
    auto es = g.edges();
    for (int v = 0; v < g.order(); ++v) es.emplace_back(v, v);
    return Digraph(g.order(), es);
}

struct InducedSubgraph {
    Digraph graph;
    std::vector<int> vertices;  // vertices[i] = original index of new vertex i
};

// Subgraph induced on X, re-indexed to 0..|X|-1 in ascending original order.
inline InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& X) {
    if (X.empty()) throw Error("induced_subgraph: empty vertex set");
    std::vector<int> verts = X.members();
    std::vector<int> to_new(g.order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = int(i);
    std::vector<std::pair<int, int>> es;
    for (int u : verts) {
        for (int v : g.out(u)) {
            if (to_new[v] >= 0) es.emplace_back(to_new[u], to_new[v]);
        }
    }
    return {Digraph(int(verts.size()), es), std::move(verts)};
}

// Vertices reachable from v along out-edges (v included).
inline VertexSet reachable_set(const Digraph& g, int v) {
    VertexSet seen(g.order());
    seen.insert(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.out(u)) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

// Weak connectivity in the undirected sense (edge direction ignored);
// disconnected inputs are legal everywhere but get flagged in reports.
inline bool weakly_connected(const Digraph& g) {
    VertexSet seen(g.order());
    seen.insert(0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        auto visit = [&](int w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        };
        for (int w : g.out(u)) visit(w);
        for (int w : g.in(u)) visit(w);
    }
    return seen.size() == g.order();
}

}  // namespace moser
