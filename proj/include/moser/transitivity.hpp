#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "moser/digraph.hpp"
#include "moser/error.hpp"

namespace moser {

// Evidence of vertex-transitivity: one automorphism per vertex v, mapping
// the base vertex (index 0) to v. Any ordered pair (x,y) is then covered
// by composing maps[y] with the inverse of maps[x]. maps[0] is the
// identity permutation. Asserted certificates carry no maps and are only
// as good as the caller's word.
struct TransitivityCertificate {
    enum class Kind { CayleyTranslations, AutomorphismSearch, Asserted };

    Kind kind = Kind::Asserted;
    int base = 0;
    std::vector<std::vector<int>> maps;

    static TransitivityCertificate asserted() { return {}; }

    const char* kind_name() const {
        switch (kind) {
            case Kind::CayleyTranslations: return "cayley-translations";
            case Kind::AutomorphismSearch: return "automorphism-search";
            default: return "asserted";
        }
    }
};

// Exact automorphism test: p must be a bijection with p(out(x)) == out(p(x))
// for every vertex, which for bijections also forces non-edges onto
// non-edges.
inline bool is_automorphism(const Digraph& g, const std::vector<int>& p) {
    int n = g.order();
    if (int(p.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = 1;
    }
    for (int x = 0; x < n; ++x) {
        VertexSet img(n);
        g.out_set(x).for_each([&](int y) { img.insert(p[y]); });
        if (img != g.out_set(p[x])) return false;
    }
    return true;
}

inline std::vector<int> apply_permutation(const std::vector<int>& p, const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.size());
    s.for_each([&](int x) { out.push_back(p[x]); });
    return out;
}

inline VertexSet permute_set(const std::vector<int>& p, const VertexSet& s) {
    VertexSet r(s.universe());
    s.for_each([&](int x) { r.insert(p[x]); });
    return r;
}

namespace detail {

// Backtracking search for an automorphism with p[0] = target, pruned by
// (out-degree, in-degree, loop) signatures and incremental edge
// consistency against everything already assigned.
class AutomorphismSearch {
  public:
    explicit AutomorphismSearch(const Digraph& g) : g_(g), n_(g.order()) {
        order_ = bfs_order();
        sig_.resize(n_);
        for (int v = 0; v < n_; ++v) sig_[v] = signature(v);
    }

    std::optional<std::vector<int>> mapping_base_to(int target) {
        if (sig_[0] != sig_[target]) return std::nullopt;
        p_.assign(n_, -1);
        used_.assign(n_, 0);
        p_[0] = target;
        used_[target] = 1;
        assigned_ = {0};
        if (extend(1)) return p_;
        return std::nullopt;
    }

  private:
    const Digraph& g_;
    int n_;
    std::vector<int> order_;
    std::vector<std::tuple<int, int, bool>> sig_;
    std::vector<int> p_;
    std::vector<char> used_;
    std::vector<int> assigned_;

    std::tuple<int, int, bool> signature(int v) const {
        return {g_.out_degree(v), g_.in_degree(v), g_.has_loop(v)};
    }

    // BFS over the underlying undirected structure from vertex 0 so each
    // new vertex tends to touch already-assigned ones; leftovers from other
    // components are appended in index order.
    std::vector<int> bfs_order() const {
        std::vector<int> ord;
        std::vector<char> seen(n_, 0);
        std::vector<int> queue;
        for (int root = 0; root < n_; ++root) {
            if (seen[root]) continue;
            seen[root] = 1;
            queue.push_back(root);
            size_t head = ord.size();
            ord.push_back(root);
            while (head < ord.size()) {
                int u = ord[head++];
                auto visit = [&](int w) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        ord.push_back(w);
                    }
                };
                for (int w : g_.out(u)) visit(w);
                for (int w : g_.in(u)) visit(w);
            }
        }
        return ord;
    }

    bool consistent(int u, int cand) const {
        for (int a : assigned_) {
            if (g_.has_edge(u, a) != g_.has_edge(cand, p_[a])) return false;
            if (g_.has_edge(a, u) != g_.has_edge(p_[a], cand)) return false;
        }
        return g_.has_edge(u, u) == g_.has_edge(cand, cand);
    }

    bool extend(size_t depth) {
        if (depth == order_.size()) return true;
        int u = order_[depth];
        if (u == 0) return extend(depth + 1);  // base already pinned
        for (int cand = 0; cand < n_; ++cand) {
            if (used_[cand] || sig_[u] != sig_[cand]) continue;
            if (!consistent(u, cand)) continue;
            p_[u] = cand;
            used_[cand] = 1;
            assigned_.push_back(u);
            if (extend(depth + 1)) return true;
            assigned_.pop_back();
            used_[cand] = 0;
            p_[u] = -1;
        }
        return false;
    }
};

}  // namespace detail

// Certifies vertex-transitivity. A verified hint (e.g. the left
// translations of a Cayley graph) short-circuits the search; otherwise a
// backtracking automorphism search runs, capped by default at 64 vertices.
// Returns nullopt when the graph is definitively not vertex-transitive.
inline std::optional<TransitivityCertificate> certify_transitivity(
    const Digraph& g, const std::vector<std::vector<int>>* hint = nullptr, int search_cap = 64) {
    int n = g.order();

    if (hint) {
        bool ok = int(hint->size()) >= 1;
        std::vector<char> covered(n, 0);
        if (ok) {
            for (const auto& p : *hint) {
                if (!is_automorphism(g, p)) {
                    ok = false;
                    break;
                }
                covered[p[0]] = 1;
            }
        }
        if (ok && std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) {
            TransitivityCertificate cert;
            cert.kind = TransitivityCertificate::Kind::CayleyTranslations;
            cert.maps.assign(n, {});
            for (const auto& p : *hint) cert.maps[p[0]] = p;
            return cert;
        }
        // Hint failed verification; fall through to the search.
    }

    if (n > search_cap)
        throw Error("certify_transitivity: " + std::to_string(n) + " vertices exceeds the search cap of " +
                    std::to_string(search_cap) + " and no usable hint was given");

    // Regularity is necessary; gives a fast definitive no.
    for (int v = 1; v < n; ++v) {
        if (g.out_degree(v) != g.out_degree(0) || g.in_degree(v) != g.in_degree(0)) return std::nullopt;
    }

    TransitivityCertificate cert;
    cert.kind = TransitivityCertificate::Kind::AutomorphismSearch;
    cert.maps.assign(n, {});
    cert.maps[0].resize(n);
    std::iota(cert.maps[0].begin(), cert.maps[0].end(), 0);
    detail::AutomorphismSearch search(g);
    for (int v = 1; v < n; ++v) {
        auto p = search.mapping_base_to(v);
        if (!p) return std::nullopt;
        cert.maps[v] = std::move(*p);
    }
    return cert;
}

}  // namespace moser
