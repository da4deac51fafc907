#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "moser/digraph.hpp"
#include "moser/error.hpp"
#include "moser/rng.hpp"
#include "moser/vertex_set.hpp"

namespace moser {

// Finite group as a validated Cayley multiplication table over dense
// element indices 0..order-1, identity always at index 0. Construction
// checks the group axioms: corrupt tables must fail loudly rather than
// poison a sweep. Associativity is exhaustive up to order 64 and sampled
// (10,000 deterministic triples) above.
class FiniteGroup {
  public:
    static constexpr int kExhaustiveAssocCap = 64;

    static FiniteGroup cyclic(int n) {
        if (n < 1) throw Error("cyclic(n): n must be >= 1");
        std::vector<int> t(size_t(n) * n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) t[size_t(a) * n + b] = (a + b) % n;
        }
        return FiniteGroup(n, std::move(t), {}, "Z" + std::to_string(n));
    }

    // Elements s*n+k encode f^s r^k; r^k f = f r^{-k}.
    static FiniteGroup dihedral(int n) {
        if (n < 2) throw Error("dihedral(n): n must be >= 2");
        int order = 2 * n;
        std::vector<int> t(size_t(order) * order);
        for (int x = 0; x < order; ++x) {
            for (int y = 0; y < order; ++y) {
                int s1 = x / n, k1 = x % n;
                int s2 = y / n, k2 = y % n;
                int s = (s1 + s2) % 2;
                int k = ((s2 ? n - k1 : k1) + k2) % n;
                t[size_t(x) * order + y] = s * n + k;
            }
        }
        std::vector<std::string> labels(order);
        for (int k = 0; k < n; ++k) {
            labels[k] = "r" + std::to_string(k);
            labels[n + k] = "f.r" + std::to_string(k);
        }
        return FiniteGroup(order, std::move(t), std::move(labels), "D" + std::to_string(n));
    }

    // Permutations of 0..n-1 in lexicographic order (identity first);
    // composition (p*q)(i) = p[q[i]].
    static FiniteGroup symmetric(int n) {
        if (n < 1 || n > 5) throw Error("symmetric(n): supported range is 1 <= n <= 5");
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        int order = int(perms.size());
        auto index_of = [&](const std::vector<int>& q) {
            return int(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        std::vector<int> t(size_t(order) * order);
        std::vector<int> comp(n);
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
                t[size_t(a) * order + b] = index_of(comp);
            }
        }
        std::vector<std::string> labels(order);
        for (int a = 0; a < order; ++a) {
            std::string s;
            for (int i = 0; i < n; ++i) s += char('0' + perms[a][i]);
            labels[a] = s;
        }
        return FiniteGroup(order, std::move(t), std::move(labels), "S" + std::to_string(n));
    }

    // Elements 2u+s encode (-1)^s * unit, units ordered 1,i,j,k.
    static FiniteGroup quaternion8() {
        static constexpr std::array<std::array<int, 4>, 4> unit = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
        static constexpr std::array<std::array<int, 4>, 4> sign = {{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
        int order = 8;
        std::vector<int> t(64);
        for (int x = 0; x < 8; ++x) {
            for (int y = 0; y < 8; ++y) {
                int u1 = x / 2, s1 = x % 2;
                int u2 = y / 2, s2 = y % 2;
                int u = unit[u1][u2];
                int s = (s1 + s2 + sign[u1][u2]) % 2;
                t[size_t(x) * 8 + y] = 2 * u + s;
            }
        }
        std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
        return FiniteGroup(order, std::move(t), std::move(labels), "Q8");
    }

    // Row-major pair indexing: (a,b) -> a*|H| + b.
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
        int order = g.order() * h.order();
        int m = h.order();
        std::vector<int> t(size_t(order) * order);
        for (int x = 0; x < order; ++x) {
            for (int y = 0; y < order; ++y) {
                int a = g.mul(x / m, y / m);
                int b = h.mul(x % m, y % m);
                t[size_t(x) * order + y] = a * m + b;
            }
        }
        std::vector<std::string> labels;
        if (!g.labels_.empty() || !h.labels_.empty()) {
            labels.resize(order);
            for (int x = 0; x < order; ++x) labels[x] = g.label(x / m) + "|" + h.label(x % m);
        }
        return FiniteGroup(order, std::move(t), std::move(labels), g.name() + "x" + h.name());
    }

    // Raw table constructor; relabels so the identity lands at index 0,
    // then validates the axioms.
    static FiniteGroup from_table(int order, std::vector<int> table, std::vector<std::string> labels = {},
                                  std::string name = "table") {
        return FiniteGroup(order, std::move(table), std::move(labels), std::move(name));
    }

    int order() const { return n_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& name() const { return name_; }

    std::string label(int a) const {
        if (!labels_.empty() && !labels_[a].empty()) return labels_[a];
        return std::to_string(a);
    }

    bool abelian() const {
        for (int a = 0; a < n_; ++a) {
            for (int b = a + 1; b < n_; ++b) {
                if (mul(a, b) != mul(b, a)) return false;
            }
        }
        return true;
    }

  private:
    int n_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::string name_;

    FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels, std::string name)
        : n_(order), mul_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
        if (n_ <= 0) throw Error(name_ + ": order must be positive");
        if (mul_.size() != size_t(n_) * n_) throw Error(name_ + ": table size != order^2");
        for (int v : mul_) {
            if (v < 0 || v >= n_) throw Error(name_ + ": table entry out of range");
        }
        move_identity_to_front();
        validate();
    }

    void move_identity_to_front() {
        int e = -1;
        for (int a = 0; a < n_ && e < 0; ++a) {
            bool neutral = true;
            for (int b = 0; b < n_; ++b) {
                if (mul(a, b) != b || mul(b, a) != b) {
                    neutral = false;
                    break;
                }
            }
            if (neutral) e = a;
        }
        if (e < 0) throw Error(name_ + ": no two-sided identity element");
        if (e == 0) return;
        // Relabel by the transposition 0 <-> e.
        auto rl = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
        std::vector<int> t(size_t(n_) * n_);
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) t[size_t(a) * n_ + b] = rl(mul(rl(a), rl(b)));
        }
        mul_ = std::move(t);
        if (!labels_.empty()) std::swap(labels_[0], labels_[size_t(e)]);
    }

    void validate() {
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                if (mul(a, b) == 0 && mul(b, a) == 0) {
                    inv_[a] = b;
                    break;
                }
            }
            if (inv_[a] < 0) throw Error(name_ + ": element " + std::to_string(a) + " has no two-sided inverse");
        }
        if (n_ <= kExhaustiveAssocCap) {
            for (int a = 0; a < n_; ++a) {
                for (int b = 0; b < n_; ++b) {
                    for (int c = 0; c < n_; ++c) {
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw Error(name_ + ": associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
                    }
                }
            }
        } else {
            SplitMix64 rng(0x517cc1b727220a95ull);
            for (int i = 0; i < 10000; ++i) {
                int a = int(rng.below(uint64_t(n_)));
                int b = int(rng.below(uint64_t(n_)));
                int c = int(rng.below(uint64_t(n_)));
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error(name_ + ": associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
            }
        }
    }
};

// Subset of a group's elements. The parent pointer identifies the group
// object; operations refuse to mix subsets of different parents.
struct GroupSubset {
    const FiniteGroup* group = nullptr;
    VertexSet members;

    GroupSubset() = default;
    GroupSubset(const FiniteGroup& g, VertexSet m) : group(&g), members(std::move(m)) {
        if (members.universe() != g.order()) throw Error("GroupSubset: universe != group order");
    }

    static GroupSubset of(const FiniteGroup& g, std::initializer_list<int> xs) {
        return GroupSubset(g, VertexSet::of(g.order(), xs));
    }

    int size() const { return members.size(); }
    bool operator==(const GroupSubset& o) const { return group == o.group && members == o.members; }
};

inline void require_same_group(const GroupSubset& a, const GroupSubset& b) {
    if (a.group == nullptr || a.group != b.group) throw Error("group subsets have different parent groups");
}

// Minkowski product {x*y : x in A, y in B}.
inline GroupSubset minkowski_product(const GroupSubset& a, const GroupSubset& b) {
    require_same_group(a, b);
    const FiniteGroup& g = *a.group;
    VertexSet r(g.order());
    a.members.for_each([&](int x) { b.members.for_each([&](int y) { r.insert(g.mul(x, y)); }); });
    return GroupSubset(g, std::move(r));
}

inline GroupSubset inverse_set(const GroupSubset& b) {
    const FiniteGroup& g = *b.group;
    VertexSet r(g.order());
    b.members.for_each([&](int y) { r.insert(g.inv(y)); });
    return GroupSubset(g, std::move(r));
}

inline GroupSubset left_translate(int c, const GroupSubset& b) {
    const FiniteGroup& g = *b.group;
    VertexSet r(g.order());
    b.members.for_each([&](int y) { r.insert(g.mul(c, y)); });
    return GroupSubset(g, std::move(r));
}

// Cay(G,S): edge (x,y) iff x^{-1} y in S, i.e. y in xS. Reflexive exactly
// when the identity lies in S.
inline Digraph cayley_graph(const FiniteGroup& g, const VertexSet& connection) {
    if (connection.universe() != g.order()) throw Error("cayley_graph: connection set universe != group order");
    if (connection.empty()) throw Error("cayley_graph: empty connection set");
    std::vector<std::pair<int, int>> es;
    es.reserve(size_t(g.order()) * connection.size());
    for (int x = 0; x < g.order(); ++x) {
        connection.for_each([&](int s) { es.emplace_back(x, g.mul(x, s)); });
    }
    return Digraph(g.order(), es);
}

// All left translations x -> c*x, the automorphisms that witness
// vertex-transitivity of every Cayley graph. maps[c][identity] = c.
inline std::vector<std::vector<int>> left_translations(const FiniteGroup& g) {
    std::vector<std::vector<int>> maps(g.order(), std::vector<int>(g.order()));
    for (int c = 0; c < g.order(); ++c) {
        for (int x = 0; x < g.order(); ++x) maps[c][x] = g.mul(c, x);
    }
    return maps;
}

}  // namespace moser
