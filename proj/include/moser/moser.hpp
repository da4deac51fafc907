#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "moser/digraph.hpp"
#include "moser/error.hpp"
#include "moser/maxflow.hpp"
#include "moser/transitivity.hpp"
#include "moser/vertex_set.hpp"

namespace moser {

// Default cap on exhaustive subset enumeration (2^(n-1) sets).
constexpr int kBruteCap = 22;

// One minimization problem: vertex v on a reflexive graph. A set F is a
// v-Moser set when v is in F and F avoids the other in-neighbors of v;
// mu is the least boundary size over all such F.
struct MoserInstance {
    const Digraph* graph;
    int v;
    VertexSet forbidden;  // in-neighborhood of v minus v itself

    MoserInstance(const Digraph& g, int vertex) : graph(&g), v(vertex) {
        if (vertex < 0 || vertex >= g.order()) throw Error("MoserInstance: vertex out of range");
        if (!g.reflexive()) throw Error("MoserInstance: graph must be reflexive (use --reflexive-closure?)");
        forbidden = g.in_set(vertex);
        forbidden.erase(vertex);
    }
};

struct Molecule {
    int v;
    VertexSet members;
    int boundary_size;
};

struct Kernel {
    Molecule molecule;
    VertexSet atom;  // members minus v
};

struct MuCertificate {
    enum class Method { Brute, Flow };

    int value;
    Molecule witness;
    Method method;
    VertexSet cut;

    const char* method_name() const { return method == Method::Brute ? "brute" : "flow"; }
};

inline bool is_moser_set(const MoserInstance& inst, const VertexSet& F) {
    return F.contains(inst.v) && !F.intersects(inst.forbidden);
}

namespace detail {

// Lexicographic order on ascending member sequences, single-word version.
inline bool mask_lex_less(uint64_t a, uint64_t b) {
    uint64_t diff = a ^ b;
    if (!diff) return false;
    int bit = std::countr_zero(diff);
    bool in_a = (a >> bit) & 1;
    uint64_t above = (in_a ? b : a) & ~((uint64_t{2} << bit) - 1);
    if (above) return in_a;
    return !in_a;
}

struct BruteScan {
    int mu = -1;
    uint64_t best = 0;  // min boundary, then min size, then lex-least

    void offer(uint64_t F, int bd) {
        if (mu < 0 || bd < mu) {
            mu = bd;
            best = F;
            return;
        }
        if (bd > mu) return;
        int sz = std::popcount(F), bsz = std::popcount(best);
        if (sz < bsz || (sz == bsz && mask_lex_less(F, best))) best = F;
    }
};

// Enumerates every Moser set of the instance as a 64-bit mask and hands
// (mask, boundary size) to the callback.
template <class Fn>
void for_each_moser_mask(const MoserInstance& inst, Fn fn) {
    const Digraph& g = *inst.graph;
    int n = g.order();
    std::vector<uint64_t> out(n);
    for (int u = 0; u < n; ++u) out[u] = g.out_set(u).low_mask();
    uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::vector<int> free_verts;
    for (int u = 0; u < n; ++u) {
        if (u != inst.v && !inst.forbidden.contains(u)) free_verts.push_back(u);
    }
    int k = int(free_verts.size());
    for (uint64_t sub = 0; sub < (uint64_t{1} << k); ++sub) {
        uint64_t F = uint64_t{1} << inst.v;
        uint64_t s = sub;
        while (s) {
            int b = std::countr_zero(s);
            F |= uint64_t{1} << free_verts[b];
            s &= s - 1;
        }
        uint64_t img = 0;
        uint64_t f = F;
        while (f) {
            int b = std::countr_zero(f);
            img |= out[b];
            f &= f - 1;
        }
        fn(F, std::popcount(img & all & ~F));
    }
}

inline void check_brute_cap(const MoserInstance& inst, int cap, const char* who) {
    int n = inst.graph->order();
    if (n > cap || n > 64)
        throw Error(std::string(who) + ": " + std::to_string(n) + " vertices exceeds the enumeration cap of " +
                    std::to_string(std::min(cap, 64)));
}

struct FlowSolve {
    int value;
    VertexSet min_molecule;  // residual-reachable source side; the kernel
};

// Vertex-split network for the Menger reduction: mu equals the minimum
// vertex cut separating v from its forbidden in-neighbors. Each u != v is
// split into u_in -> u_out with capacity 1 (cut membership costs 1, for
// forbidden vertices too); graph edges become unbounded out->in arcs; no
// arc enters v; every forbidden vertex feeds the super-sink from its
// out-node.
inline FlowSolve solve_moser_flow(const MoserInstance& inst) {
    const Digraph& g = *inst.graph;
    int n = g.order();
    int v = inst.v;
    auto in_node = [](int u) { return 2 * u; };
    auto out_node = [](int u) { return 2 * u + 1; };
    int sink = 2 * n;
    FlowNetwork net(2 * n + 1);
    for (int u = 0; u < n; ++u) {
        if (u != v) net.add_arc(in_node(u), out_node(u), 1);
    }
    for (int u = 0; u < n; ++u) {
        for (int w : g.out(u)) {
            if (w != u && w != v) net.add_arc(out_node(u), in_node(w), FlowNetwork::kUnbounded);
        }
    }
    inst.forbidden.for_each([&](int w) { net.add_arc(out_node(w), sink, FlowNetwork::kUnbounded); });

    int value = net.max_flow(out_node(v), sink);
    auto reach = net.residual_reachable(out_node(v));
    VertexSet F(n);
    F.insert(v);
    for (int u = 0; u < n; ++u) {
        if (u != v && reach[size_t(out_node(u))]) F.insert(u);
    }
    if (!is_moser_set(inst, F))
        throw InternalError("solve_moser_flow: residual source side is not a Moser set");
    if (boundary(g, F).size() != value)
        throw InternalError("solve_moser_flow: |boundary(source side)| != max-flow value");
    return {value, std::move(F)};
}

}  // namespace detail

// Exact minimum by exhaustive enumeration; the independent oracle for the
// flow route. Witness is the lexicographically-least minimizer of minimum
// size, which is exactly the kernel.
inline MuCertificate mu_brute(const MoserInstance& inst, int cap = kBruteCap) {
    detail::check_brute_cap(inst, cap, "mu_brute");
    detail::BruteScan scan;
    detail::for_each_moser_mask(inst, [&](uint64_t F, int bd) { scan.offer(F, bd); });
    VertexSet members = VertexSet::from_mask(inst.graph->order(), scan.best);
    VertexSet cut = boundary(*inst.graph, members);
    return {scan.mu, Molecule{inst.v, std::move(members), scan.mu}, MuCertificate::Method::Brute, std::move(cut)};
}

// Minimum via max-flow on the vertex-split network. When forbidden is
// empty there is nothing to separate: the value is 0 and the whole vertex
// set is a valid witness molecule.
inline MuCertificate mu_flow(const MoserInstance& inst) {
    auto sol = detail::solve_moser_flow(inst);
    VertexSet witness = inst.forbidden.empty() ? VertexSet::full(inst.graph->order()) : sol.min_molecule;
    VertexSet cut = boundary(*inst.graph, witness);
    if (cut.size() != sol.value) throw InternalError("mu_flow: witness boundary does not match flow value");
    return {sol.value, Molecule{inst.v, std::move(witness), sol.value}, MuCertificate::Method::Flow, std::move(cut)};
}

// The unique inclusion-minimal molecule, read off the residual-reachable
// source side of the max-flow. Its minimality is not taken on faith: the
// test suite compares it against the intersection of all enumerated
// molecules at desk scale.
inline Kernel kernel(const MoserInstance& inst) {
    auto sol = detail::solve_moser_flow(inst);
    VertexSet atom = sol.min_molecule;
    atom.erase(inst.v);
    return {Molecule{inst.v, std::move(sol.min_molecule), sol.value}, std::move(atom)};
}

// Every molecule (Moser set attaining mu), sorted lexicographically.
inline std::vector<Molecule> all_molecules(const MoserInstance& inst, int cap = kBruteCap) {
    detail::check_brute_cap(inst, cap, "all_molecules");
    detail::BruteScan scan;
    detail::for_each_moser_mask(inst, [&](uint64_t F, int bd) { scan.offer(F, bd); });
    std::vector<uint64_t> masks;
    detail::for_each_moser_mask(inst, [&](uint64_t F, int bd) {
        if (bd == scan.mu) masks.push_back(F);
    });
    std::sort(masks.begin(), masks.end(), detail::mask_lex_less);
    std::vector<Molecule> out;
    out.reserve(masks.size());
    for (uint64_t m : masks)
        out.push_back(Molecule{inst.v, VertexSet::from_mask(inst.graph->order(), m), scan.mu});
    return out;
}

struct LemmaViolation {
    std::string lemma;
    std::string detail;
};

struct LemmaReport {
    long long checks = 0;
    std::vector<LemmaViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Kernel structure checks on a certified vertex-transitive reflexive graph:
// distinctness (v != w implies K_v != K_w), equivariance of kernels under
// every certificate automorphism, and the dichotomy for w in K_v (either
// v in image(K_w) or K_w inside K_v). Violations witness implementation
// bugs, not mathematical events.
inline LemmaReport check_kernel_lemmas(const Digraph& g, const TransitivityCertificate& cert, int cap = kBruteCap) {
    if (!g.reflexive()) throw Error("check_kernel_lemmas: graph must be reflexive");
    int n = g.order();
    if (n > cap) throw Error("check_kernel_lemmas: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));

    std::vector<VertexSet> kernels;
    kernels.reserve(n);
    for (int v = 0; v < n; ++v) kernels.push_back(kernel(MoserInstance(g, v)).molecule.members);

    LemmaReport report;
    for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
            ++report.checks;
            if (kernels[v] == kernels[w])
                report.violations.push_back({"kernel-distinct", "K_" + std::to_string(v) + " == K_" + std::to_string(w) +
                                                                   " = {" + kernels[v].to_string() + "}"});
        }
    }
    for (const auto& phi : cert.maps) {
        if (phi.empty()) continue;
        for (int v = 0; v < n; ++v) {
            ++report.checks;
            VertexSet mapped = permute_set(phi, kernels[v]);
            if (mapped != kernels[size_t(phi[v])])
                report.violations.push_back({"kernel-equivariance",
                                             "phi(K_" + std::to_string(v) + ") = {" + mapped.to_string() +
                                                 "} but K_phi(v) = {" + kernels[size_t(phi[v])].to_string() + "}"});
        }
    }
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            if (v == w || !kernels[v].contains(w)) continue;
            ++report.checks;
            bool in_image = image(g, kernels[w]).contains(v);
            bool nested = kernels[w].subset_of(kernels[v]);
            if (!in_image && !nested)
                report.violations.push_back({"kernel-dichotomy", "w=" + std::to_string(w) + " in K_" + std::to_string(v) +
                                                                    " but v not in image(K_w) and K_w not inside K_v"});
        }
    }
    return report;
}

}  // namespace moser
