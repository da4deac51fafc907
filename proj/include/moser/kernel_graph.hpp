#pragma once

#include <string>
#include <utility>
#include <vector>

#include "moser/digraph.hpp"
#include "moser/error.hpp"
#include "moser/moser.hpp"
#include "moser/transitivity.hpp"

namespace moser {

// The kernel-graph: out-neighborhood of v is Gamma(v) intersected with the
// kernel K_v. Materialized as a full Digraph so every boundary operator
// applies unchanged. Kernels and mu values are kept for the bound checks.
struct KernelGraph {
    const Digraph* base;
    Digraph omega;
    std::vector<VertexSet> kernels;
    std::vector<int> mu;
};

inline KernelGraph build_kernel_graph(const Digraph& g, const TransitivityCertificate& cert, int cap = kBruteCap) {
    (void)cert;  // certificate is the caller's evidence of the lemma hypothesis
    if (!g.reflexive()) throw Error("build_kernel_graph: graph must be reflexive");
    if (g.order() > cap)
        throw Error("build_kernel_graph: " + std::to_string(g.order()) + " vertices exceeds cap " + std::to_string(cap));
    int n = g.order();
    KernelGraph kg;
    kg.base = &g;
    kg.kernels.reserve(n);
    kg.mu.reserve(n);
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) {
        Kernel k = kernel(MoserInstance(g, v));
        kg.mu.push_back(k.molecule.boundary_size);
        VertexSet omega_v = g.out_set(v) & k.molecule.members;
        omega_v.for_each([&](int u) { es.emplace_back(v, u); });
        kg.kernels.push_back(std::move(k.molecule.members));
    }
    kg.omega = Digraph(n, es);
    return kg;
}

// Structural checks behind the main bound: (a) every base automorphism in
// the certificate is an automorphism of omega; (b) the in-neighborhood of
// v in omega, minus v, sits inside the boundary of K_v; (c) omega's
// in-neighborhood meets Gamma(v) exactly in {v}; (d) finite regularity
// |Omega(v)| = |Omega^-(v)|.
inline LemmaReport check_omega_lemma(const KernelGraph& kg, const TransitivityCertificate& cert) {
    const Digraph& g = *kg.base;
    const Digraph& om = kg.omega;
    int n = g.order();
    LemmaReport report;

    for (size_t c = 0; c < cert.maps.size(); ++c) {
        const auto& phi = cert.maps[c];
        if (phi.empty()) continue;
        ++report.checks;
        if (!is_automorphism(om, phi))
            report.violations.push_back({"omega-transitive", "base automorphism #" + std::to_string(c) +
                                                                 " is not an automorphism of the kernel-graph"});
    }
    for (int v = 0; v < n; ++v) {
        VertexSet omega_in = om.in_set(v);
        VertexSet lhs = omega_in;
        lhs.erase(v);
        ++report.checks;
        if (!lhs.subset_of(boundary(g, kg.kernels[size_t(v)])))
            report.violations.push_back({"omega-in-boundary", "Omega^-(" + std::to_string(v) +
                                                                  ")\\{v} not inside boundary(K_v)"});
        ++report.checks;
        VertexSet meet = omega_in & g.out_set(v);
        if (meet != VertexSet::of(n, {v}))
            report.violations.push_back({"omega-in-gamma", "Omega^-(v) meets Gamma(v) in {" + meet.to_string() +
                                                               "} != {" + std::to_string(v) + "}"});
        ++report.checks;
        if (om.out_degree(v) != om.in_degree(v))
            report.violations.push_back({"omega-regular", "vertex " + std::to_string(v) + ": |Omega(v)| = " +
                                                              std::to_string(om.out_degree(v)) + " != |Omega^-(v)| = " +
                                                              std::to_string(om.in_degree(v))});
    }
    return report;
}

struct BoundRecord {
    int vertex;
    int mu;
    int rhs;
    bool holds;
    bool tight;
};

// mu(v) >= |Gamma(v)| - |Omega(v)| + |Omega^-(v)| - 1.
inline BoundRecord mainomega_bound(const KernelGraph& kg, int v) {
    int mu = kg.mu[size_t(v)];
    int rhs = kg.base->out_degree(v) - kg.omega.out_degree(v) + kg.omega.in_degree(v) - 1;
    return {v, mu, rhs, mu >= rhs, mu == rhs};
}

}  // namespace moser
