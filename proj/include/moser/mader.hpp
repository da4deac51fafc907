#pragma once

#include <string>
#include <vector>

#include "moser/digraph.hpp"
#include "moser/error.hpp"
#include "moser/maxflow.hpp"
#include "moser/transitivity.hpp"

namespace moser {

// r = out-degree(v) directed cycles through v, pairwise meeting only in v.
// Each cycle is stored as a vertex sequence starting and ending at v;
// 2-cycles (v,u,v) are legal.
struct CycleSystem {
    int v;
    std::vector<std::vector<int>> cycles;
};

// Menger construction: delete v, split every remaining vertex with unit
// capacity, push flow from the out-neighbors of v to the in-neighbors of
// v, then close each of the r disjoint paths into a cycle through v. The
// theory guarantees flow value r on certified vertex-transitive inputs;
// any shortfall is an internal-consistency failure, not a result.
inline CycleSystem mader_cycles(const Digraph& g, const TransitivityCertificate& cert, int v) {
    (void)cert;
    if (v < 0 || v >= g.order()) throw Error("mader_cycles: vertex out of range");
    if (!g.loopless()) throw Error("mader_cycles: graph must be loopless");
    int n = g.order();
    int r = g.out_degree(v);
    CycleSystem cs{v, {}};
    if (r == 0) return cs;

    auto in_node = [](int u) { return 2 * u; };
    auto out_node = [](int u) { return 2 * u + 1; };
    int source = 2 * n, sink = 2 * n + 1;
    FlowNetwork net(2 * n + 2);
    for (int w : g.out(v)) net.add_arc(source, in_node(w), 1);
    for (int u = 0; u < n; ++u) {
        if (u != v) net.add_arc(in_node(u), out_node(u), 1);
    }
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        for (int w : g.out(u)) {
            if (w != v && w != u) net.add_arc(out_node(u), in_node(w), FlowNetwork::kUnbounded);
        }
    }
    for (int w : g.in(v)) net.add_arc(out_node(w), sink, FlowNetwork::kUnbounded);

    int flow = net.max_flow(source, sink);
    if (flow != r)
        throw InternalError("mader_cycles: max-flow " + std::to_string(flow) + " != out-degree " + std::to_string(r) +
                            " at vertex " + std::to_string(v) + "; either the input is not vertex-transitive or this is a bug");

    // Decompose the integral flow into r paths, always taking the
    // lowest-index arc still carrying flow; output order and cycle shape
    // are therefore deterministic.
    for (int i = 0; i < r; ++i) {
        std::vector<int> cycle{v};
        int node = source;
        while (node != sink) {
            int chosen = -1;
            for (int idx : net.arcs_from(node)) {
                if ((idx & 1) == 0 && net.arc(idx).flow > 0) {
                    chosen = idx;
                    break;
                }
            }
            if (chosen < 0) throw InternalError("mader_cycles: flow decomposition ran out of arcs");
            net.push(chosen, -1);
            node = net.arc(chosen).to;
            if (node != sink && node % 2 == 1) cycle.push_back(node / 2);  // crossed a split arc
        }
        cycle.push_back(v);
        cs.cycles.push_back(std::move(cycle));
    }
    return cs;
}

// Independent re-validation of every CycleSystem invariant directly
// against the graph; the acceptance oracle for mader_cycles.
inline bool verify_cycle_system(const Digraph& g, const CycleSystem& cs, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cs.v < 0 || cs.v >= g.order()) return fail("center vertex out of range");
    if (!g.loopless()) return fail("graph has loops");
    if (int(cs.cycles.size()) != g.out_degree(cs.v))
        return fail("cycle count " + std::to_string(cs.cycles.size()) + " != out-degree " +
                    std::to_string(g.out_degree(cs.v)));
    VertexSet seen_internal(g.order());
    for (size_t i = 0; i < cs.cycles.size(); ++i) {
        const auto& c = cs.cycles[i];
        std::string tag = "cycle #" + std::to_string(i);
        if (c.size() < 3) return fail(tag + ": too short for a loopless cycle");
        if (c.front() != cs.v || c.back() != cs.v) return fail(tag + ": does not start and end at v");
        VertexSet internal(g.order());
        for (size_t j = 0; j + 1 < c.size(); ++j) {
            int a = c[j], b = c[j + 1];
            if (a < 0 || a >= g.order() || b < 0 || b >= g.order()) return fail(tag + ": vertex out of range");
            if (!g.has_edge(a, b))
                return fail(tag + ": (" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
            if (j + 1 < c.size() - 1) {
                if (b == cs.v) return fail(tag + ": revisits v internally");
                if (internal.contains(b)) return fail(tag + ": repeats internal vertex " + std::to_string(b));
                internal.insert(b);
            }
        }
        if (internal.intersects(seen_internal)) {
            VertexSet shared = internal & seen_internal;
            return fail(tag + ": shares vertices {" + shared.to_string() + "} with an earlier cycle");
        }
        seen_internal |= internal;
    }
    return true;
}

}  // namespace moser
