#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "moser/digraph.hpp"
#include "moser/error.hpp"
#include "moser/group.hpp"
#include "moser/kernel_graph.hpp"
#include "moser/mader.hpp"
#include "moser/moser.hpp"
#include "moser/report.hpp"
#include "moser/rng.hpp"
#include "moser/spec_io.hpp"
#include "moser/transitivity.hpp"

namespace moser {

struct SweepOptions {
    bool exhaustive = true;
    uint64_t samples = 0;
    uint64_t seed = 0;
    int jobs = 1;
    bool force = false;
    RecordPolicy policy = RecordPolicy::Violations;
    uint64_t budget = uint64_t{1} << 28;

    json mode_json() const {
        if (exhaustive) return json{{"mode", "exhaustive"}};
        return json{{"mode", "sampled"}, {"samples", samples}, {"seed", seed}};
    }
};

namespace detail {

inline void check_budget(uint64_t estimate, const SweepOptions& opt, const std::string& what) {
    if (opt.exhaustive && estimate > opt.budget && !opt.force)
        throw Error(what + ": estimated " + std::to_string(estimate) + " instances exceeds the budget of " +
                    std::to_string(opt.budget) + " (pass --force to run anyway)");
}

inline uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > ~uint64_t{0} / a) return ~uint64_t{0} >> 2;
    return a * b;
}

// Static partition of [0,count) into per-job blocks, merged in job order;
// together with the final sort this makes output independent of thread
// scheduling and of the job count itself.
template <class Fn>
RecordSink parallel_scan(uint64_t count, const SweepOptions& opt, Fn&& fn) {
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || count < 2048) {
        RecordSink sink;
        sink.policy = opt.policy;
        for (uint64_t i = 0; i < count; ++i) fn(i, sink);
        return sink;
    }
    uint64_t chunk = (count + uint64_t(jobs) - 1) / uint64_t(jobs);
    std::vector<RecordSink> sinks(static_cast<size_t>(jobs));
    for (auto& s : sinks) s.policy = opt.policy;
    std::vector<std::thread> workers;
    workers.reserve(size_t(jobs));
    for (int j = 0; j < jobs; ++j) {
        uint64_t lo = uint64_t(j) * chunk;
        uint64_t hi = std::min(count, lo + chunk);
        workers.emplace_back([&, j, lo, hi] {
            for (uint64_t i = lo; i < hi; ++i) fn(i, sinks[size_t(j)]);
        });
    }
    for (auto& w : workers) w.join();
    RecordSink sink;
    sink.policy = opt.policy;
    for (auto& s : sinks) sink.absorb(std::move(s));
    return sink;
}

inline std::string mask_to_list(int n, uint64_t mask) { return VertexSet::from_mask(n, mask).to_string(); }

inline uint64_t minkowski_mask(const FiniteGroup& g, uint64_t a, uint64_t b) {
    uint64_t r = 0;
    for (uint64_t x = a; x;) {
        int i = std::countr_zero(x);
        x &= x - 1;
        for (uint64_t y = b; y;) {
            int j = std::countr_zero(y);
            y &= y - 1;
            r |= uint64_t{1} << g.mul(i, j);
        }
    }
    return r;
}

inline uint64_t translated_inverse_mask(const FiniteGroup& g, int c, uint64_t b) {
    uint64_t r = 0;
    for (uint64_t y = b; y;) {
        int j = std::countr_zero(y);
        y &= y - 1;
        r |= uint64_t{1} << g.mul(c, g.inv(j));
    }
    return r;
}

inline void require_mask_width(const FiniteGroup& g, const char* what) {
    if (g.order() > 62) throw Error(std::string(what) + ": groups beyond order 62 are not supported in sweeps");
}

}  // namespace detail

// |AB| >= |A| + |B| - 1 for 1 in A, 1 in B, A cap B^{-1} = {1}.
inline VerificationReport verify_scherk(const FiniteGroup& g, const SweepOptions& opt) {
    detail::require_mask_width(g, "verify_scherk");
    int n = g.order();
    std::string gname = g.name();
    auto eval = [&](uint64_t a_mask, uint64_t b_mask, RecordSink& sink) {
        uint64_t binv = 0;
        for (uint64_t y = b_mask; y;) {
            int j = std::countr_zero(y);
            y &= y - 1;
            binv |= uint64_t{1} << g.inv(j);
        }
        if ((a_mask & binv) != 1) return;  // Moser condition fails; not an instance
        uint64_t ab = detail::minkowski_mask(g, a_mask, b_mask);
        long long lhs = std::popcount(ab);
        long long rhs = std::popcount(a_mask) + std::popcount(b_mask) - 1;
        bool holds = lhs >= rhs, tight = lhs == rhs;
        if (sink.wants(holds, tight)) {
            Record rec;
            rec.theorem = "scherk";
            rec.instance = "group=" + gname + ";A=" + detail::mask_to_list(n, a_mask) + ";B=" +
                           detail::mask_to_list(n, b_mask);
            rec.lhs = lhs;
            rec.rhs = rhs;
            rec.holds = holds;
            rec.tight = tight;
            sink.add(std::move(rec));
        } else {
            sink.count(holds, tight);
        }
    };

    RecordSink sink;
    if (opt.exhaustive) {
        if (n > 30) throw Error("verify_scherk: exhaustive enumeration beyond order 30 is not representable");
        uint64_t half = uint64_t{1} << (n - 1);  // masks containing the identity
        detail::check_budget(detail::sat_mul(half, half), opt, "verify_scherk(" + gname + ")");
        sink = detail::parallel_scan(half * half, opt, [&](uint64_t idx, RecordSink& s) {
            uint64_t a_mask = ((idx / half) << 1) | 1;
            uint64_t b_mask = ((idx % half) << 1) | 1;
            eval(a_mask, b_mask, s);
        });
    } else {
        sink = detail::parallel_scan(opt.samples, opt, [&](uint64_t i, RecordSink& s) {
            SplitMix64 rng = SplitMix64::stream(opt.seed, i);
            uint64_t half = uint64_t{1} << (n - 1);
            uint64_t a_mask = (rng.below(half) << 1) | 1;
            uint64_t b_mask = (rng.below(half) << 1) | 1;
            eval(a_mask, b_mask, s);
        });
    }
    VerificationReport report;
    report.spec = json{{"theorem", "scherk"}, {"group", gname}};
    report.spec.update(opt.mode_json());
    report.summary = sink.summary;
    report.records = std::move(sink.records);
    report.sort_records();
    return report;
}

// |AB| >= |A| + |B| - |A cap cB^{-1}| for every c in AB.
inline VerificationReport verify_kemperman(const FiniteGroup& g, const SweepOptions& opt) {
    detail::require_mask_width(g, "verify_kemperman");
    int n = g.order();
    std::string gname = g.name();
    auto eval_c = [&](uint64_t a_mask, uint64_t b_mask, uint64_t ab, int c, RecordSink& sink) {
        uint64_t cbinv = detail::translated_inverse_mask(g, c, b_mask);
        long long lhs = std::popcount(ab);
        long long rhs = std::popcount(a_mask) + std::popcount(b_mask) - std::popcount(a_mask & cbinv);
        bool holds = lhs >= rhs, tight = lhs == rhs;
        if (sink.wants(holds, tight)) {
            Record rec;
            rec.theorem = "kemperman";
            rec.instance = "group=" + gname + ";A=" + detail::mask_to_list(n, a_mask) + ";B=" +
                           detail::mask_to_list(n, b_mask) + ";c=" + std::to_string(c);
            rec.lhs = lhs;
            rec.rhs = rhs;
            rec.holds = holds;
            rec.tight = tight;
            sink.add(std::move(rec));
        } else {
            sink.count(holds, tight);
        }
    };

    RecordSink sink;
    uint64_t nonempty = (uint64_t{1} << n) - 1;
    if (opt.exhaustive) {
        detail::check_budget(nonempty * nonempty * uint64_t(n), opt, "verify_kemperman(" + gname + ")");
        sink = detail::parallel_scan(nonempty * nonempty, opt, [&](uint64_t idx, RecordSink& s) {
            uint64_t a_mask = idx / nonempty + 1;
            uint64_t b_mask = idx % nonempty + 1;
            uint64_t ab = detail::minkowski_mask(g, a_mask, b_mask);
            for (uint64_t m = ab; m;) {
                int c = std::countr_zero(m);
                m &= m - 1;
                eval_c(a_mask, b_mask, ab, c, s);
            }
        });
    } else {
        // One (A,B,c) triple per draw, c uniform over AB.
        sink = detail::parallel_scan(opt.samples, opt, [&](uint64_t i, RecordSink& s) {
            SplitMix64 rng = SplitMix64::stream(opt.seed, i);
            uint64_t a_mask = rng.below(nonempty) + 1;
            uint64_t b_mask = rng.below(nonempty) + 1;
            uint64_t ab = detail::minkowski_mask(g, a_mask, b_mask);
            int pick = int(rng.below(uint64_t(std::popcount(ab))));
            uint64_t m = ab;
            while (pick--) m &= m - 1;
            eval_c(a_mask, b_mask, ab, std::countr_zero(m), s);
        });
    }
    VerificationReport report;
    report.spec = json{{"theorem", "kemperman"}, {"group", gname}};
    report.spec.update(opt.mode_json());
    report.summary = sink.summary;
    report.records = std::move(sink.records);
    report.sort_records();
    return report;
}

inline TransitivityCertificate require_certificate(const LoadedGraph& lg, bool assume_transitive = false,
                                                   int search_cap = 64) {
    try {
        auto cert = certify_transitivity(lg.graph, lg.hint ? &*lg.hint : nullptr, search_cap);
        if (!cert) throw Error("graph " + lg.spec + " is not vertex-transitive");
        return *cert;
    } catch (const Error&) {
        if (assume_transitive) return TransitivityCertificate::asserted();
        throw;
    }
}

// |Gamma(F)| >= |F| + |Gamma(v)| - |Gamma^-(v) cap F| for all F containing
// v, plus the reduction F' = (F \ Gamma^-(v)) u {v} which may only shrink
// the image.
inline VerificationReport verify_main_finite(const LoadedGraph& lg, const TransitivityCertificate& cert,
                                             const SweepOptions& opt) {
    const Digraph& g = lg.graph;
    if (!g.reflexive()) throw Error("verify_main_finite: graph must be reflexive (use --reflexive-closure)");
    (void)cert;
    int n = g.order();
    if (opt.exhaustive && n > 16 && !opt.force)
        throw Error("verify_main_finite: exhaustive mode supports up to 16 vertices (got " + std::to_string(n) +
                    "); use --samples or --force");

    auto eval_sets = [&](int v, const VertexSet& F, RecordSink& sink) {
        VertexSet gamma_f = image(g, F);
        long long lhs = gamma_f.size();
        long long rhs = F.size() + g.out_degree(v) - (g.in_set(v) & F).size();
        VertexSet reduced = F - g.in_set(v);
        reduced.insert(v);
        long long reduced_image = image(g, reduced).size();
        bool holds = lhs >= rhs && lhs >= reduced_image;
        bool tight = lhs == rhs;
        if (sink.wants(holds, tight)) {
            Record rec;
            rec.theorem = "main-finite";
            rec.instance = "graph=" + lg.spec + ";v=" + std::to_string(v) + ";F=" + F.to_string();
            rec.lhs = lhs;
            rec.rhs = rhs;
            rec.holds = holds;
            rec.tight = tight;
            if (lhs < reduced_image) rec.witness = json{{"reduction_image", reduced_image}};
            sink.add(std::move(rec));
        } else {
            sink.count(holds, tight);
        }
    };

    RecordSink sink;
    if (opt.exhaustive) {
        if (n > 62) throw Error("verify_main_finite: exhaustive mode supports at most 62 vertices");
        uint64_t per_vertex = uint64_t{1} << (n - 1);
        detail::check_budget(uint64_t(n) * per_vertex, opt, "verify_main_finite(" + lg.spec + ")");
        // Masks fit a single word under the exhaustive cap.
        std::vector<uint64_t> out64(static_cast<size_t>(n)), in64(static_cast<size_t>(n));
        for (int u = 0; u < n; ++u) {
            out64[size_t(u)] = g.out_set(u).low_mask();
            in64[size_t(u)] = g.in_set(u).low_mask();
        }
        sink = detail::parallel_scan(uint64_t(n) * per_vertex, opt, [&](uint64_t idx, RecordSink& s) {
            int v = int(idx / per_vertex);
            uint64_t fidx = idx % per_vertex;
            uint64_t low = (uint64_t{1} << v) - 1;
            uint64_t F = ((fidx & ~low) << 1) | (fidx & low) | (uint64_t{1} << v);
            uint64_t img = 0;
            for (uint64_t m = F; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                img |= out64[size_t(u)];
            }
            long long lhs = std::popcount(img);
            long long rhs = std::popcount(F) + g.out_degree(v) - std::popcount(in64[size_t(v)] & F);
            uint64_t reduced = (F & ~in64[size_t(v)]) | (uint64_t{1} << v);
            uint64_t rimg = 0;
            for (uint64_t m = reduced; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                rimg |= out64[size_t(u)];
            }
            long long reduced_image = std::popcount(rimg);
            bool holds = lhs >= rhs && lhs >= reduced_image;
            bool tight = lhs == rhs;
            if (s.wants(holds, tight)) {
                Record rec;
                rec.theorem = "main-finite";
                rec.instance = "graph=" + lg.spec + ";v=" + std::to_string(v) + ";F=" + detail::mask_to_list(n, F);
                rec.lhs = lhs;
                rec.rhs = rhs;
                rec.holds = holds;
                rec.tight = tight;
                if (lhs < reduced_image) rec.witness = json{{"reduction_image", reduced_image}};
                s.add(std::move(rec));
            } else {
                s.count(holds, tight);
            }
        });
    } else {
        sink = detail::parallel_scan(opt.samples, opt, [&](uint64_t i, RecordSink& s) {
            SplitMix64 rng = SplitMix64::stream(opt.seed, i);
            int v = int(rng.below(uint64_t(n)));
            VertexSet F(n);
            F.insert(v);
            for (int u = 0; u < n; ++u) {
                if (u != v && rng.coin()) F.insert(u);
            }
            eval_sets(v, F, s);
        });
    }
    VerificationReport report;
    report.spec = json{{"theorem", "main-finite"}, {"graph", lg.spec}};
    report.spec.update(opt.mode_json());
    report.summary = sink.summary;
    report.records = std::move(sink.records);
    report.sort_records();
    return report;
}

// Kernel-graph suite for one graph: the mainomega bound per vertex, the
// omega lemma checks, and on Cayley inputs the identity
// Omega = Cay(G, S cap K_identity).
inline VerificationReport verify_mainomega(const LoadedGraph& lg, const TransitivityCertificate& cert,
                                           const SweepOptions& opt) {
    KernelGraph kg = build_kernel_graph(lg.graph, cert, opt.force ? 64 : kBruteCap);
    RecordSink sink;
    sink.policy = opt.policy;
    int n = lg.graph.order();
    for (int v = 0; v < n; ++v) {
        BoundRecord b = mainomega_bound(kg, v);
        if (sink.wants(b.holds, b.tight)) {
            Record rec;
            rec.theorem = "mainomega";
            rec.instance = "graph=" + lg.spec + ";v=" + std::to_string(v);
            rec.lhs = b.mu;
            rec.rhs = b.rhs;
            rec.holds = b.holds;
            rec.tight = b.tight;
            sink.add(std::move(rec));
        } else {
            sink.count(b.holds, b.tight);
        }
    }
    LemmaReport lemmas = check_omega_lemma(kg, cert);
    {
        Record rec;
        rec.theorem = "omega-lemma";
        rec.instance = "graph=" + lg.spec;
        rec.lhs = lemmas.checks;
        rec.rhs = static_cast<long long>(lemmas.violations.size());
        rec.holds = lemmas.ok();
        sink.add(std::move(rec));
    }
    for (const auto& viol : lemmas.violations) {
        Record rec;
        rec.theorem = "omega-lemma";
        rec.instance = "graph=" + lg.spec + ";check=" + viol.lemma;
        rec.holds = false;
        rec.witness = json{{"detail", viol.detail}};
        sink.add(std::move(rec));
    }
    if (lg.group && lg.connection) {
        VertexSet s_cap_k = *lg.connection & kg.kernels[size_t(lg.group->identity())];
        Digraph expected = cayley_graph(*lg.group, s_cap_k);
        Record rec;
        rec.theorem = "omega-cayley";
        rec.instance = "graph=" + lg.spec;
        rec.lhs = kg.omega.edge_count();
        rec.rhs = expected.edge_count();
        rec.holds = kg.omega == expected;
        if (!rec.holds) rec.witness = json{{"s_cap_kernel", s_cap_k.to_string()}};
        sink.add(std::move(rec));
    }

    VerificationReport report;
    report.spec = json{{"theorem", "mainomega"}, {"graph", lg.spec}};
    report.spec.update(opt.mode_json());
    report.summary = sink.summary;
    report.records = std::move(sink.records);
    report.sort_records();
    return report;
}

// Kernel lemma suite (distinctness, equivariance, dichotomy) for one graph.
inline VerificationReport verify_lemmas(const LoadedGraph& lg, const TransitivityCertificate& cert,
                                        const SweepOptions& opt) {
    LemmaReport lemmas = check_kernel_lemmas(lg.graph, cert, opt.force ? 64 : kBruteCap);
    RecordSink sink;
    sink.policy = opt.policy;
    {
        Record rec;
        rec.theorem = "kernel-lemmas";
        rec.instance = "graph=" + lg.spec;
        rec.lhs = lemmas.checks;
        rec.rhs = static_cast<long long>(lemmas.violations.size());
        rec.holds = lemmas.ok();
        sink.add(std::move(rec));
    }
    for (const auto& viol : lemmas.violations) {
        Record rec;
        rec.theorem = "kernel-lemmas";
        rec.instance = "graph=" + lg.spec + ";check=" + viol.lemma;
        rec.holds = false;
        rec.witness = json{{"detail", viol.detail}};
        sink.add(std::move(rec));
    }
    VerificationReport report;
    report.spec = json{{"theorem", "lemmas"}, {"graph", lg.spec}};
    report.spec.update(opt.mode_json());
    report.summary = sink.summary;
    report.records = std::move(sink.records);
    report.sort_records();
    return report;
}

// Mader cycle systems at every vertex, re-validated by the independent
// checker.
inline VerificationReport verify_mader(const LoadedGraph& lg, const TransitivityCertificate& cert,
                                       const SweepOptions& opt) {
    const Digraph& g = lg.graph;
    if (!g.loopless()) throw Error("verify_mader: graph must be loopless");
    RecordSink sink;
    sink.policy = opt.policy;
    for (int v = 0; v < g.order(); ++v) {
        Record rec;
        rec.theorem = "mader";
        rec.instance = "graph=" + lg.spec + ";v=" + std::to_string(v);
        rec.rhs = g.out_degree(v);
        try {
            CycleSystem cs = mader_cycles(g, cert, v);
            std::string why;
            bool ok = verify_cycle_system(g, cs, &why);
            rec.lhs = static_cast<long long>(cs.cycles.size());
            rec.holds = ok && rec.lhs == rec.rhs;
            if (!ok) rec.witness = json{{"checker", why}};
            if (opt.policy == RecordPolicy::All) rec.witness["cycles"] = cs.cycles;
        } catch (const InternalError& e) {
            rec.lhs = 0;
            rec.holds = false;
            rec.witness = json{{"error", e.what()}};
        }
        if (sink.wants(rec.holds, rec.tight)) {
            sink.add(std::move(rec));
        } else {
            sink.count(rec.holds, rec.tight);
        }
    }
    VerificationReport report;
    report.spec = json{{"theorem", "mader"}, {"graph", lg.spec}};
    report.spec.update(opt.mode_json());
    report.summary = sink.summary;
    report.records = std::move(sink.records);
    report.sort_records();
    return report;
}

// ---------------------------------------------------------------------
// Families and sweeps
// ---------------------------------------------------------------------

// The group catalogue used by the exhaustive verification suites.
inline std::vector<std::string> catalogue_group_specs() {
    return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "D3", "D4", "Q8", "Z2xZ4"};
}

// Group family DSL: catalog | cyclic<=N | any single group spec.
inline std::vector<std::string> expand_group_family(const std::string& family) {
    if (family == "catalog") return catalogue_group_specs();
    if (family.rfind("cyclic<=", 0) == 0) {
        int cap = detail::parse_int(family.substr(8), "cyclic family bound");
        std::vector<std::string> out;
        for (int k = 1; k <= cap; ++k) out.push_back("Z" + std::to_string(k));
        return out;
    }
    return {family};
}

// Graph family DSL:
//   circulants<=N[:loopless]        all circulant:n:S, n <= N (S containing
//                                   0, or avoiding 0 with :loopless)
//   catalog-graphs[:loopless][:maxv=V]
//                                   all Cayley graphs over the group
//                                   catalogue with |G| <= V (default 8)
//   anything else                   a single graph spec
inline std::vector<LoadedGraph> expand_graph_family(const std::string& family, bool closure) {
    std::vector<LoadedGraph> out;
    auto all_connection_sets = [&](const FiniteGroup& g, bool loopless, bool circulant_form) {
        int n = g.order();
        uint64_t half = uint64_t{1} << (n - 1);
        for (uint64_t m = 0; m < half; ++m) {
            uint64_t s_mask = loopless ? (m << 1) : ((m << 1) | 1);
            if (!s_mask) continue;
            std::vector<int> conn;
            for (uint64_t x = s_mask; x;) {
                conn.push_back(std::countr_zero(x));
                x &= x - 1;
            }
            out.push_back(make_cayley_loaded(g, conn, circulant_form));
        }
    };
    if (family.rfind("circulants<=", 0) == 0) {
        auto parts = detail::split(family, ':');
        bool loopless = parts.size() > 1 && parts[1] == "loopless";
        int cap = detail::parse_int(parts[0].substr(12), "circulant family bound");
        // 2^cap - 1 family members; keep the expansion itself desk-scale
        if (cap > 16) throw Error("circulant family cap too large (max 16; " + family + " would expand to " +
                                  std::to_string((uint64_t{1} << cap) - 1) + " graphs)");
        for (int n = 1; n <= cap; ++n) all_connection_sets(FiniteGroup::cyclic(n), loopless, true);
        return out;
    }
    if (family.rfind("catalog-graphs", 0) == 0) {
        bool loopless = false;
        int maxv = 8;
        auto parts = detail::split(family, ':');
        for (size_t i = 1; i < parts.size(); ++i) {
            if (parts[i] == "loopless")
                loopless = true;
            else if (parts[i].rfind("maxv=", 0) == 0)
                maxv = detail::parse_int(parts[i].substr(5), "maxv");
            else
                throw Error("unknown catalog-graphs option ':" + parts[i] + "'");
        }
        for (const auto& gspec : catalogue_group_specs()) {
            FiniteGroup g = parse_group_spec(gspec);
            if (g.order() > maxv || g.order() > 20) continue;
            all_connection_sets(g, loopless, false);
        }
        return out;
    }
    out.push_back(parse_graph_spec(family, closure));
    return out;
}

struct SweepSpec {
    std::vector<std::string> theorems;  // subset of scherk kemperman main mainomega lemmas mader
    std::string group_family;
    std::string graph_family;
    bool reflexive_closure = false;
    bool assume_transitive = false;
    SweepOptions opt;
};

inline bool theorem_needs_graph(const std::string& t) {
    return t == "main" || t == "mainomega" || t == "lemmas" || t == "mader";
}

inline uint64_t opt_budget_overflow() { return ~uint64_t{0} >> 2; }

// Dispatches every requested theorem across the family, merging the
// per-member reports into one deterministic report (records sorted by
// theorem then instance key).
inline VerificationReport run_sweep(const SweepSpec& spec) {
    VerificationReport total;
    json spec_json{{"theorems", spec.theorems}};
    if (!spec.group_family.empty()) spec_json["group_family"] = spec.group_family;
    if (!spec.graph_family.empty()) spec_json["graph_family"] = spec.graph_family;
    if (spec.reflexive_closure) spec_json["reflexive_closure"] = true;
    spec_json["record"] = spec.opt.policy == RecordPolicy::All      ? "all"
                          : spec.opt.policy == RecordPolicy::Tight ? "tight"
                                                                   : "violations";
    spec_json.update(spec.opt.mode_json());
    total.spec = std::move(spec_json);

    std::vector<std::string> theorems = spec.theorems;
    std::sort(theorems.begin(), theorems.end());
    for (const auto& theorem : theorems) {
        if (theorem == "scherk" || theorem == "kemperman") {
            if (spec.group_family.empty()) throw Error("theorem '" + theorem + "' needs --group");
            for (const auto& gspec : expand_group_family(spec.group_family)) {
                FiniteGroup g = parse_group_spec(gspec);
                VerificationReport r =
                    theorem == "scherk" ? verify_scherk(g, spec.opt) : verify_kemperman(g, spec.opt);
                total.merge(std::move(r));
            }
        } else if (theorem_needs_graph(theorem)) {
            if (spec.graph_family.empty()) throw Error("theorem '" + theorem + "' needs --graph");
            auto graphs = expand_graph_family(spec.graph_family, spec.reflexive_closure);
            if (theorem == "main" && spec.opt.exhaustive) {
                // family-wide estimate; per-member budgets alone would let a
                // large family through piecewise
                uint64_t total = 0;
                for (const auto& lg : graphs) {
                    int n = lg.graph.order();
                    total += n <= 62 ? uint64_t(n) << (n - 1) : opt_budget_overflow();
                }
                detail::check_budget(total, spec.opt, "run_sweep(main over " + spec.graph_family + ")");
            }
            for (auto& lg : graphs) {
                if (!weakly_connected(lg.graph)) {
                    Record note;
                    note.theorem = theorem;
                    note.instance = "graph=" + lg.spec + ";note=disconnected";
                    note.holds = true;
                    note.witness = json{{"disconnected", true}};
                    total.records.push_back(std::move(note));
                }
                TransitivityCertificate cert = require_certificate(lg, spec.assume_transitive);
                VerificationReport r;
                if (theorem == "main") {
                    r = verify_main_finite(lg, cert, spec.opt);
                } else if (theorem == "mainomega") {
                    r = verify_mainomega(lg, cert, spec.opt);
                } else if (theorem == "lemmas") {
                    r = verify_lemmas(lg, cert, spec.opt);
                } else {
                    r = verify_mader(lg, cert, spec.opt);
                }
                total.merge(std::move(r));
            }
        } else {
            throw Error("unknown theorem '" + theorem + "'");
        }
    }
    total.sort_records();
    return total;
}

// Seeded random reflexive Cayley instance for oracle sweeps: a random
// group from a small pool, a random connection set containing the
// identity, and a random vertex.
struct RandomInstance {
    LoadedGraph lg;
    int vertex;
};

inline RandomInstance random_vt_instance(uint64_t seed, uint64_t index) {
    SplitMix64 rng = SplitMix64::stream(seed, index);
    FiniteGroup g = [&]() -> FiniteGroup {
        uint64_t pick = rng.below(19);
        if (pick < 12) return FiniteGroup::cyclic(int(pick) + 1);
        if (pick < 17) return FiniteGroup::dihedral(int(pick) - 10);
        if (pick == 17) return FiniteGroup::quaternion8();
        return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
    }();
    std::vector<int> conn{g.identity()};
    for (int x = 1; x < g.order(); ++x) {
        if (rng.coin()) conn.push_back(x);
    }
    int v = int(rng.below(uint64_t(g.order())));
    return {make_cayley_loaded(std::move(g), conn, false), v};
}

}  // namespace moser
