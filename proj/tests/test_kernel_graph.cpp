#include <catch2/catch_amalgamated.hpp>

#include <moser/all.hpp>

using namespace moser;

namespace {

KernelGraph build_for(const LoadedGraph& lg) {
    return build_kernel_graph(lg.graph, require_certificate(lg));
}

}  // namespace

TEST_CASE("kernel graph of circulant:5:0,1 is loops-only") {
    LoadedGraph lg = parse_graph_spec("circulant:5:0,1");
    KernelGraph kg = build_for(lg);
    for (int v = 0; v < 5; ++v) {
        CHECK(kg.kernels[v] == VertexSet::of(5, {v}));
        CHECK(kg.omega.out(v) == std::vector<int>{v});
        CHECK(kg.mu[v] == 1);
    }

    BoundRecord b = mainomega_bound(kg, 0);
    CHECK(b.mu == 1);
    CHECK(b.rhs == 1);  // 2 - 1 + 1 - 1
    CHECK(b.holds);
    CHECK(b.tight);

    LemmaReport rep = check_omega_lemma(kg, require_certificate(lg));
    CHECK(rep.ok());
}

TEST_CASE("loops-only base graph") {
    LoadedGraph lg = parse_graph_spec("circulant:4:0");
    KernelGraph kg = build_for(lg);
    for (int v = 0; v < 4; ++v) {
        CHECK(kg.mu[v] == 0);
        BoundRecord b = mainomega_bound(kg, v);
        CHECK(b.rhs == 0);  // 1 - 1 + 1 - 1
        CHECK(b.tight);
    }
    CHECK(check_omega_lemma(kg, require_certificate(lg)).ok());
}

TEST_CASE("omega structure on circulant:6:0,1,3") {
    LoadedGraph lg = parse_graph_spec("circulant:6:0,1,3");
    auto cert = require_certificate(lg);
    KernelGraph kg = build_kernel_graph(lg.graph, cert);

    LemmaReport rep = check_omega_lemma(kg, cert);
    CHECK(rep.checks > 0);
    CHECK(rep.ok());

    for (int v = 0; v < 6; ++v) {
        // Omega(v) inside Gamma(v), with the loop at v present
        CHECK(kg.omega.out_set(v).subset_of(lg.graph.out_set(v)));
        CHECK(kg.omega.has_loop(v));
        // finite regularity of the kernel-graph
        CHECK(kg.omega.out_degree(v) == kg.omega.in_degree(v));
        BoundRecord b = mainomega_bound(kg, v);
        CHECK(b.holds);
    }
}

TEST_CASE("cayley kernel graphs are cayley graphs of the kernel trace") {
    for (const auto& spec : {"circulant:5:0,1", "circulant:6:0,1,3", "circulant:7:0,1,5", "cayley:D3:0,1,4",
                             "cayley:Q8:0,2,4", "cayley:Z2xZ4:0,1,2"}) {
        LoadedGraph lg = parse_graph_spec(spec);
        KernelGraph kg = build_for(lg);
        VertexSet trace = *lg.connection & kg.kernels[lg.group->identity()];
        INFO(spec);
        CHECK(kg.omega == cayley_graph(*lg.group, trace));
    }
}

TEST_CASE("kernel graph suite across all small circulants") {
    for (int n = 1; n <= 8; ++n) {
        for (uint64_t m = 0; m < (uint64_t{1} << (n - 1)); ++m) {
            FiniteGroup z = FiniteGroup::cyclic(n);
            VertexSet s = VertexSet::from_mask(n, (m << 1) | 1);
            Digraph g = cayley_graph(z, s);
            auto hint = left_translations(z);
            auto cert = certify_transitivity(g, &hint);
            REQUIRE(cert.has_value());
            KernelGraph kg = build_kernel_graph(g, *cert);
            REQUIRE(check_omega_lemma(kg, *cert).ok());
            for (int v = 0; v < n; ++v) {
                BoundRecord b = mainomega_bound(kg, v);
                REQUIRE(b.holds);
            }
        }
    }
}

TEST_CASE("kernel graph preconditions") {
    LoadedGraph loopless = parse_graph_spec("circulant:5:1,2");
    auto cert = require_certificate(loopless);
    CHECK_THROWS_AS(build_kernel_graph(loopless.graph, cert), Error);

    LoadedGraph big = parse_graph_spec("circulant:23:0,1");
    auto bigcert = require_certificate(big);
    CHECK_THROWS_AS(build_kernel_graph(big.graph, bigcert), Error);
    CHECK_NOTHROW(build_kernel_graph(big.graph, bigcert, 23));
}
