#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <moser/all.hpp>

using namespace moser;

namespace {

SweepOptions exhaustive(RecordPolicy policy = RecordPolicy::Violations) {
    SweepOptions opt;
    opt.policy = policy;
    return opt;
}

SweepOptions sampled(uint64_t n, uint64_t seed, RecordPolicy policy = RecordPolicy::Violations) {
    SweepOptions opt;
    opt.exhaustive = false;
    opt.samples = n;
    opt.seed = seed;
    opt.policy = policy;
    return opt;
}

const Record* find_record(const VerificationReport& r, const std::string& instance) {
    for (const auto& rec : r.records) {
        if (rec.instance == instance) return &rec;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("scherk sweep on Z5 with frozen example") {
    VerificationReport r = verify_scherk(FiniteGroup::cyclic(5), exhaustive(RecordPolicy::All));
    CHECK(r.clean());
    const Record* rec = find_record(r, "group=Z5;A=0,1;B=0,2");
    REQUIRE(rec != nullptr);
    CHECK(rec->lhs == 4);
    CHECK(rec->rhs == 3);
    CHECK_FALSE(rec->tight);
}

TEST_CASE("scherk: |A|=1 instances are always tight") {
    VerificationReport r = verify_scherk(parse_group_spec("D3"), exhaustive(RecordPolicy::All));
    CHECK(r.clean());
    int singletons = 0;
    for (const auto& rec : r.records) {
        if (rec.instance.find(";A=0;") != std::string::npos) {
            CHECK(rec.tight);
            ++singletons;
        }
    }
    CHECK(singletons > 0);
}

TEST_CASE("kemperman frozen examples") {
    VerificationReport z4 = verify_kemperman(FiniteGroup::cyclic(4), exhaustive(RecordPolicy::All));
    CHECK(z4.clean());
    const Record* subgroup = find_record(z4, "group=Z4;A=0,2;B=0,2;c=0");
    REQUIRE(subgroup != nullptr);
    CHECK(subgroup->lhs == 2);
    CHECK(subgroup->rhs == 2);
    CHECK(subgroup->tight);

    VerificationReport z5 = verify_kemperman(FiniteGroup::cyclic(5), exhaustive(RecordPolicy::All));
    const Record* rec = find_record(z5, "group=Z5;A=0,1;B=0,1;c=2");
    REQUIRE(rec != nullptr);
    CHECK(rec->lhs == 3);
    CHECK(rec->rhs == 3);
    CHECK(rec->tight);
}

TEST_CASE("kemperman exhaustive on Z6 is clean") {
    VerificationReport r = verify_kemperman(FiniteGroup::cyclic(6), exhaustive());
    CHECK(r.clean());
    CHECK(r.summary.instances > 0);
    CHECK(r.records.empty());  // violations-only policy, no violations
}

TEST_CASE("scherk is the kemperman restriction at compatible c") {
    FiniteGroup g = FiniteGroup::cyclic(5);
    int n = g.order();
    for (uint64_t am = 0; am < 16; ++am) {
        for (uint64_t bm = 0; bm < 16; ++bm) {
            uint64_t a = (am << 1) | 1, b = (bm << 1) | 1;
            uint64_t binv = detail::translated_inverse_mask(g, 0, b);
            if ((a & binv) != 1) continue;  // scherk hypothesis fails
            uint64_t ab = detail::minkowski_mask(g, a, b);
            bool scherk_tight = std::popcount(ab) == std::popcount(a) + std::popcount(b) - 1;
            for (uint64_t m = ab; m;) {
                int c = std::countr_zero(m);
                m &= m - 1;
                uint64_t cbinv = detail::translated_inverse_mask(g, c, b);
                if (std::popcount(a & cbinv) != 1) continue;
                bool kemp_holds = std::popcount(ab) >= std::popcount(a) + std::popcount(b) - 1;
                bool kemp_tight = std::popcount(ab) == std::popcount(a) + std::popcount(b) - 1;
                CHECK(kemp_holds);
                CHECK(kemp_tight == scherk_tight);
            }
        }
    }
}

TEST_CASE("main-finite sweep with frozen tight cases") {
    LoadedGraph lg = parse_graph_spec("circulant:7:0,1,3");
    auto cert = require_certificate(lg);
    VerificationReport r = verify_main_finite(lg, cert, exhaustive(RecordPolicy::Tight));
    CHECK(r.clean());
    CHECK(r.summary.instances == 7 * 64);

    // F={v} is tight
    const Record* singleton = find_record(r, "graph=circulant:7:0,1,3;v=2;F=2");
    REQUIRE(singleton != nullptr);
    CHECK(singleton->tight);

    // F=V is tight by in/out regularity
    const Record* full = find_record(r, "graph=circulant:7:0,1,3;v=0;F=0,1,2,3,4,5,6");
    REQUIRE(full != nullptr);
    CHECK(full->tight);

    // tight implies holds throughout
    for (const auto& rec : r.records) {
        if (rec.tight) CHECK(rec.holds);
    }
}

TEST_CASE("main-finite requires reflexivity and respects the exhaustive cap") {
    LoadedGraph loopless = parse_graph_spec("circulant:5:1,2");
    auto cert = certify_transitivity(loopless.graph, loopless.hint ? &*loopless.hint : nullptr);
    CHECK_THROWS_AS(verify_main_finite(loopless, *cert, exhaustive()), Error);

    LoadedGraph big = parse_graph_spec("circulant:17:0,1");
    auto bigcert = require_certificate(big);
    CHECK_THROWS_AS(verify_main_finite(big, bigcert, exhaustive()), Error);
    CHECK(verify_main_finite(big, bigcert, sampled(200, 7)).clean());
}

TEST_CASE("mainomega, lemmas and mader sweeps are clean on samples") {
    for (const auto& spec : {"circulant:6:0,1,3", "cayley:D4:0,1,4", "cayley:Q8:0,1,6"}) {
        LoadedGraph lg = parse_graph_spec(spec);
        auto cert = require_certificate(lg);
        INFO(spec);
        CHECK(verify_mainomega(lg, cert, exhaustive()).clean());
        CHECK(verify_lemmas(lg, cert, exhaustive()).clean());
    }
    for (const auto& spec : {"circulant:6:1,3", "cayley:D4:1,4", "cayley:Q8:1,6"}) {
        LoadedGraph lg = parse_graph_spec(spec);
        auto cert = require_certificate(lg);
        INFO(spec);
        CHECK(verify_mader(lg, cert, exhaustive()).clean());
    }
}

TEST_CASE("run_sweep over families") {
    SweepSpec spec;
    spec.theorems = {"kemperman"};
    spec.group_family = "cyclic<=6";
    VerificationReport r = run_sweep(spec);
    CHECK(r.clean());
    CHECK(r.summary.instances > 1000);

    SweepSpec empty;
    empty.theorems = {};
    empty.group_family = "catalog";
    VerificationReport er = run_sweep(empty);
    CHECK(er.summary.instances == 0);
    CHECK(er.clean());

    SweepSpec graphs;
    graphs.theorems = {"mader"};
    graphs.graph_family = "circulants<=5:loopless";
    CHECK(run_sweep(graphs).clean());

    SweepSpec missing;
    missing.theorems = {"main"};
    CHECK_THROWS_AS(run_sweep(missing), Error);

    SweepSpec unknown;
    unknown.theorems = {"fermat"};
    unknown.group_family = "Z2";
    CHECK_THROWS_AS(run_sweep(unknown), Error);
}

TEST_CASE("budget guard refuses oversized exhaustive sweeps") {
    SweepOptions opt;
    CHECK_THROWS_AS(verify_kemperman(FiniteGroup::cyclic(16), opt), Error);
    SweepSpec spec;
    spec.theorems = {"kemperman"};
    spec.group_family = "Z16";
    CHECK_THROWS_AS(run_sweep(spec), Error);
    // sampling sidesteps the budget entirely
    CHECK(verify_kemperman(FiniteGroup::cyclic(16), sampled(100, 3)).clean());
}

TEST_CASE("disconnected family members are flagged") {
    SweepSpec spec;
    spec.theorems = {"lemmas"};
    spec.graph_family = "circulant:6:0,2";
    VerificationReport r = run_sweep(spec);
    CHECK(r.clean());
    bool flagged = false;
    for (const auto& rec : r.records) {
        if (rec.instance.find("note=disconnected") != std::string::npos) flagged = true;
    }
    CHECK(flagged);
}

TEST_CASE("reports are deterministic") {
    auto run_kemp = [&](int jobs) {
        SweepOptions opt = sampled(800, 42, RecordPolicy::All);
        opt.jobs = jobs;
        return verify_kemperman(parse_group_spec("D4"), opt);
    };
    std::string a = run_kemp(1).to_json_string();
    std::string b = run_kemp(1).to_json_string();
    std::string c = run_kemp(4).to_json_string();
    CHECK(a == b);
    CHECK(a == c);

    auto run_scherk = [&](int jobs) {
        SweepOptions opt = exhaustive(RecordPolicy::Tight);
        opt.jobs = jobs;
        return verify_scherk(parse_group_spec("D4"), opt);
    };
    CHECK(run_scherk(1).to_json_string() == run_scherk(3).to_json_string());
    CHECK(run_scherk(1).to_csv() == run_scherk(2).to_csv());

    // different seed, different sample set
    SweepOptions other = sampled(800, 43, RecordPolicy::All);
    CHECK(verify_kemperman(parse_group_spec("D4"), other).to_json_string() != a);
}

TEST_CASE("report serialization shapes") {
    VerificationReport r = verify_scherk(FiniteGroup::cyclic(4), exhaustive(RecordPolicy::All));
    json j = r.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j.contains("spec"));
    CHECK(j["summary"]["violations"] == 0);
    CHECK(j["records"].is_array());
    CHECK(!j["records"].empty());

    std::string csv = r.to_csv();
    CHECK(csv.rfind("# schema=1", 0) == 0);
    CHECK(csv.find("theorem,instance,lhs,rhs,holds,tight") != std::string::npos);

    std::string text = r.to_text(0.5);
    CHECK(text.find("RESULT: clean") != std::string::npos);
    CHECK(text.find("runtime") != std::string::npos);
    // runtime is text-only: never part of machine-readable report files
    CHECK(r.to_json_string().find("runtime") == std::string::npos);
    CHECK(csv.find("runtime") == std::string::npos);

    // records sorted by (theorem, instance)
    for (size_t i = 1; i < r.records.size(); ++i) {
        CHECK(std::tie(r.records[i - 1].theorem, r.records[i - 1].instance) <=
              std::tie(r.records[i].theorem, r.records[i].instance));
    }
}

TEST_CASE("random vt instances are reflexive cayley graphs") {
    for (uint64_t i = 0; i < 25; ++i) {
        RandomInstance ri = random_vt_instance(123, i);
        CHECK(ri.lg.graph.reflexive());
        CHECK(ri.lg.group.has_value());
        CHECK(ri.vertex < ri.lg.graph.order());
        CHECK(require_certificate(ri.lg).kind == TransitivityCertificate::Kind::CayleyTranslations);
    }
    // deterministic in (seed, index)
    CHECK(random_vt_instance(9, 4).lg.spec == random_vt_instance(9, 4).lg.spec);
}
