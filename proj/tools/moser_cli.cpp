// Command-line verifier for the Moser/kernel machinery: per-instance
// computations (mu, kernel, molecules, kernel-graph, mader) and family
// sweeps that check the sumset and boundary inequalities instance by
// instance.
//
// Exit codes: 0 clean, 1 violation or internal inconsistency found,
// 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <moser/all.hpp>

namespace {

using moser::json;

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out, bool allow_csv) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember(allow_csv ? std::vector<std::string>{"text", "json", "csv"}
                                        : std::vector<std::string>{"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write the report to FILE instead of stdout");
}

void emit(const OutputOptions& out, const std::string& payload) {
    if (out.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw moser::Error("cannot write to '" + out.out_path + "'");
    f << payload;
}

struct GraphOptions {
    std::string spec;
    bool reflexive_closure = false;
    bool assume_transitive = false;
};

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
    cmd->add_option("--graph", g.spec, "Graph spec: circulant:n:s1,..., cayley:GROUP:s1,..., file:PATH, or a family")
        ->required();
    cmd->add_flag("--reflexive-closure", g.reflexive_closure, "Add a loop at every vertex on load");
    cmd->add_flag("--assume-transitive", g.assume_transitive,
                  "Accept vertex-transitivity without proof when no hint is available");
}

struct SweepFlags {
    bool exhaustive = false;
    uint64_t samples = 0;
    uint64_t seed = 0;
    int jobs = 1;
    bool force = false;
    std::string record = "violations";
};

void add_sweep_options(CLI::App* cmd, SweepFlags& f) {
    auto* ex = cmd->add_flag("--exhaustive", f.exhaustive, "Enumerate every instance (default)");
    auto* samples = cmd->add_option("--samples", f.samples, "Number of sampled instances per family member");
    auto* seed = cmd->add_option("--seed", f.seed, "PRNG seed (required with --samples)");
    samples->excludes(ex);
    samples->needs(seed);
    cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    cmd->add_flag("--force", f.force, "Override the instance budget and size caps");
    cmd->add_option("--record", f.record, "Which records to keep: violations|tight|all")->capture_default_str();
}

moser::SweepOptions to_options(const SweepFlags& f) {
    moser::SweepOptions opt;
    opt.exhaustive = f.samples == 0;
    opt.samples = f.samples;
    opt.seed = f.seed;
    opt.jobs = f.jobs;
    opt.force = f.force;
    opt.policy = moser::parse_record_policy(f.record);
    return opt;
}

json molecule_json(const moser::Molecule& m) {
    return json{{"members", m.members.to_string()}, {"boundary_size", m.boundary_size}};
}

json mu_json(const moser::MuCertificate& c) {
    return json{{"method", c.method_name()},
                {"value", c.value},
                {"witness", molecule_json(c.witness)},
                {"cut", c.cut.to_string()}};
}

int emit_report(const moser::VerificationReport& report, const OutputOptions& out, double seconds) {
    if (out.format == "json") {
        emit(out, report.to_json_string());
    } else if (out.format == "csv") {
        emit(out, report.to_csv());
    } else {
        emit(out, report.to_text(seconds));
    }
    return report.clean() ? 0 : 1;
}

int run_verify(const std::string& theorem, const std::string& group_family, const GraphOptions& graph,
               const SweepFlags& flags, const OutputOptions& out) {
    moser::SweepSpec spec;
    spec.theorems = {theorem};
    spec.group_family = group_family;
    spec.graph_family = graph.spec;
    spec.reflexive_closure = graph.reflexive_closure;
    spec.assume_transitive = graph.assume_transitive;
    spec.opt = to_options(flags);
    auto start = std::chrono::steady_clock::now();
    moser::VerificationReport report = moser::run_sweep(spec);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit_report(report, out, seconds);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moser: vertex-isoperimetric structures and sumset inequality verification on finite groups and graphs"};
    app.require_subcommand(1);

    // ----- groups list -----
    auto* groups = app.add_subcommand("groups", "Group catalogue helpers");
    groups->require_subcommand(1);
    OutputOptions groups_out;
    auto* groups_list = groups->add_subcommand("list", "List the built-in group catalogue and spec syntax");
    add_output_options(groups_list, groups_out, false);

    // ----- mu -----
    GraphOptions mu_graph;
    OutputOptions mu_out;
    int mu_vertex = 0;
    std::string mu_method = "flow";
    bool mu_force = false;
    auto* mu_cmd = app.add_subcommand("mu", "Minimum Moser-set boundary size at a vertex");
    add_graph_options(mu_cmd, mu_graph);
    mu_cmd->add_option("--vertex", mu_vertex, "Center vertex v")->required();
    mu_cmd->add_option("--method", mu_method, "flow|brute|both")
        ->check(CLI::IsMember({"flow", "brute", "both"}))
        ->capture_default_str();
    mu_cmd->add_flag("--force", mu_force, "Raise the brute-force size cap");
    add_output_options(mu_cmd, mu_out, false);

    // ----- kernel -----
    GraphOptions k_graph;
    OutputOptions k_out;
    int k_vertex = 0;
    auto* k_cmd = app.add_subcommand("kernel", "Inclusion-minimal molecule at a vertex");
    add_graph_options(k_cmd, k_graph);
    k_cmd->add_option("--vertex", k_vertex, "Center vertex v")->required();
    add_output_options(k_cmd, k_out, false);

    // ----- molecules -----
    GraphOptions mol_graph;
    OutputOptions mol_out;
    int mol_vertex = 0;
    bool mol_force = false;
    auto* mol_cmd = app.add_subcommand("molecules", "All minimum-boundary Moser sets at a vertex");
    add_graph_options(mol_cmd, mol_graph);
    mol_cmd->add_option("--vertex", mol_vertex, "Center vertex v")->required();
    mol_cmd->add_flag("--force", mol_force, "Raise the enumeration size cap");
    add_output_options(mol_cmd, mol_out, false);

    // ----- kernel-graph -----
    GraphOptions kg_graph;
    OutputOptions kg_out;
    bool kg_check = false;
    bool kg_force = false;
    auto* kg_cmd = app.add_subcommand("kernel-graph", "Kernel-graph of a certified vertex-transitive graph");
    add_graph_options(kg_cmd, kg_graph);
    kg_cmd->add_flag("--check", kg_check, "Run the kernel-graph lemma checks and bounds");
    kg_cmd->add_flag("--force", kg_force, "Raise the size cap");
    add_output_options(kg_cmd, kg_out, false);

    // ----- mader -----
    GraphOptions md_graph;
    OutputOptions md_out;
    int md_vertex = 0;
    auto* md_cmd = app.add_subcommand("mader", "Out-degree many directed cycles through v, pairwise meeting in v only");
    add_graph_options(md_cmd, md_graph);
    md_cmd->add_option("--vertex", md_vertex, "Center vertex v")->required();
    add_output_options(md_cmd, md_out, false);

    // ----- verify -----
    auto* verify = app.add_subcommand("verify", "Sweep a family and check a theorem instance by instance");
    verify->require_subcommand(1);
    struct VerifyCmd {
        CLI::App* cmd;
        std::string theorem;
        std::string group_family;
        GraphOptions graph;
        SweepFlags flags;
        OutputOptions out;
    };
    std::vector<std::unique_ptr<VerifyCmd>> verify_cmds;
    auto add_verify = [&](const std::string& name, const std::string& help, bool needs_group) {
        auto vc = std::make_unique<VerifyCmd>();
        vc->theorem = name == "main" ? "main" : name;
        vc->cmd = verify->add_subcommand(name, help);
        if (needs_group) {
            vc->cmd->add_option("--group", vc->group_family, "Group spec or family (catalog, cyclic<=N, Z6, D4, ...)")
                ->required();
        } else {
            vc->cmd
                ->add_option("--graph", vc->graph.spec,
                             "Graph spec or family (circulants<=N[:loopless], catalog-graphs[:loopless][:maxv=V], ...)")
                ->required();
            vc->cmd->add_flag("--reflexive-closure", vc->graph.reflexive_closure, "Add loops on load");
            vc->cmd->add_flag("--assume-transitive", vc->graph.assume_transitive,
                              "Accept vertex-transitivity without proof");
        }
        add_sweep_options(vc->cmd, vc->flags);
        add_output_options(vc->cmd, vc->out, true);
        verify_cmds.push_back(std::move(vc));
    };
    add_verify("scherk", "|AB| >= |A|+|B|-1 under the Moser condition", true);
    add_verify("kemperman", "|AB| >= |A|+|B|-|A n cB^-1| for every c in AB", true);
    add_verify("main", "|Gamma(F)| >= |F|+|Gamma(v)|-|Gamma^-(v) n F| for all F containing v", false);
    add_verify("mainomega", "Kernel-graph bound and omega lemma suite", false);
    add_verify("lemmas", "Kernel distinctness, equivariance and dichotomy", false);
    add_verify("mader", "Cycle systems at every vertex", false);

    try {
        app.parse(argc, argv);

        if (*groups_list) {
            json j = json::array();
            for (const auto& spec : moser::catalogue_group_specs()) {
                moser::FiniteGroup g = moser::parse_group_spec(spec);
                j.push_back({{"spec", spec}, {"order", g.order()}, {"abelian", g.abelian()}});
            }
            if (groups_out.format == "json") {
                emit(groups_out, j.dump(2) + "\n");
            } else {
                std::string s = "catalogue groups:\n";
                for (const auto& row : j) {
                    s += "  " + row["spec"].get<std::string>() + "  order " + std::to_string(row["order"].get<int>()) +
                         (row["abelian"].get<bool>() ? "  abelian" : "") + "\n";
                }
                s += "spec syntax: Zn, Dn, Sn (n<=5), Q8, AxB, table:PATH\n";
                emit(groups_out, s);
            }
            return 0;
        }

        if (*mu_cmd) {
            auto lg = moser::parse_graph_spec(mu_graph.spec, mu_graph.reflexive_closure);
            moser::MoserInstance inst(lg.graph, mu_vertex);
            json j{{"command", "mu"}, {"graph", lg.spec}, {"vertex", mu_vertex}};
            if (!moser::weakly_connected(lg.graph)) j["disconnected"] = true;
            json results = json::array();
            bool mismatch = false;
            if (mu_method == "flow" || mu_method == "both") results.push_back(mu_json(moser::mu_flow(inst)));
            if (mu_method == "brute" || mu_method == "both")
                results.push_back(mu_json(moser::mu_brute(inst, mu_force ? 26 : moser::kBruteCap)));
            if (mu_method == "both") {
                mismatch = results[0]["value"] != results[1]["value"];
                j["agreement"] = !mismatch;
            }
            j["results"] = results;
            if (mu_out.format == "json") {
                emit(mu_out, j.dump(2) + "\n");
            } else {
                std::string s = "mu(" + std::to_string(mu_vertex) + ", " + lg.spec +
                                ") = " + std::to_string(results[0]["value"].get<int>()) + "\n";
                for (const auto& r : results)
                    s += "  [" + r["method"].get<std::string>() + "] witness {" +
                         r["witness"]["members"].get<std::string>() + "} cut {" + r["cut"].get<std::string>() + "}\n";
                if (mu_method == "both") s += mismatch ? "METHODS DISAGREE\n" : "methods agree\n";
                emit(mu_out, s);
            }
            return mismatch ? 1 : 0;
        }

        if (*k_cmd) {
            auto lg = moser::parse_graph_spec(k_graph.spec, k_graph.reflexive_closure);
            moser::Kernel k = moser::kernel(moser::MoserInstance(lg.graph, k_vertex));
            json j{{"command", "kernel"},
                   {"graph", lg.spec},
                   {"vertex", k_vertex},
                   {"kernel", k.molecule.members.to_string()},
                   {"atom", k.atom.to_string()},
                   {"mu", k.molecule.boundary_size}};
            if (!moser::weakly_connected(lg.graph)) j["disconnected"] = true;
            if (k_out.format == "json") {
                emit(k_out, j.dump(2) + "\n");
            } else {
                emit(k_out, "K_" + std::to_string(k_vertex) + " = {" + k.molecule.members.to_string() + "}  atom {" +
                                k.atom.to_string() + "}  mu " + std::to_string(k.molecule.boundary_size) + "\n");
            }
            return 0;
        }

        if (*mol_cmd) {
            auto lg = moser::parse_graph_spec(mol_graph.spec, mol_graph.reflexive_closure);
            auto mols =
                moser::all_molecules(moser::MoserInstance(lg.graph, mol_vertex), mol_force ? 26 : moser::kBruteCap);
            json list = json::array();
            for (const auto& m : mols) list.push_back(m.members.to_string());
            json j{{"command", "molecules"},
                   {"graph", lg.spec},
                   {"vertex", mol_vertex},
                   {"mu", mols.front().boundary_size},
                   {"count", mols.size()},
                   {"molecules", list}};
            if (mol_out.format == "json") {
                emit(mol_out, j.dump(2) + "\n");
            } else {
                std::string s = std::to_string(mols.size()) + " molecules at v=" + std::to_string(mol_vertex) +
                                ", mu=" + std::to_string(mols.front().boundary_size) + "\n";
                for (const auto& m : mols) s += "  {" + m.members.to_string() + "}\n";
                emit(mol_out, s);
            }
            return 0;
        }

        if (*kg_cmd) {
            auto lg = moser::parse_graph_spec(kg_graph.spec, kg_graph.reflexive_closure);
            auto cert = moser::require_certificate(lg, kg_graph.assume_transitive);
            auto kg = moser::build_kernel_graph(lg.graph, cert, kg_force ? 64 : moser::kBruteCap);
            json omega = json::array();
            json kernels = json::array();
            json bounds = json::array();
            for (int v = 0; v < lg.graph.order(); ++v) {
                omega.push_back(kg.omega.out(v));
                kernels.push_back(kg.kernels[size_t(v)].to_string());
                moser::BoundRecord b = moser::mainomega_bound(kg, v);
                bounds.push_back({{"v", b.vertex}, {"mu", b.mu}, {"rhs", b.rhs}, {"holds", b.holds}, {"tight", b.tight}});
            }
            json j{{"command", "kernel-graph"},
                   {"graph", lg.spec},
                   {"certificate", cert.kind_name()},
                   {"omega", omega},
                   {"kernels", kernels},
                   {"mu", kg.mu},
                   {"bounds", bounds}};
            bool bad = false;
            if (kg_check) {
                moser::SweepOptions opt;
                opt.force = kg_force;
                opt.policy = moser::RecordPolicy::All;
                auto report = moser::verify_mainomega(lg, cert, opt);
                bad = !report.clean();
                json checks = json::array();
                for (const auto& r : report.records) checks.push_back(r.to_json());
                j["checks"] = checks;
                j["violations"] = report.summary.violations;
            }
            if (kg_out.format == "json") {
                emit(kg_out, j.dump(2) + "\n");
            } else {
                std::string s = "kernel-graph of " + lg.spec + " (certificate: " + std::string(cert.kind_name()) + ")\n";
                for (int v = 0; v < lg.graph.order(); ++v) {
                    s += "  Omega(" + std::to_string(v) + ") = {";
                    bool first = true;
                    for (int u : kg.omega.out(v)) {
                        s += (first ? "" : ",") + std::to_string(u);
                        first = false;
                    }
                    s += "}  K = {" + kg.kernels[size_t(v)].to_string() + "}  mu " + std::to_string(kg.mu[size_t(v)]) +
                         "\n";
                }
                if (kg_check) s += bad ? "CHECKS FAILED\n" : "all checks passed\n";
                emit(kg_out, s);
            }
            return bad ? 1 : 0;
        }

        if (*md_cmd) {
            auto lg = moser::parse_graph_spec(md_graph.spec, md_graph.reflexive_closure);
            auto cert = moser::require_certificate(lg, md_graph.assume_transitive);
            moser::CycleSystem cs = moser::mader_cycles(lg.graph, cert, md_vertex);
            std::string why;
            bool ok = moser::verify_cycle_system(lg.graph, cs, &why);
            json j{{"command", "mader"},
                   {"graph", lg.spec},
                   {"vertex", md_vertex},
                   {"cycles", cs.cycles},
                   {"count", cs.cycles.size()},
                   {"verified", ok}};
            if (!ok) j["violation"] = why;
            if (md_out.format == "json") {
                emit(md_out, j.dump(2) + "\n");
            } else {
                std::string s = std::to_string(cs.cycles.size()) + " cycles through v=" + std::to_string(md_vertex) +
                                " in " + lg.spec + "\n";
                for (const auto& c : cs.cycles) {
                    s += " ";
                    for (size_t i = 0; i < c.size(); ++i) s += (i ? "->" : " ") + std::to_string(c[i]);
                    s += "\n";
                }
                s += ok ? "verified\n" : ("CHECKER FAILED: " + why + "\n");
                emit(md_out, s);
            }
            return ok ? 0 : 1;
        }

        for (const auto& vc : verify_cmds) {
            if (*vc->cmd) return run_verify(vc->theorem, vc->group_family, vc->graph, vc->flags, vc->out);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const moser::InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const moser::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
