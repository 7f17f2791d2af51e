#include "poly/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "poly/extremal.hpp"
#include "poly/generator.hpp"
#include "poly/io.hpp"
#include "poly/oracles.hpp"
#include "poly/version.hpp"

namespace poly {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string cache_dir_from_env() {
    const char* env = std::getenv("POLY_CACHE_DIR");
    return env && *env ? env : ".poly-cache";
}

ordered_json graph_payload(const EmbeddedGraph& eg) {
    std::ostringstream buf(std::ios::binary);
    write_planar_code({eg}, buf, false);
    std::string bytes = buf.str();
    ordered_json j;
    j["order"] = eg.order();
    j["size"] = eg.size();
    j["planar_code_hex"] = hex_encode(std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
    if (eg.order() <= 62) j["graph6"] = graph6_line(eg.graph());
    return j;
}

ordered_json hypothesis_json(const HypothesisReport& h) {
    ordered_json j;
    j["root"] = h.root;
    j["ecc"] = h.r;
    j["radius"] = h.radius;
    j["root_is_central"] = h.root_is_central;
    j["applicable"] = h.applicable;
    j["h1"] = h.h1;
    j["h2"] = h.h2;
    j["h3"] = h.h3;
    j["layer_sizes"] = h.layer_sizes;
    return j;
}

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::First: return "FIRST";
        case Scenario::Second: return "SECOND";
        default: return "NEITHER";
    }
}

ordered_json scenario_json(const ScenarioPattern& sp) {
    ordered_json j;
    j["pattern"] = scenario_name(sp.pattern);
    j["roles"] = sp.roles;
    ordered_json dist = ordered_json::array();
    for (int i = 0; i < 3; ++i) dist.push_back({sp.dist[i][0], sp.dist[i][1], sp.dist[i][2]});
    j["distances"] = dist;
    j["first_matches"] = sp.first_matches;
    j["second_matches"] = sp.second_matches;
    return j;
}

ordered_json extremal_json(const ExtremalRecord& rec) {
    ordered_json j;
    j["r"] = rec.r;
    j["search_cap"] = rec.search_cap;
    j["exhausted"] = rec.exhausted;
    if (!rec.exhausted) {
        j["min_size"] = rec.min_size;
        j["witness_count"] = rec.witnesses.size();
        j["unique"] = rec.unique;
        j["prism_match"] = rec.prism_match;
    }
    return j;
}

ordered_json uniqueness_json(const UniquenessReport& rep) {
    ordered_json j;
    j["r"] = rep.r;
    j["all_consistent"] = rep.all_consistent;
    j["second_scenario_seen"] = rep.second_scenario_seen;
    ordered_json witnesses = ordered_json::array();
    for (const auto& wc : rep.witnesses) {
        ordered_json w;
        w["radius_ok"] = wc.radius_ok;
        w["counterexample"] = wc.counterexample;
        ordered_json roots = ordered_json::array();
        for (const auto& rc : wc.roots) {
            ordered_json r;
            r["root"] = rc.root;
            r["hypotheses"] = hypothesis_json(rc.hypotheses);
            if (rc.hypotheses.all() && rc.hypotheses.applicable) {
                r["order_identity_ok"] = rc.order_identity_ok;
                r["prism_ok"] = rc.prism_ok;
                r["paths_ok"] = rc.paths_ok;
                ordered_json pats = ordered_json::array();
                for (const auto& sp : rc.patterns) pats.push_back(scenario_json(sp));
                r["patterns"] = pats;
            }
            if (!rc.note.empty()) r["note"] = rc.note;
            roots.push_back(r);
        }
        w["roots"] = roots;
        witnesses.push_back(w);
    }
    j["witnesses"] = witnesses;
    return j;
}

void write_report(const ReportDocument& doc, const std::string& path) {
    atomic_write_file(path, doc.serialize());
}

ReportDocument new_report(const std::string& command,
                          std::vector<std::pair<std::string, std::string>> params) {
    ReportDocument doc;
    doc.tool = kToolName;
    doc.version = kToolVersion;
    doc.command = command;
    doc.parameters = std::move(params);
    doc.timestamp = iso8601_utc_now();
    return doc;
}

// ---------------------------------------------------------------------------

int cmd_gen(int max_size, const std::string& out_path, const std::string& format,
            const Filters& filters, int jobs) {
    LevelCache cache(cache_dir_from_env());
    EnumerateOptions opts;
    opts.filters = filters;
    opts.jobs = jobs;
    opts.cache = &cache;

    std::vector<EmbeddedGraph> emitted;
    enumerate_by_size(max_size, opts, [&](const SizeLevel& level) {
        auto selected = output_projection(level, filters);
        std::cout << "size " << level.size << ": " << selected.size() << "\n";
        if (!out_path.empty())
            emitted.insert(emitted.end(), selected.begin(), selected.end());
    });
    if (!out_path.empty()) {
        if (format == "graph6") {
            std::ostringstream buf;
            std::vector<Graph> graphs;
            graphs.reserve(emitted.size());
            for (const auto& eg : emitted) graphs.push_back(eg.graph());
            std::size_t lines = write_graph6(graphs, buf);
            atomic_write_file(out_path, buf.str());
            std::cerr << "wrote " << lines << " graphs to " << out_path << "\n";
        } else {
            std::ostringstream buf(std::ios::binary);
            std::size_t bytes = write_planar_code(emitted, buf, true);
            atomic_write_file(out_path, buf.str());
            std::cerr << "wrote " << bytes << " bytes to " << out_path << "\n";
        }
    }
    return kExitOk;
}

int cmd_radius_search(int r, int cap, bool allow_long, const std::string& report_path, int jobs,
                      std::optional<int> max_order) {
    if (r >= 5 && !allow_long) {
        std::cerr << "radius-search: r >= 5 scans levels up to size " << 6 * (r - 1)
                  << "; pass --allow-long to confirm\n";
        return kExitUsage;
    }
    LevelCache cache(cache_dir_from_env());
    SearchOptions opts;
    opts.jobs = jobs;
    opts.cache = &cache;
    if (max_order) opts.filters.max_order = max_order;
    opts.progress = [](int size, std::size_t count, std::size_t hits) {
        std::cerr << "scanned size " << size << ": " << count << " graph(s), " << hits
                  << " radius hit(s)\n";
    };

    ExtremalRecord rec = min_size_for_radius(r, cap, opts);
    UniquenessReport audit = verify_uniqueness(rec);

    ReportDocument doc = new_report("radius-search", {{"radius", std::to_string(r)},
                                                      {"cap", std::to_string(cap)}});
    ordered_json record = extremal_json(rec);
    record["uniqueness_checks"] = uniqueness_json(audit);
    doc.records.push_back(record);
    for (std::size_t i = 0; i < rec.witnesses.size(); ++i)
        doc.graphs["witness_" + std::to_string(i)] = graph_payload(rec.witnesses[i]);
    if (!report_path.empty()) write_report(doc, report_path);

    if (rec.exhausted) {
        std::cout << "r=" << r << ": exhausted up to size " << cap << ", no witness\n";
        return kExitOk;
    }
    std::cout << "r=" << r << ": min size " << rec.min_size << ", " << rec.witnesses.size()
              << " witness(es), unique=" << (rec.unique ? "true" : "false")
              << ", prism_match=" << (rec.prism_match ? "true" : "false") << "\n";
    bool failed = !rec.unique || !rec.prism_match || !audit.all_consistent ||
                  audit.second_scenario_seen;
    if (failed) {
        std::cerr << "radius-search: verification failure (counterexample candidate found)\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_check(const std::string& input, bool hypotheses, bool scenario,
              const std::string& report_path) {
    std::vector<EmbeddedGraph> graphs = read_planar_code_file(input);
    ReportDocument doc = new_report("check", {{"input", input},
                                              {"hypotheses", hypotheses ? "true" : "false"},
                                              {"scenario", scenario ? "true" : "false"}});
    bool dichotomy_violated = false;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi].graph();
        ordered_json rec;
        rec["graph_index"] = gi;
        rec["order"] = g.order();
        rec["size"] = g.size();
        auto [radius, center] = radius_and_center(g);
        rec["radius"] = radius;
        rec["center"] = center;
        if (hypotheses || scenario) {
            ordered_json roots = ordered_json::array();
            for (int root : center) {
                ordered_json rj;
                HypothesisReport h = check_hypotheses(g, root);
                rj["hypotheses"] = hypothesis_json(h);
                if (scenario && h.all() && h.applicable) {
                    LayerDecomposition ld = bfs_layers(g, root);
                    int sink = ld.layers[h.r].front();
                    DisjointPathsResult dp = disjoint_paths(g, root, sink, 3);
                    if (dp.ok() && paths_layer_aligned(*dp.paths, ld)) {
                        ScenarioPattern sp = classify_scenario(g, ld, *dp.paths);
                        rj["scenario"] = scenario_json(sp);
                        if (sp.pattern == Scenario::Neither) dichotomy_violated = true;
                    } else {
                        rj["scenario"] = "unavailable";
                    }
                }
                roots.push_back(rj);
            }
            rec["roots"] = roots;
        }
        doc.records.push_back(rec);
        doc.graphs["graph_" + std::to_string(gi)] = graph_payload(graphs[gi]);
    }
    if (!report_path.empty()) write_report(doc, report_path);
    std::cout << "checked " << graphs.size() << " graph(s)\n";
    return dichotomy_violated ? kExitVerificationFailure : kExitOk;
}

int cmd_prism(int r, const std::string& out_path) {
    EmbeddedGraph p = prism(r);
    std::size_t bytes = write_planar_code_file({p}, out_path, true);
    std::cout << "prism r=" << r << ": order " << p.order() << ", size " << p.size() << ", "
              << bytes << " bytes\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest: oracle suites at fixed desk-scale sizes.
// ---------------------------------------------------------------------------

int cmd_selftest(int jobs) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };

    // generator vs brute-force census, sizes 6..11
    {
        std::map<int, std::vector<Code>> census = brute_force_polyhedral_census(7);
        std::map<int, std::vector<Code>> levels;
        EnumerateOptions opts;
        opts.jobs = jobs;
        enumerate_by_size(11, opts, [&](const SizeLevel& l) { levels[l.size] = l.codes; });
        bool ok = true;
        for (int q = 6; q <= 11; ++q)
            if (levels[q] != census[q]) ok = false;
        report("generator level contents match brute-force census (sizes 6..11)", ok);
        int expected[] = {1, 0, 1, 2};
        bool counts_ok = true;
        for (int q = 6; q <= 9; ++q)
            if (static_cast<int>(levels[q].size()) != expected[q - 6]) counts_ok = false;
        report("level counts 6..9 are 1,0,1,2", counts_ok);
    }

    // flow connectivity vs exhaustive separator search
    {
        bool ok = true;
        std::vector<Graph> corpus = {complete_graph(4), complete_graph(5), cycle_graph(6),
                                     prism(3).graph(), circular_prism(5).graph(), pyramid(4).graph(),
                                     path_graph(5), complete_bipartite(3, 3)};
        for (const Graph& g : corpus)
            for (int k = 1; k <= 3; ++k) {
                if (g.order() <= k) continue;
                if (vertex_connectivity_at_least(g, k) != brute_force_connectivity_at_least(g, k))
                    ok = false;
            }
        report("flow connectivity agrees with exhaustive separator search", ok);
    }

    // planarity vs small Kuratowski oracle on every connected graph, order <= 5
    {
        bool ok = true;
        for (int n = 3; n <= 5 && ok; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
            for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (std::size_t b = 0; b < pairs.size(); ++b)
                    if (mask & (1u << b)) edges.push_back(pairs[b]);
                Graph g(n, edges);
                if (small_graph_nonplanar(g) == planarity_test(g)) {
                    ok = false;
                    break;
                }
            }
        }
        report("planarity oracle agrees with Kuratowski search (order <= 5)", ok);
    }

    // prism identities
    {
        bool ok = true;
        for (int r = 3; r <= 10; ++r) {
            EmbeddedGraph p = prism(r);
            if (p.order() != 4 * (r - 1) || p.size() != 6 * (r - 1)) ok = false;
            if (!is_k_regular(p.graph(), 3)) ok = false;
            if (radius_and_center(p.graph()).first != r) ok = false;
            if (!euler_holds(p)) ok = false;
        }
        report("prism identities for r = 3..10", ok);
    }

    // duality involution and codec round trip on levels <= 12
    {
        bool ok = true;
        EnumerateOptions opts;
        opts.jobs = jobs;
        std::vector<EmbeddedGraph> all;
        enumerate_by_size(12, opts, [&](const SizeLevel& l) {
            all.insert(all.end(), l.graphs.begin(), l.graphs.end());
        });
        for (const EmbeddedGraph& eg : all) {
            if (!is_isomorphic(dual(dual(eg)), eg)) ok = false;
            if (!euler_holds(eg)) ok = false;
        }
        std::ostringstream buf(std::ios::binary);
        write_planar_code(all, buf, true);
        std::istringstream in(buf.str());
        auto back = read_planar_code(in);
        if (back.size() != all.size()) ok = false;
        for (std::size_t i = 0; i < back.size() && ok; ++i)
            if (canonical_code(back[i]) != canonical_code(all[i])) ok = false;
        report("dual involution, Euler and planar_code round trip (levels 6..12)", ok);
    }

    std::cout << (failures == 0 ? "selftest: all suites passed" : "selftest: FAILURES") << "\n";
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& argv) {
    CLI::App app{std::string(kToolName) + " - polyhedral graph enumeration and radius extremal search"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "enumerate 3-polytopes by size");
    int gen_max_size = 0;
    std::string gen_out, gen_format = "planar_code";
    int gen_max_order = 0;
    bool gen_cubic = false;
    int gen_jobs = 0;
    gen->add_option("--max-size", gen_max_size, "largest edge count")->required();
    gen->add_option("--out", gen_out, "output file");
    gen->add_option("--format", gen_format, "planar_code|graph6")
        ->check(CLI::IsMember({"planar_code", "graph6"}));
    gen->add_option("--max-order", gen_max_order, "drop graphs with more vertices");
    gen->add_flag("--cubic-only", gen_cubic, "emit 3-regular graphs only");
    gen->add_option("--jobs", gen_jobs, "worker threads (0 = hardware)");

    // radius-search
    auto* rs = app.add_subcommand("radius-search", "minimum size of a 3-polytope of given radius");
    int rs_radius = 0, rs_cap = 0, rs_jobs = 0, rs_max_order = 0;
    bool rs_allow_long = false;
    std::string rs_report;
    rs->add_option("--radius", rs_radius, "target radius r >= 3")->required();
    rs->add_option("--cap", rs_cap, "size cap (default 6(r-1))");
    rs->add_flag("--allow-long", rs_allow_long, "confirm long-running searches (r >= 5)");
    rs->add_option("--report", rs_report, "report file")->required();
    rs->add_option("--jobs", rs_jobs, "worker threads (0 = hardware)");
    rs->add_option("--max-order", rs_max_order, "restrict the searched universe by order");

    // check
    auto* check = app.add_subcommand("check", "analyze graphs from a planar_code file");
    std::string check_input, check_report;
    bool check_hyp = false, check_scen = false;
    check->add_option("--input", check_input, "planar_code file")->required();
    check->add_flag("--hypotheses", check_hyp, "report layer hypotheses per eccentric root");
    check->add_flag("--scenario", check_scen, "classify distance scenarios where hypotheses hold");
    check->add_option("--report", check_report, "report file")->required();

    // prism
    auto* pr = app.add_subcommand("prism", "write the 2(r-1)-gonal prism");
    int prism_r = 0;
    std::string prism_out;
    pr->add_option("--r", prism_r, "radius r >= 3")->required();
    pr->add_option("--out", prism_out, "planar_code output file")->required();

    // selftest
    auto* st = app.add_subcommand("selftest", "run the oracle suites");
    int st_jobs = 0;
    st->add_option("--jobs", st_jobs, "worker threads (0 = hardware)");

    std::vector<std::string> args(argv);
    std::reverse(args.begin(), args.end());  // CLI11 parses reversed vectors
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        std::cout << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            Filters f;
            if (gen_max_order > 0) f.max_order = gen_max_order;
            f.cubic_only = gen_cubic;
            return cmd_gen(gen_max_size, gen_out, gen_format, f, gen_jobs);
        }
        if (rs->parsed()) {
            if (rs_radius < 3) {
                std::cerr << "radius-search: --radius must be >= 3\n";
                return kExitUsage;
            }
            int cap = rs_cap > 0 ? rs_cap : 6 * (rs_radius - 1);
            std::optional<int> mo;
            if (rs_max_order > 0) mo = rs_max_order;
            return cmd_radius_search(rs_radius, cap, rs_allow_long, rs_report, rs_jobs, mo);
        }
        if (check->parsed()) return cmd_check(check_input, check_hyp, check_scen, check_report);
        if (pr->parsed()) return cmd_prism(prism_r, prism_out);
        if (st->parsed()) return cmd_selftest(st_jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace poly
