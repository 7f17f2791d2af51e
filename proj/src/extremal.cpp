#include "poly/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <stdexcept>

#include "poly/parallel.hpp"

namespace poly {

HypothesisReport check_hypotheses(const Graph& g, int root) {
    HypothesisReport rep;
    rep.root = root;
    auto [radius, center] = radius_and_center(g);
    LayerDecomposition ld = bfs_layers(g, root);
    rep.r = ld.ecc;
    rep.radius = radius;
    rep.root_is_central = (ld.ecc == radius);
    rep.applicable = rep.root_is_central && rep.r >= 3;
    rep.layer_sizes = ld.layer_sizes();
    const int r = rep.r;
    rep.h1 = r >= 1 && rep.layer_sizes[r] == 1;
    rep.h2 = r >= 2 && rep.layer_sizes[1] == 3 && rep.layer_sizes[r - 1] == 3;
    rep.h3 = true;  // vacuous when the range 2..r-2 is empty (r <= 3)
    for (int i = 2; i <= r - 2; ++i)
        if (rep.layer_sizes[i] < 4) rep.h3 = false;
    return rep;
}

namespace {

void validate_path_system(const Graph& g, const LayerDecomposition& layers, const PathSystem& ps) {
    if (ps.paths.size() != 3) throw std::invalid_argument("classify_scenario: need exactly 3 paths");
    if (ps.source != layers.root)
        throw std::invalid_argument("classify_scenario: path source is not the layer root");
    const int r = layers.ecc;
    std::vector<char> seen(g.order(), 0);
    for (const auto& path : ps.paths) {
        if (static_cast<int>(path.size()) != r + 1)
            throw std::invalid_argument("classify_scenario: path length != r");
        if (path.front() != ps.source || path.back() != ps.sink)
            throw std::invalid_argument("classify_scenario: path endpoints mismatch");
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                throw std::invalid_argument("classify_scenario: non-adjacent consecutive vertices");
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (seen[path[i]])
                throw std::invalid_argument("classify_scenario: paths share an interior vertex");
            seen[path[i]] = 1;
        }
    }
    if (!paths_layer_aligned(ps, layers))
        throw std::invalid_argument("classify_scenario: path vertices not layer-aligned");
}

}  // namespace

ScenarioPattern classify_scenario(const Graph& g, const LayerDecomposition& layers,
                                  const PathSystem& paths) {
    validate_path_system(g, layers, paths);
    const int r = layers.ecc;
    ScenarioPattern sp;
    for (int i = 0; i < 3; ++i) {
        LayerDecomposition from_first = bfs_layers(g, paths.paths[i][1]);
        for (int j = 0; j < 3; ++j) sp.dist[i][j] = from_first.layer_of[paths.paths[j][r - 1]];
    }
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> first_roles{0, 1, 2}, second_roles{0, 1, 2};
    do {
        int x = perm[0], y = perm[1], z = perm[2];
        bool first = sp.dist[x][z] == r && sp.dist[y][x] == r && sp.dist[z][y] == r;
        bool second = sp.dist[x][z] == r && sp.dist[y][x] == r && sp.dist[z][x] == r;
        if (first && !sp.first_matches) {
            sp.first_matches = true;
            first_roles = perm;
        }
        if (second && !sp.second_matches) {
            sp.second_matches = true;
            second_roles = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (sp.first_matches) {
        sp.pattern = Scenario::First;
        sp.roles = first_roles;
    } else if (sp.second_matches) {
        sp.pattern = Scenario::Second;
        sp.roles = second_roles;
    } else {
        sp.pattern = Scenario::Neither;
    }
    return sp;
}

std::optional<int> prism_cycle_length(const Graph& g) {
    const int n = g.order();
    if (n < 6 || n % 2 != 0) return std::nullopt;
    const int m = n / 2;
    if (g.size() != 3 * m || !is_k_regular(g, 3)) return std::nullopt;
    PlanarityResult pr = is_planar(g);
    if (!pr.planar) return std::nullopt;
    if (is_isomorphic(*pr.embedding, circular_prism(m))) return m;
    return std::nullopt;
}

std::optional<int> recognize_prism(const Graph& g) {
    if (g.order() % 4 != 0) return std::nullopt;
    const int r = g.order() / 4 + 1;
    if (r < 3) return std::nullopt;
    if (auto m = prism_cycle_length(g); m && *m == 2 * (r - 1)) return r;
    return std::nullopt;
}

namespace {

// radius(g) == r, rejecting early once some eccentricity drops below r.
bool radius_equals(const Graph& g, int r) {
    int min_ecc = g.order();
    for (int v = 0; v < g.order(); ++v) {
        int e = eccentricity(g, v);
        min_ecc = std::min(min_ecc, e);
        if (min_ecc < r) return false;
    }
    return min_ecc == r;
}

std::vector<int> radius_hits(const SizeLevel& level, int r, int jobs) {
    std::vector<char> hit(level.count(), 0);
    parallel_chunks(level.count(), jobs, [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            hit[i] = radius_equals(level_member(level, i).graph(), r) ? 1 : 0;
    });
    std::vector<int> idx;
    for (std::size_t i = 0; i < hit.size(); ++i)
        if (hit[i]) idx.push_back(static_cast<int>(i));
    return idx;
}

void finalize_record(ExtremalRecord& rec) {
    rec.unique = rec.witnesses.size() == 1;
    rec.prism_match = !rec.witnesses.empty();
    for (const EmbeddedGraph& w : rec.witnesses) {
        auto pr = recognize_prism(w.graph());
        if (!pr || *pr != rec.r) rec.prism_match = false;
    }
}

}  // namespace

ExtremalRecord min_size_for_radius(int r, int cap, const SearchOptions& opts) {
    if (r < 3) throw std::invalid_argument("min_size_for_radius: need r >= 3");
    if (cap < 6) throw std::invalid_argument("min_size_for_radius: need cap >= 6");
    ExtremalRecord rec;
    rec.r = r;
    rec.search_cap = cap;

    // the search works on code-only levels so large levels never hold
    // materialized graph vectors
    auto level_from_cache = [&](int q) -> std::optional<SizeLevel> {
        if (!opts.cache) return std::nullopt;
        auto cached = opts.cache->load_codes(q);
        if (!cached) return std::nullopt;
        SizeLevel level;
        level.size = q;
        level.complete = true;
        level.codes = std::move(*cached);
        std::sort(level.codes.begin(), level.codes.end());
        return level;
    };

    auto scan_level = [&](const SizeLevel& level) {
        std::vector<int> hits = radius_hits(level, r, opts.jobs);
        if (hits.empty()) return false;
        rec.min_size = level.size;
        for (int i : hits) {
            rec.witnesses.push_back(level_member(level, i));
            rec.witness_codes.push_back(level.codes[i]);
        }
        return true;
    };

    SizeLevel prev;
    bool found = false;
    for (int q = 6; q <= cap && !found; ++q) {
        std::optional<SizeLevel> cached = level_from_cache(q);
        if (q < cap || cached) {
            SizeLevel level;
            if (cached) {
                level = std::move(*cached);
            } else {
                std::set<Code> codes;
                expand_candidates(prev, q, opts.filters, opts.jobs,
                                  [](const EmbeddedGraph&) { return true; },
                                  [&](const EmbeddedGraph&, const Code& c) { codes.insert(c); });
                level.size = q;
                level.complete = true;
                level.codes.assign(codes.begin(), codes.end());
                if (opts.cache) opts.cache->store_codes(q, level.codes);
            }
            found = scan_level(level);
            if (opts.progress) opts.progress(q, level.count(), rec.witnesses.size());
            prev = std::move(level);
        } else {
            // final level: stream candidates, deduplicate radius hits only
            std::map<Code, EmbeddedGraph> hits;
            expand_candidates(prev, q, opts.filters, opts.jobs,
                              [&](const EmbeddedGraph& child) { return radius_equals(child.graph(), r); },
                              [&](const EmbeddedGraph&, const Code& code) {
                                  hits.emplace(code, canonical_representative(code));
                              });
            if (!hits.empty()) {
                rec.min_size = q;
                for (auto& [code, eg] : hits) {
                    rec.witness_codes.push_back(code);
                    rec.witnesses.push_back(std::move(eg));
                }
                found = true;
            }
            if (opts.progress) opts.progress(q, hits.size(), hits.size());
        }
    }
    if (!found) {
        rec.exhausted = true;
        return rec;
    }
    finalize_record(rec);
    return rec;
}

namespace {

std::vector<std::vector<int>> path_order_seeds(int n) {
    std::vector<std::vector<int>> seeds;
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    seeds.push_back(identity);
    std::vector<int> reversed(identity.rbegin(), identity.rend());
    seeds.push_back(reversed);
    // two fixed LCG shuffles
    for (std::uint64_t seed : {1ull, 2ull}) {
        std::vector<int> perm = identity;
        std::uint64_t state = seed;
        for (int i = n - 1; i > 0; --i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            std::swap(perm[i], perm[state % static_cast<std::uint64_t>(i + 1)]);
        }
        seeds.push_back(perm);
    }
    return seeds;
}

}  // namespace

UniquenessReport verify_uniqueness(const ExtremalRecord& record) {
    UniquenessReport rep;
    rep.r = record.r;
    if (record.exhausted) return rep;
    const int r = record.r;
    for (std::size_t wi = 0; wi < record.witnesses.size(); ++wi) {
        const Graph& g = record.witnesses[wi].graph();
        WitnessCheck wc;
        wc.code = record.witness_codes[wi];
        auto [radius, center] = radius_and_center(g);
        wc.radius_ok = (radius == r);
        if (!wc.radius_ok) wc.counterexample = true;
        for (int root : center) {
            RootCheck rc;
            rc.root = root;
            rc.hypotheses = check_hypotheses(g, root);
            if (!rc.hypotheses.all() || !rc.hypotheses.applicable) {
                wc.roots.push_back(std::move(rc));
                continue;
            }
            if (g.order() != 4 * (r - 1)) {
                rc.order_identity_ok = false;
                rc.counterexample = true;
                rc.note = "order != 4(r-1) under hypotheses";
            }
            auto pr = recognize_prism(g);
            if (!pr || *pr != r) {
                rc.prism_ok = false;
                rc.counterexample = true;
                rc.note += std::string(rc.note.empty() ? "" : "; ") + "prism recognition failed";
            }
            LayerDecomposition ld = bfs_layers(g, root);
            int sink = ld.layers[r].front();  // unique by h1
            for (const auto& order : path_order_seeds(g.order())) {
                DisjointPathsResult dp = disjoint_paths(g, root, sink, 3, order);
                if (!dp.ok()) {
                    rc.paths_ok = false;
                    rc.counterexample = true;
                    rc.note += std::string(rc.note.empty() ? "" : "; ") + "no disjoint path triple";
                    continue;
                }
                bool lengths_ok = true;
                for (const auto& path : dp.paths->paths)
                    if (static_cast<int>(path.size()) != r + 1) lengths_ok = false;
                if (!lengths_ok || !paths_layer_aligned(*dp.paths, ld)) {
                    rc.paths_ok = false;
                    rc.counterexample = true;
                    rc.note += std::string(rc.note.empty() ? "" : "; ") + "path triple not length-r layer-aligned";
                    continue;
                }
                ScenarioPattern sp = classify_scenario(g, ld, *dp.paths);
                if (sp.second_matches) rep.second_scenario_seen = true;
                if (sp.pattern != Scenario::First) {
                    rc.counterexample = true;
                    rc.note += std::string(rc.note.empty() ? "" : "; ") + "scenario not First";
                }
                rc.patterns.push_back(sp);
            }
            if (rc.counterexample) wc.counterexample = true;
            wc.roots.push_back(std::move(rc));
        }
        if (wc.counterexample) rep.all_consistent = false;
        rep.witnesses.push_back(std::move(wc));
    }
    return rep;
}

}  // namespace poly
