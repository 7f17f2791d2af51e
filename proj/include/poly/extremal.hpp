#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "poly/generator.hpp"
#include "poly/invariants.hpp"
#include "poly/structure.hpp"

namespace poly {

/// Layer-profile hypotheses at a root u of eccentricity r:
///   h1: exactly one vertex at distance r;
///   h2: layers 1 and r-1 have exactly three vertices;
///   h3: every layer 2..r-2 has at least four vertices (vacuous for r = 3).
struct HypothesisReport {
    int root = -1;
    int r = 0;       // eccentricity of the root
    int radius = 0;  // radius of the graph
    bool root_is_central = false;  // ecc(root) == radius
    bool applicable = false;       // root_is_central && r >= 3
    bool h1 = false, h2 = false, h3 = false;
    std::vector<int> layer_sizes;

    bool all() const { return h1 && h2 && h3; }
};

HypothesisReport check_hypotheses(const Graph& g, int root);

enum class Scenario { First, Second, Neither };

/// Distance pattern among the layer-1 and layer-(r-1) path vertices, over
/// all six assignments of the three paths to roles x, y, z:
///   First:  d(x1,z_{r-1}) = d(y1,x_{r-1}) = d(z1,y_{r-1}) = r
///   Second: d(x1,z_{r-1}) = d(y1,x_{r-1}) = d(z1,x_{r-1}) = r
/// First takes precedence; both match-flags are reported.
struct ScenarioPattern {
    Scenario pattern = Scenario::Neither;
    std::array<int, 3> roles{0, 1, 2};  // roles[k] = path index playing role k (x,y,z)
    int dist[3][3] = {};                // dist[i][j] = d(paths[i][1], paths[j][r-1])
    bool first_matches = false;
    bool second_matches = false;
};

ScenarioPattern classify_scenario(const Graph& g, const LayerDecomposition& layers,
                                  const PathSystem& paths);

/// Smallest-size search result for one radius.
struct ExtremalRecord {
    int r = 0;
    int search_cap = 0;
    bool exhausted = false;  // no witness up to the cap
    int min_size = -1;
    std::vector<EmbeddedGraph> witnesses;  // canonical representatives, sorted by code
    std::vector<Code> witness_codes;
    bool unique = false;
    bool prism_match = false;
};

struct SearchOptions {
    Filters filters;
    int jobs = 0;
    const LevelCache* cache = nullptr;
    /// Called after each scanned level: (size, class count, hits so far).
    std::function<void(int, std::size_t, std::size_t)> progress;
};

/// Scans sizes 6..cap in ascending order and stops at the first size that
/// contains a radius-r 3-polytope. The final level is scanned streamwise
/// (only hits are deduplicated), so a cap-level search never holds a full
/// level in memory.
ExtremalRecord min_size_for_radius(int r, int cap, const SearchOptions& opts);

/// m such that g is K2 x C_m, if any.
std::optional<int> prism_cycle_length(const Graph& g);

/// r >= 3 such that g has order 4(r-1) and g is the 2(r-1)-gonal prism.
std::optional<int> recognize_prism(const Graph& g);

/// Consistency checks over every minimal witness and every eccentric root:
/// where the hypotheses hold, prism recognition must succeed and every
/// extracted disjoint-path triple must classify as the first scenario.
struct RootCheck {
    int root = -1;
    HypothesisReport hypotheses;
    bool order_identity_ok = true;  // |V| == 4(r-1) when hypotheses hold
    bool prism_ok = true;
    bool paths_ok = true;  // 3 disjoint paths of length exactly r, layer-aligned
    std::vector<ScenarioPattern> patterns;
    bool counterexample = false;
    std::string note;
};

struct WitnessCheck {
    Code code;
    bool radius_ok = true;
    std::vector<RootCheck> roots;
    bool counterexample = false;
};

struct UniquenessReport {
    int r = 0;
    std::vector<WitnessCheck> witnesses;
    bool all_consistent = true;
    bool second_scenario_seen = false;
};

UniquenessReport verify_uniqueness(const ExtremalRecord& record);

}  // namespace poly
