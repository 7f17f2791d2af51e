#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "poly/embedding.hpp"
#include "poly/graph.hpp"

namespace poly {

using ordered_json = nlohmann::ordered_json;

// --- planar_code: embedded-graph interchange ------------------------------
// Optional 15-byte header ">>planar_code<<", then per graph: one byte n,
// then for each vertex 1..n its neighbors in rotation order (1-indexed
// bytes), each list terminated by a zero byte.

constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

/// Returns total bytes written. Orders above 255 are rejected.
std::size_t write_planar_code(const std::vector<EmbeddedGraph>& graphs, std::ostream& out,
                              bool header = true);
std::size_t write_planar_code_file(const std::vector<EmbeddedGraph>& graphs, const std::string& path,
                                   bool header = true);

/// Inverse of write_planar_code; header optional. Validates rotation
/// consistency and simplicity; parse errors carry the byte offset.
std::vector<EmbeddedGraph> read_planar_code(std::istream& in);
std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path);

// --- graph6: abstract-graph interchange (order <= 62) ----------------------

std::string graph6_line(const Graph& g);
Graph parse_graph6_line(const std::string& line);

/// One graph per line; returns the line count.
std::size_t write_graph6(const std::vector<Graph>& graphs, std::ostream& out);
std::vector<Graph> read_graph6(std::istream& in);

// --- digests and atomic file writes ----------------------------------------

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::string fnv1a64_hex(const std::string& bytes);

/// Write-then-rename; never leaves a partial file at `path`.
void atomic_write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// --- resumable level cache --------------------------------------------------
// One planar_code file per size plus a sidecar manifest (size, count,
// content digest). A digest mismatch or unreadable file is treated as a
// miss, forcing regeneration.

class LevelCache {
public:
    explicit LevelCache(std::string dir);

    std::optional<std::vector<EmbeddedGraph>> load(int size) const;
    void store(int size, const std::vector<EmbeddedGraph>& graphs) const;

    /// Canonical codes coincide with planar_code records, so large levels
    /// can be cached without materializing the graphs. load_codes validates
    /// each record by decode + re-encode.
    std::optional<std::vector<Code>> load_codes(int size) const;
    void store_codes(int size, const std::vector<Code>& codes) const;

    std::string level_path(int size) const;
    std::string manifest_path(int size) const;
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
};

// --- report documents --------------------------------------------------------
// Human-readable structured report with fixed field order and a content
// digest. The timestamp is excluded from the digest so identical commands
// give byte-identical reports modulo that field.

struct ReportDocument {
    std::string tool;
    std::string version;
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string timestamp;
    ordered_json records = ordered_json::array();
    ordered_json graphs = ordered_json::object();

    std::string compute_digest() const;
    ordered_json to_json() const;  // includes the digest
    std::string serialize() const;

    /// Throws std::runtime_error when the stored digest does not match.
    static ReportDocument from_json(const ordered_json& j, bool verify_digest = true);
};

std::string iso8601_utc_now();
std::string hex_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> hex_decode(const std::string& hex);

}  // namespace poly
