#include "poly/io.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace poly {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// planar_code
// ---------------------------------------------------------------------------

std::size_t write_planar_code(const std::vector<EmbeddedGraph>& graphs, std::ostream& out,
                              bool header) {
    std::size_t bytes = 0;
    if (header) {
        out.write(kPlanarCodeHeader, 15);
        bytes += 15;
    }
    for (const auto& eg : graphs) {
        const int n = eg.order();
        if (n < 1 || n > 255) throw std::invalid_argument("write_planar_code: order must be in 1..255");
        out.put(static_cast<char>(static_cast<unsigned char>(n)));
        ++bytes;
        for (int v = 0; v < n; ++v) {
            for (int w : eg.rotation_at(v)) {
                out.put(static_cast<char>(static_cast<unsigned char>(w + 1)));
                ++bytes;
            }
            out.put(0);
            ++bytes;
        }
    }
    if (!out) throw std::runtime_error("write_planar_code: write failed");
    return bytes;
}

std::size_t write_planar_code_file(const std::vector<EmbeddedGraph>& graphs, const std::string& path,
                                   bool header) {
    std::ostringstream buf(std::ios::binary);
    std::size_t n = write_planar_code(graphs, buf, header);
    atomic_write_file(path, buf.str());
    return n;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t offset) {
    throw std::runtime_error("planar_code: " + what + " at offset " + std::to_string(offset));
}

}  // namespace

std::vector<EmbeddedGraph> read_planar_code(std::istream& in) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    if (data.size() >= 15 && data.compare(0, 15, kPlanarCodeHeader) == 0) pos = 15;

    std::vector<EmbeddedGraph> out;
    while (pos < data.size()) {
        std::size_t start = pos;
        int n = static_cast<unsigned char>(data[pos++]);
        if (n == 0) parse_fail("zero vertex count", start);
        std::vector<std::vector<int>> rot(n);
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= data.size()) parse_fail("truncated record", pos);
                int b = static_cast<unsigned char>(data[pos]);
                if (b == 0) {
                    ++pos;
                    break;
                }
                if (b > n) parse_fail("neighbor byte " + std::to_string(b) + " out of range", pos);
                int w = b - 1;
                if (w == v) parse_fail("self-loop", pos);
                for (int prev : rot[v])
                    if (prev == w) parse_fail("repeated neighbor (parallel edge)", pos);
                rot[v].push_back(w);
                if (v < w) edges.emplace_back(v, w);
                ++pos;
            }
        }
        // symmetry: u lists v exactly when v lists u
        for (int v = 0; v < n; ++v)
            for (int w : rot[v]) {
                bool found = false;
                for (int x : rot[w])
                    if (x == v) found = true;
                if (!found) parse_fail("asymmetric adjacency between " + std::to_string(v) + " and " +
                                       std::to_string(w), start);
            }
        Graph g(n, edges);
        out.emplace_back(std::move(g), std::move(rot));
    }
    return out;
}

std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_planar_code(in);
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

std::string graph6_line(const Graph& g) {
    const int n = g.order();
    if (n < 1 || n > 62) throw std::invalid_argument("graph6: order must be in 1..62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph6_line(const std::string& line) {
    if (line.empty()) throw std::runtime_error("graph6: empty line");
    int n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 1 || n > 62) throw std::runtime_error("graph6: bad order byte");
    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw std::runtime_error("graph6: bad line length for order " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int byte = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
            if (byte < 0 || byte > 63) throw std::runtime_error("graph6: byte out of range");
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
            ++bit;
        }
    return Graph(n, edges);
}

std::size_t write_graph6(const std::vector<Graph>& graphs, std::ostream& out) {
    for (const Graph& g : graphs) out << graph6_line(g) << '\n';
    if (!out) throw std::runtime_error("write_graph6: write failed");
    return graphs.size();
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_graph6_line(line));
    }
    return out;
}

// ---------------------------------------------------------------------------
// digests, files
// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes.data(), bytes.size())));
    return buf;
}

void atomic_write_file(const std::string& path, const std::string& contents) {
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// ---------------------------------------------------------------------------
// level cache
// ---------------------------------------------------------------------------

LevelCache::LevelCache(std::string dir) : dir_(std::move(dir)) {}

std::string LevelCache::level_path(int size) const {
    return dir_ + "/level_" + std::to_string(size) + ".pc";
}

std::string LevelCache::manifest_path(int size) const {
    return dir_ + "/level_" + std::to_string(size) + ".manifest.json";
}

std::optional<std::vector<EmbeddedGraph>> LevelCache::load(int size) const {
    try {
        if (!fs::exists(level_path(size)) || !fs::exists(manifest_path(size))) return std::nullopt;
        auto manifest = ordered_json::parse(read_file(manifest_path(size)));
        std::string payload = read_file(level_path(size));
        if (manifest.value("size", -1) != size) return std::nullopt;
        if (manifest.value("digest", "") != fnv1a64_hex(payload)) return std::nullopt;
        auto graphs = read_planar_code_file(level_path(size));
        if (manifest.value("count", -1) != static_cast<int>(graphs.size())) return std::nullopt;
        for (const auto& eg : graphs)
            if (eg.size() != size) return std::nullopt;
        return graphs;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache == miss; caller regenerates
    }
}

void LevelCache::store(int size, const std::vector<EmbeddedGraph>& graphs) const {
    try {
        std::ostringstream buf(std::ios::binary);
        write_planar_code(graphs, buf, true);
        std::string payload = buf.str();
        atomic_write_file(level_path(size), payload);
        ordered_json manifest;
        manifest["size"] = size;
        manifest["count"] = graphs.size();
        manifest["digest"] = fnv1a64_hex(payload);
        atomic_write_file(manifest_path(size), manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        throw std::runtime_error("level cache: failed to store level " + std::to_string(size) + ": " +
                                 e.what());
    }
}

std::optional<std::vector<Code>> LevelCache::load_codes(int size) const {
    try {
        if (!fs::exists(level_path(size)) || !fs::exists(manifest_path(size))) return std::nullopt;
        auto manifest = ordered_json::parse(read_file(manifest_path(size)));
        std::string payload = read_file(level_path(size));
        if (manifest.value("size", -1) != size) return std::nullopt;
        if (manifest.value("digest", "") != fnv1a64_hex(payload)) return std::nullopt;

        std::size_t pos = 0;
        if (payload.size() >= 15 && payload.compare(0, 15, kPlanarCodeHeader) == 0) pos = 15;
        std::vector<Code> codes;
        while (pos < payload.size()) {
            int n = static_cast<unsigned char>(payload[pos]);
            if (n == 0) return std::nullopt;
            std::size_t start = pos;
            ++pos;
            int terminators = 0;
            while (pos < payload.size() && terminators < n) {
                if (payload[pos] == 0) ++terminators;
                ++pos;
            }
            if (terminators != n) return std::nullopt;
            Code record(payload.begin() + static_cast<std::ptrdiff_t>(start),
                        payload.begin() + static_cast<std::ptrdiff_t>(pos));
            // records must be canonical: decode and re-encode
            EmbeddedGraph rep = canonical_representative(record);
            if (rep.size() != size) return std::nullopt;
            if (canonical_code(rep) != record) return std::nullopt;
            codes.push_back(std::move(record));
        }
        if (manifest.value("count", -1) != static_cast<int>(codes.size())) return std::nullopt;
        return codes;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void LevelCache::store_codes(int size, const std::vector<Code>& codes) const {
    try {
        std::string payload = kPlanarCodeHeader;
        for (const Code& c : codes) payload.append(c.begin(), c.end());
        atomic_write_file(level_path(size), payload);
        ordered_json manifest;
        manifest["size"] = size;
        manifest["count"] = codes.size();
        manifest["digest"] = fnv1a64_hex(payload);
        atomic_write_file(manifest_path(size), manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        throw std::runtime_error("level cache: failed to store level " + std::to_string(size) + ": " +
                                 e.what());
    }
}

// ---------------------------------------------------------------------------
// report documents
// ---------------------------------------------------------------------------

ordered_json ReportDocument::to_json() const {
    ordered_json j;
    j["tool"] = tool;
    j["version"] = version;
    j["command"] = command;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    j["timestamp"] = timestamp;
    j["records"] = records;
    j["graphs"] = graphs;
    j["digest"] = compute_digest();
    return j;
}

std::string ReportDocument::compute_digest() const {
    ordered_json j;
    j["tool"] = tool;
    j["version"] = version;
    j["command"] = command;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    j["timestamp"] = "";
    j["records"] = records;
    j["graphs"] = graphs;
    j["digest"] = "";
    return fnv1a64_hex(j.dump());
}

std::string ReportDocument::serialize() const {
    return to_json().dump(2) + "\n";
}

ReportDocument ReportDocument::from_json(const ordered_json& j, bool verify_digest) {
    ReportDocument doc;
    doc.tool = j.at("tool").get<std::string>();
    doc.version = j.at("version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    for (auto it = j.at("parameters").begin(); it != j.at("parameters").end(); ++it)
        doc.parameters.emplace_back(it.key(), it.value().get<std::string>());
    doc.timestamp = j.at("timestamp").get<std::string>();
    doc.records = j.at("records");
    doc.graphs = j.at("graphs");
    if (verify_digest) {
        std::string stored = j.at("digest").get<std::string>();
        if (stored != doc.compute_digest())
            throw std::runtime_error("report digest mismatch: file corrupted or edited");
    }
    return doc;
}

std::string iso8601_utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string hex_encode(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::vector<std::uint8_t> hex_decode(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::runtime_error("hex_decode: odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::runtime_error("hex_decode: bad digit");
    };
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return out;
}

}  // namespace poly
