#ifndef PGC_DRIVER_HPP
#define PGC_DRIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgc/base_table.hpp"
#include "pgc/bits.hpp"
#include "pgc/pi.hpp"
#include "pgc/plane_graph.hpp"

namespace pgc {

struct EncodeConfig {
    int b_enum = 6;       // index-leaf cap (3 effective when pi allows loops/multis)
    int b_explicit = 64;  // explicit-leaf cap
    double rho = 0.95;    // accept a split only if max child <= rho * n
    double c_sep = 2.0;   // separator size constant checked by tests

    int effective_b_enum(const PiDescriptor& pi) const {
        int cap = pi.simple() ? b_enum : std::min(b_enum, 3);
        return std::min(cap, static_cast<int>(TableCache::kMaxEnumerationNodes));
    }
};

// Accounting in the paper's terms: p sums leaf node counts, q sums the
// side-string and directory overhead of internal nodes.
struct CodeStats {
    std::int64_t n0 = 0;
    std::int64_t m0 = 0;
    std::uint64_t total_bits = 0;    // whole blob including header and checksum
    std::uint64_t payload_bits = 0;  // root code bits
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    int index_leaves = 0;
    int explicit_leaves = 0;
    int internal_nodes = 0;
    // S(i): graphs with size in (lambda*2^{i-1}, lambda*2^i]; S(0) holds the
    // leaves at or below lambda = max(b_enum, 2)
    std::vector<std::pair<std::int64_t, std::int64_t>> levels;  // {count, node total}

    double bits_per_node() const { return n0 ? double(total_bits) / double(n0) : 0.0; }
    double bits_per_edge() const { return m0 ? double(total_bits) / double(m0) : 0.0; }
    std::string to_text() const;
};

// Encodes a validated pi-graph into a self-describing binary blob (.pgc).
std::vector<std::uint8_t> encode(const PlaneGraph& g, const PiDescriptor& pi,
                                 const EncodeConfig& cfg, TableCache& tables,
                                 CodeStats* stats = nullptr);

struct DecodeResult {
    PlaneGraph graph;
    PiDescriptor pi;
};

DecodeResult decode(const std::vector<std::uint8_t>& blob, TableCache& tables);

CodeStats stats_of_blob(const std::vector<std::uint8_t>& blob, TableCache& tables);

// Fallback leaf serialization: the rotation system spelled out.
BitString explicit_leaf_encode(const PlaneGraph& g);
PlaneGraph explicit_leaf_decode(BitReader& in, bool directed);

}  // namespace pgc

#endif  // PGC_DRIVER_HPP
