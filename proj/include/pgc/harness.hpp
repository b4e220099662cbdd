#ifndef PGC_HARNESS_HPP
#define PGC_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgc/driver.hpp"
#include "pgc/pi.hpp"
#include "pgc/plane_graph.hpp"

namespace pgc {

struct GenSpec {
    enum class Kind { Triangulation, PlaneConnected, PlaneAny, MultiTriangulation };
    Kind kind = Kind::Triangulation;
    int n = 3;
    double deletion_fraction = 0.0;
    std::uint64_t seed = 0;
};

// Random simple plane triangulation: vertex insertions into uniformly chosen
// interior faces followed by n random diagonal-flip attempts.  Deterministic
// for a fixed (n, seed).
PlaneGraph gen_triangulation(int n, std::uint64_t seed);

// Deletes non-tree edges of a random triangulation with the given
// probability (connectivity is kept via a spanning tree), optionally
// sprinkling self-loops and parallel edges on the result.
PlaneGraph gen_plane_graph(int n, double deletion_fraction, std::uint64_t seed,
                           int add_loops = 0, int add_parallel = 0);

PlaneGraph generate(const GenSpec& spec);

// Independent isomorphism oracle (permutation search; parallel edges and
// loops matched explicitly).  Caps at 8 nodes.
bool brute_force_isomorphic(const PlaneGraph& a, const PlaneGraph& b, const PiDescriptor& pi);

struct MeasureRow {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::uint64_t bits = 0;
    double bits_per_edge = 0.0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    double t_encode_ms = 0.0;
    double t_decode_ms = 0.0;
};

MeasureRow measure_one(const PlaneGraph& g, const PiDescriptor& pi, const EncodeConfig& cfg,
                       TableCache& tables);
std::string measure_csv(const std::vector<MeasureRow>& rows);

}  // namespace pgc

#endif  // PGC_HARNESS_HPP
