#ifndef PGC_PI_HPP
#define PGC_PI_HPP

#include <string>
#include <vector>

#include "pgc/plane_graph.hpp"

namespace pgc {

enum class EmbedMode : std::uint8_t { Plane = 0, Planar = 1 };

enum class Connectivity : std::uint8_t {
    Any = 0,
    Connected = 1,
    Biconnected = 2,
    Triconnected = 3,
    Triangulated = 4,
};

// The property conjunction pi: embedding mode, directedness, connectivity
// class, and the self-loop / parallel-edge bounds.
struct PiDescriptor {
    EmbedMode embedding = EmbedMode::Plane;
    bool directed = false;
    Connectivity connectivity = Connectivity::Connected;
    int l3 = 0;  // max self-loops per node
    int l4 = 1;  // max multiplicity per unordered node pair

    bool simple() const { return l3 == 0 && l4 <= 1; }
    bool triangulated() const { return connectivity == Connectivity::Triangulated; }

    // grammar: plane|planar,dir|undir,tri|3conn|2conn|conn|any,loops=<k>,multi=<k>
    static PiDescriptor parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const PiDescriptor&) const = default;
};

// Violations as human-readable strings; empty means G satisfies pi.
std::vector<std::string> validate(const PlaneGraph& g, const PiDescriptor& pi);

// Canonical code under pi's distinctness relation.
std::string canonical_code(const PlaneGraph& g, const PiDescriptor& pi, int planar_cap = 8);

// Equality under pi: plane identity or abstract isomorphism.
bool pi_equal(const PlaneGraph& a, const PlaneGraph& b, const PiDescriptor& pi,
              int planar_cap = 8);

bool is_biconnected(const PlaneGraph& g);
bool is_triconnected(const PlaneGraph& g);

}  // namespace pgc

#endif  // PGC_PI_HPP
