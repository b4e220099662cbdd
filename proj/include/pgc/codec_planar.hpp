#ifndef PGC_CODEC_PLANAR_HPP
#define PGC_CODEC_PLANAR_HPP

#include <cstdint>
#include <vector>

#include "pgc/pi.hpp"
#include "pgc/plane_graph.hpp"

namespace pgc {

// One split step for general plane/planar graphs: triangulate, cut along a
// cycle separator, and mark each part with a wheel gadget whose hub degree
// avoids every host degree, so the decoder can strip it by degrees alone.
struct PlanarSplit {
    PlaneGraph g1;  // inside part with a k1-wheel attached outside it
    PlaneGraph g2;  // outside part with a k2-wheel inside the separator hole
    std::uint32_t k1 = 0;
    std::uint32_t k2 = 0;
    std::vector<std::uint8_t> original;  // per cycle edge (x_i, x_{i+1})
    std::int32_t separator_len = 0;
};

// Returns an integer k such that H has no node of degree k or k-1, searching
// [max(k_min, ceil(n^0.6)), floor(n^0.7)] first and falling back to
// max(maxdeg + 2, k_min, 5).
int degree_gap(const PlaneGraph& h, int k_min = 2);
std::int64_t degree_gap_over_degrees(const std::vector<std::int64_t>& degrees_sorted,
                                     std::int64_t n, std::int64_t k_min = 2);

PlanarSplit split_planar(const PlaneGraph& g, const PiDescriptor& pi, double rho);

struct WheelInfo {
    NodeId hub = kNoNode;
    std::vector<NodeId> rim;          // w_1..w_k in order
    std::vector<NodeId> attachments;  // x_1..x_l
};

// Recovers the wheel in a split part by degrees and adjacency alone.
WheelInfo identify_wheel(const PlaneGraph& gi, int k, int l);

PlaneGraph merge_planar(const PlaneGraph& g1, const PlaneGraph& g2, std::uint32_t k1,
                        std::uint32_t k2, const std::vector<std::uint8_t>& original);

}  // namespace pgc

#endif  // PGC_CODEC_PLANAR_HPP
