#ifndef PGC_CODEC_TRI_HPP
#define PGC_CODEC_TRI_HPP

#include <cstdint>

#include "pgc/plane_graph.hpp"

namespace pgc {

// One split step for plane triangulations: cut along a cycle separator, wrap
// each part into a triangulation again, and remember three dfs numbers that
// let the decoder re-align the parts.
struct TriSplit {
    PlaneGraph g1;  // inside part wrapped in a low-degree triangle
    PlaneGraph g2;  // outside part wrapped likewise, separator hole starred from z
    std::uint32_t dfs_x_in_g1 = 0;  // dfs(x, G1, y1)
    std::uint32_t dfs_x_in_g2 = 0;  // dfs(x, G2, y2)
    std::uint32_t dfs_z_in_g2 = 0;  // dfs(z, G2, y2)
    std::int32_t separator_len = 0;
};

// Throws TooSmall when no usable separator exists and SplitNotShrinking when
// the parts fail the shrink factor rho.
TriSplit split_tri(const PlaneGraph& g, double rho);

PlaneGraph merge_tri(const PlaneGraph& g1, const PlaneGraph& g2, std::uint32_t dfs_x_in_g1,
                     std::uint32_t dfs_x_in_g2, std::uint32_t dfs_z_in_g2);

}  // namespace pgc

#endif  // PGC_CODEC_TRI_HPP
