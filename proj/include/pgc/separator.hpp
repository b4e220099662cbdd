#ifndef PGC_SEPARATOR_HPP
#define PGC_SEPARATOR_HPP

#include <vector>

#include "pgc/plane_graph.hpp"

namespace pgc {

// Node-simple cycle with the node counts of its two sides.
struct SeparatorCycle {
    std::vector<Dart> darts;       // walk order: head(darts[i]) = nodes[i]
    std::vector<NodeId> nodes;
    std::int32_t inside_count = 0;   // nodes strictly on the bounded side
    std::int32_t outside_count = 0;
};

// Balanced simple-cycle separator on a connected loop-free plane graph whose
// faces have size at most d: both sides hold at most ceil(2n/3) nodes.  The
// cycle is a fundamental cycle of a breadth-first spanning tree, chosen as
// the shortest balanced one; ties break on the lowest non-tree edge id.
// Throws NoCycle on forests and ContractUnmet when no fundamental cycle is
// balanced (callers fall back to leaf encodings).
SeparatorCycle find_cycle_separator(const PlaneGraph& h, int max_face_size);

}  // namespace pgc

#endif  // PGC_SEPARATOR_HPP
