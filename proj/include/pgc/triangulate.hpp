#ifndef PGC_TRIANGULATE_HPP
#define PGC_TRIANGULATE_HPP

#include <vector>

#include "pgc/plane_graph.hpp"

namespace pgc {

struct TriangulateResult {
    PlaneGraph graph;               // same nodes; original edges keep their ids
    std::vector<EdgeId> added;      // ids of added edges, in insertion order
};

// Connects all components with chords drawn inside their shared regions and
// splits every face of size > 3 with chords so that no face exceeds size 3.
// Adds no loops and no parallel edges.  Input must be loop-free.
TriangulateResult triangulate_all_faces(const PlaneGraph& g);

// Variant that tolerates loops on face walks and may add loop chords when a
// walk admits no simple chord; added edges still never duplicate a pair.
TriangulateResult triangulate_all_faces_ex(const PlaneGraph& g, bool allow_loop_chords);

}  // namespace pgc

#endif  // PGC_TRIANGULATE_HPP
