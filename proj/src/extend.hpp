#ifndef PGC_SRC_EXTEND_HPP
#define PGC_SRC_EXTEND_HPP

#include <set>
#include <vector>

#include "pgc/plane_graph.hpp"

namespace pgc {
namespace detail {

// Grows a graph by appending nodes and edges, with rotations derived from an
// explicit list of the new face orbits: since next(d) = face_successor of
// twin(d), listing every new face as a dart cycle pins the rotation changes.
struct Extension {
    explicit Extension(const PlaneGraph& g)
        : n(g.node_count()), directed(g.directed()) {
        head.resize(g.dart_count());
        next.resize(g.dart_count());
        for (Dart d = 0; d < g.dart_count(); ++d) {
            head[d] = g.head(d);
            next[d] = g.next(d);
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            forward.push_back(g.edge_forward(e) ? 1 : 0);
        for (std::int32_t c = 0; c < g.component_count(); ++c) {
            comp_host.push_back(g.component_host(c));
            comp_boundary.push_back(g.component_boundary(c));
        }
    }

    NodeId add_node() { return n++; }

    // Appends an edge; rotations are set later by faces().  Direction flag
    // follows the low-id to high-id rule.
    Dart add_edge(NodeId u, NodeId v) {
        Dart du = static_cast<Dart>(head.size());
        head.push_back(u);
        head.push_back(v);
        next.push_back(kNoDart);
        next.push_back(kNoDart);
        forward.push_back(u <= v ? 1 : 0);
        return du;
    }

    // cycle lists the darts of one new face in orbit order.
    void face(const std::vector<Dart>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            next[twin(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }

    PlaneGraph build(Dart outer) {
        return PlaneGraph::from_arrays(n, std::move(head), std::move(next), outer, directed,
                                       std::move(forward), std::move(comp_host),
                                       std::move(comp_boundary));
    }

    NodeId n;
    bool directed;
    std::vector<NodeId> head;
    std::vector<Dart> next;
    std::vector<std::uint8_t> forward;
    std::vector<Dart> comp_host, comp_boundary;
};

// Wraps the current exterior walk of `ext`'s base graph in a triangle
// (y, a, b) with the annulus triangulated so that y has degree exactly 3 and
// a, b at least 4: y attaches to walk position 1 only, a to positions 1 and
// 2, b to positions 2..len and 1.  Returns the node y; sets *outer_out to a
// dart on the new exterior triangle.
NodeId wrap_boundary_triangle(Extension& ext, const std::vector<Dart>& walk, Dart* outer_out);

// Stars a face walk from a fresh node connected to every position.
NodeId star_face_walk(Extension& ext, const std::vector<Dart>& walk);

struct NodeRemoval {
    PlaneGraph graph;
    std::vector<NodeId> node_map;
    std::vector<EdgeId> edge_map;
};

// Removes nodes and their incident edges; the exterior designation moves to
// the face that absorbed them when necessary.
NodeRemoval remove_nodes(const PlaneGraph& g, const std::set<NodeId>& victims);

// Strict minimum-degree node on the exterior boundary (AmbiguousLowDegree on
// ties).
NodeId lowest_degree_boundary_node(const PlaneGraph& g);

NodeId node_with_number(const std::vector<std::int32_t>& num, std::uint32_t want);

}  // namespace detail
}  // namespace pgc

#endif  // PGC_SRC_EXTEND_HPP
