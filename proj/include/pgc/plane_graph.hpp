#ifndef PGC_PLANE_GRAPH_HPP
#define PGC_PLANE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgc/error.hpp"

namespace pgc {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using Dart = std::int32_t;

constexpr Dart kNoDart = -1;
constexpr NodeId kNoNode = -1;

// Edge e owns darts 2e and 2e+1; the twin involution is fixed as xor 1.
inline Dart twin(Dart d) { return d ^ 1; }
inline EdgeId edge_of(Dart d) { return d >> 1; }
inline Dart dart_of(EdgeId e, int side) { return 2 * e + side; }
inline int side_of(Dart d) { return d & 1; }

// Face orbits of d -> next(twin(d)).  With counterclockwise rotations each
// orbit walks its face keeping the face region to the right of travel, so
// the exterior orbit walks the outer boundary with the graph on the left.
struct FaceList {
    std::vector<std::vector<Dart>> faces;
    std::vector<std::int32_t> face_of;  // per dart
    std::int32_t exterior = -1;         // orbit of the outer dart; -1 when dartless

    std::size_t size() const { return faces.size(); }
};

// Embedded planar multigraph: rotation system plus a designated exterior
// face.  Nodes of each connected component are tied into the embedding by a
// host dart naming the face of another component the whole component sits
// in (kNoDart = the unbounded exterior region).  Immutable after
// construction; all operations produce new graphs.
class PlaneGraph {
  public:
    PlaneGraph() = default;

    // rotations[v] lists v's darts in counterclockwise order.  Every dart in
    // [0, 2m) must appear exactly once across all lists.  comp_* vectors may
    // be empty (defaults: every component sits in the exterior region and
    // shows its lowest-dart orbit to its host).
    static PlaneGraph build(NodeId n, const std::vector<std::vector<Dart>>& rotations,
                            Dart outer_dart, bool directed = false,
                            std::vector<std::uint8_t> edge_forward = {},
                            std::vector<Dart> comp_host = {},
                            std::vector<Dart> comp_boundary = {});

    // Fast path for surgery code that already has the arrays; runs the same
    // validation.
    static PlaneGraph from_arrays(NodeId n, std::vector<NodeId> head, std::vector<Dart> next,
                                  Dart outer_dart, bool directed,
                                  std::vector<std::uint8_t> edge_forward,
                                  std::vector<Dart> comp_host = {},
                                  std::vector<Dart> comp_boundary = {});

    NodeId node_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(head_.size() / 2); }
    Dart dart_count() const { return static_cast<Dart>(head_.size()); }

    NodeId head(Dart d) const { return head_[d]; }
    Dart next(Dart d) const { return next_[d]; }
    Dart prev(Dart d) const { return prev_[d]; }
    Dart node_dart(NodeId v) const { return node_dart_[v]; }
    Dart outer_dart() const { return outer_dart_; }
    bool directed() const { return directed_; }
    // True when edge e points from head(2e) to head(2e+1).
    bool edge_forward(EdgeId e) const { return edge_forward_[e] != 0; }
    const std::vector<std::uint8_t>& edge_forward() const { return edge_forward_; }

    NodeId tail_node(EdgeId e) const {
        return edge_forward(e) ? head_[2 * e] : head_[2 * e + 1];
    }

    int degree(NodeId v) const { return degree_[v]; }
    Dart face_successor(Dart d) const { return next_[twin(d)]; }
    Dart face_predecessor(Dart d) const { return twin(prev_[d]); }

    const FaceList& faces() const { return faces_; }

    // Components are indexed in order of their smallest node id.
    std::int32_t component_count() const { return comp_count_; }
    std::int32_t component_of(NodeId v) const { return comp_of_[v]; }
    Dart component_host(std::int32_t c) const { return comp_host_[c]; }
    Dart component_boundary(std::int32_t c) const { return comp_boundary_[c]; }
    std::int32_t root_component() const { return root_comp_; }

    bool connected() const { return comp_count_ == 1; }

    int self_loop_count(NodeId v) const;
    // Highest multiplicity over unordered node pairs (loops not counted).
    int max_parallel_multiplicity() const;
    int max_self_loops_per_node() const;

    std::vector<Dart> rotation(NodeId v) const;
    // The exterior face orbit rotated to start at outer_dart().
    std::vector<Dart> exterior_walk() const;

    bool is_triangulation() const;  // every face has size exactly 3

  private:
    friend class GraphBuilder;

    void finish_construction();  // fills derived state, validates

    NodeId n_ = 0;
    std::vector<NodeId> head_;
    std::vector<Dart> next_;
    std::vector<Dart> prev_;
    std::vector<Dart> node_dart_;
    Dart outer_dart_ = kNoDart;
    bool directed_ = false;
    std::vector<std::uint8_t> edge_forward_;

    std::vector<int> degree_;
    FaceList faces_;
    std::int32_t comp_count_ = 0;
    std::int32_t root_comp_ = 0;
    std::vector<std::int32_t> comp_of_;
    std::vector<Dart> comp_host_;
    std::vector<Dart> comp_boundary_;
};

// Depth-first numbering from a node v on the exterior boundary: v gets 1,
// the counterclockwise neighbour of v along the boundary gets 2, neighbours
// are explored in counterclockwise rotation order.  Returns 1-based numbers.
std::vector<std::int32_t> dfs_number(const PlaneGraph& g, NodeId v);

struct EdgeSurgeryResult {
    PlaneGraph graph;
    std::vector<EdgeId> edge_map;  // old edge id -> new edge id, -1 if removed
};

// Removes the given edges, preserving the rotation order of what remains.
// With allow_disconnect the nesting of any newly split-off component is
// recorded against the face that absorbed the deleted edges.
EdgeSurgeryResult delete_edges(const PlaneGraph& g, const std::vector<std::uint8_t>& remove,
                               bool allow_disconnect);
EdgeSurgeryResult delete_self_loops(const PlaneGraph& g);

// Node-simple cycle given as a dart sequence d_1..d_l: head(d_i) = x_i and
// twin(d_i) has head x_{i+1} (cyclically).
struct CutResult {
    PlaneGraph inside;   // C plus everything embedded inside; exterior = C
    PlaneGraph outside;  // C plus everything outside; keeps g's exterior
    Dart hole_dart;      // dart of `outside` on the hole orbit, head = x_1
    std::vector<NodeId> node_to_inside;   // -1 where absent
    std::vector<NodeId> node_to_outside;
    std::vector<EdgeId> edge_to_inside;
    std::vector<EdgeId> edge_to_outside;
    std::int32_t inside_strict_nodes = 0;
    std::int32_t outside_strict_nodes = 0;
};

CutResult cut_along_cycle(const PlaneGraph& g, const std::vector<Dart>& cycle);

// Inverse of cut: the exterior boundary of g_in is identified with the hole
// face of g_out designated by hole_dart; head(hole_dart) is matched with
// head(in_dart) (a dart on g_in's exterior orbit, defaulting to the outer
// dart) and the two walks run in opposite directions.
PlaneGraph glue_along_cycle(const PlaneGraph& g_in, const PlaneGraph& g_out, Dart hole_dart,
                            Dart in_dart = kNoDart);

// Orientation-preserving plane-embedding equality fixing the exterior face.
bool plane_equal(const PlaneGraph& a, const PlaneGraph& b);

// Canonical code for plane identity (see plane_equal); a string over
// {'0','1'} that also serializes the graph.
std::string canonical_plane_code(const PlaneGraph& g);

// Rebuilds a graph from a canonical plane code.
PlaneGraph plane_code_to_graph(const std::string& code);

// Canonical byte string for abstract multigraph isomorphism, brute force
// over node permutations; throws TooLargeForCanonical above the cap.
std::string canonical_abstract_code(const PlaneGraph& g, int node_cap = 8);

// Mutable combinatorial map used by operations that build graphs.
class GraphBuilder {
  public:
    GraphBuilder() = default;
    explicit GraphBuilder(const PlaneGraph& g);

    NodeId add_node();
    // Inserts a new edge; at each endpoint the new dart goes immediately
    // counterclockwise-after the given dart (kNoDart when the node has no
    // darts yet).  Returns the new even dart, which lives at u.
    Dart add_edge(NodeId u, Dart after_u, NodeId v, Dart after_v, bool forward = true);
    void delete_edge(EdgeId e);
    void delete_node(NodeId v);  // must have no darts left (or only tombstones)

    NodeId head(Dart d) const { return head_[d]; }
    Dart next(Dart d) const { return next_[d]; }
    Dart prev(Dart d) const { return prev_[d]; }
    bool alive(Dart d) const { return !dead_[edge_of(d)]; }
    Dart node_dart(NodeId v) const { return node_dart_[v]; }
    int node_count() const { return static_cast<int>(node_dart_.size()); }

    void set_outer(Dart d) { outer_ = d; }
    void set_directed(bool d) { directed_ = d; }
    void set_forward(EdgeId e, bool f) { forward_[e] = f; }
    void set_comp_nesting(std::vector<Dart> host, std::vector<Dart> boundary);

    struct Finalized {
        PlaneGraph graph;
        std::vector<NodeId> node_map;  // builder node -> final node, -1 if deleted
        std::vector<EdgeId> edge_map;  // builder edge -> final edge, -1 if deleted
    };
    // Compacts tombstones away.  Nesting vectors (if set) are in builder
    // dart ids and get remapped.
    Finalized finalize() const;

  private:
    std::vector<NodeId> head_;
    std::vector<Dart> next_, prev_;
    std::vector<Dart> node_dart_;
    std::vector<std::uint8_t> dead_;     // per edge
    std::vector<std::uint8_t> node_dead_;
    std::vector<std::uint8_t> forward_;  // per edge
    Dart outer_ = kNoDart;
    bool directed_ = false;
    std::vector<Dart> comp_host_, comp_boundary_;
    bool nesting_set_ = false;
};

}  // namespace pgc

#endif  // PGC_PLANE_GRAPH_HPP
