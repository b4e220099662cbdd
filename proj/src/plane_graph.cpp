#include "pgc/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace pgc {

PlaneGraph PlaneGraph::build(NodeId n, const std::vector<std::vector<Dart>>& rotations,
                             Dart outer_dart, bool directed,
                             std::vector<std::uint8_t> edge_forward,
                             std::vector<Dart> comp_host, std::vector<Dart> comp_boundary) {
    require(n >= 1, Err::MalformedSpec, "graph needs at least one node");
    require(static_cast<NodeId>(rotations.size()) == n, Err::MalformedSpec,
            "one rotation list per node required");
    std::size_t dart_total = 0;
    for (const auto& r : rotations) dart_total += r.size();
    require(dart_total % 2 == 0, Err::MalformedSpec, "odd number of darts");

    std::vector<NodeId> head(dart_total, kNoNode);
    std::vector<Dart> next(dart_total, kNoDart);
    for (NodeId v = 0; v < n; ++v) {
        const auto& rot = rotations[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            Dart d = rot[i];
            require(d >= 0 && d < static_cast<Dart>(dart_total), Err::MalformedSpec,
                    "dart id out of range");
            require(head[d] == kNoNode, Err::MalformedSpec, "dart mentioned twice");
            head[d] = v;
            next[d] = rot[(i + 1) % rot.size()];
        }
    }
    for (std::size_t d = 0; d < dart_total; ++d)
        require(head[d] != kNoNode, Err::MalformedSpec, "dart missing from rotations");

    return from_arrays(n, std::move(head), std::move(next), outer_dart, directed,
                       std::move(edge_forward), std::move(comp_host), std::move(comp_boundary));
}

PlaneGraph PlaneGraph::from_arrays(NodeId n, std::vector<NodeId> head, std::vector<Dart> next,
                                   Dart outer_dart, bool directed,
                                   std::vector<std::uint8_t> edge_forward,
                                   std::vector<Dart> comp_host, std::vector<Dart> comp_boundary) {
    PlaneGraph g;
    g.n_ = n;
    g.head_ = std::move(head);
    g.next_ = std::move(next);
    g.outer_dart_ = outer_dart;
    g.directed_ = directed;
    g.edge_forward_ = std::move(edge_forward);
    g.comp_host_ = std::move(comp_host);
    g.comp_boundary_ = std::move(comp_boundary);
    g.finish_construction();
    return g;
}

void PlaneGraph::finish_construction() {
    const Dart nd = static_cast<Dart>(head_.size());
    require(n_ >= 1, Err::MalformedSpec, "graph needs at least one node");
    require(nd % 2 == 0, Err::MalformedSpec, "odd dart array");
    require(static_cast<Dart>(next_.size()) == nd, Err::MalformedSpec, "next array size");
    if (edge_forward_.empty()) edge_forward_.assign(nd / 2, 1);
    require(static_cast<Dart>(edge_forward_.size() * 2) == nd, Err::MalformedSpec,
            "edge_forward size");

    // rotation permutation and its inverse
    prev_.assign(nd, kNoDart);
    for (Dart d = 0; d < nd; ++d) {
        Dart nx = next_[d];
        require(nx >= 0 && nx < nd, Err::MalformedSpec, "next out of range");
        require(prev_[nx] == kNoDart, Err::MalformedSpec, "next is not a permutation");
        prev_[nx] = d;
        require(head_[d] >= 0 && head_[d] < n_, Err::MalformedSpec, "head out of range");
        require(head_[nx] == head_[d], Err::MalformedSpec, "rotation mixes nodes");
    }

    degree_.assign(n_, 0);
    node_dart_.assign(n_, kNoDart);
    for (Dart d = 0; d < nd; ++d) {
        ++degree_[head_[d]];
        if (node_dart_[head_[d]] == kNoDart || d < node_dart_[head_[d]])
            node_dart_[head_[d]] = d;
    }
    // each node's darts must form a single rotation cycle
    for (NodeId v = 0; v < n_; ++v) {
        if (node_dart_[v] == kNoDart) continue;
        int seen = 0;
        Dart d = node_dart_[v];
        do {
            ++seen;
            require(seen <= degree_[v], Err::MalformedSpec, "rotation cycle too long");
            d = next_[d];
        } while (d != node_dart_[v]);
        require(seen == degree_[v], Err::MalformedSpec, "node darts split across cycles");
    }

    // components over darts (twin/next) plus isolated nodes
    comp_of_.assign(n_, -1);
    std::int32_t raw_comp = 0;
    std::vector<std::uint8_t> dart_seen(nd, 0);
    std::vector<Dart> stack;
    for (NodeId v = 0; v < n_; ++v) {
        if (comp_of_[v] != -1) continue;
        comp_of_[v] = raw_comp;
        if (node_dart_[v] != kNoDart) {
            stack.push_back(node_dart_[v]);
            dart_seen[node_dart_[v]] = 1;
            while (!stack.empty()) {
                Dart d = stack.back();
                stack.pop_back();
                comp_of_[head_[d]] = raw_comp;
                for (Dart e : {twin(d), next_[d]}) {
                    if (!dart_seen[e]) {
                        dart_seen[e] = 1;
                        stack.push_back(e);
                    }
                }
            }
        }
        ++raw_comp;
    }
    comp_count_ = raw_comp;

    // faces
    faces_.faces.clear();
    faces_.face_of.assign(nd, -1);
    for (Dart d = 0; d < nd; ++d) {
        if (faces_.face_of[d] != -1) continue;
        std::vector<Dart> orbit;
        Dart e = d;
        do {
            faces_.face_of[e] = static_cast<std::int32_t>(faces_.faces.size());
            orbit.push_back(e);
            e = next_[twin(e)];
        } while (e != d);
        faces_.faces.push_back(std::move(orbit));
    }

    // genus-zero check per component
    {
        std::vector<std::int64_t> vcnt(comp_count_, 0), ecnt(comp_count_, 0), fcnt(comp_count_, 0);
        for (NodeId v = 0; v < n_; ++v) ++vcnt[comp_of_[v]];
        for (Dart d = 0; d < nd; d += 2) ++ecnt[comp_of_[head_[d]]];
        for (const auto& f : faces_.faces) ++fcnt[comp_of_[head_[f[0]]]];
        for (std::int32_t c = 0; c < comp_count_; ++c) {
            if (ecnt[c] == 0) fcnt[c] = 1;  // a bare node bounds one face
            require(vcnt[c] - ecnt[c] + fcnt[c] == 2, Err::NonPlanarRotation,
                    "rotation system is not genus zero");
        }
    }

    // exterior designation
    if (nd > 0) {
        require(outer_dart_ >= 0 && outer_dart_ < nd, Err::MalformedSpec,
                "outer dart out of range");
        faces_.exterior = faces_.face_of[outer_dart_];
        root_comp_ = comp_of_[head_[outer_dart_]];
    } else {
        require(outer_dart_ == kNoDart, Err::MalformedSpec, "outer dart on edgeless graph");
        faces_.exterior = -1;
        root_comp_ = 0;
    }

    // nesting defaults and validation
    if (comp_host_.empty()) comp_host_.assign(comp_count_, kNoDart);
    require(static_cast<std::int32_t>(comp_host_.size()) == comp_count_, Err::MalformedSpec,
            "component host list size");
    if (comp_boundary_.empty()) {
        comp_boundary_.assign(comp_count_, kNoDart);
        std::vector<Dart> lowest(comp_count_, kNoDart);
        for (Dart d = 0; d < nd; ++d) {
            auto c = comp_of_[head_[d]];
            if (lowest[c] == kNoDart) lowest[c] = d;
        }
        for (std::int32_t c = 0; c < comp_count_; ++c) comp_boundary_[c] = lowest[c];
        if (nd > 0) comp_boundary_[root_comp_] = outer_dart_;
    }
    require(static_cast<std::int32_t>(comp_boundary_.size()) == comp_count_, Err::MalformedSpec,
            "component boundary list size");
    require(comp_host_[root_comp_] == kNoDart, Err::MalformedSpec,
            "root component must sit in the exterior region");
    for (std::int32_t c = 0; c < comp_count_; ++c) {
        Dart h = comp_host_[c];
        if (h != kNoDart) {
            require(h >= 0 && h < nd, Err::MalformedSpec, "host dart out of range");
            require(comp_of_[head_[h]] != c, Err::MalformedSpec, "component hosted by itself");
        }
        Dart b = comp_boundary_[c];
        if (b != kNoDart)
            require(comp_of_[head_[b]] == c, Err::MalformedSpec, "boundary dart in wrong component");
    }
    if (nd > 0)
        require(faces_.face_of[comp_boundary_[root_comp_]] == faces_.exterior,
                Err::MalformedSpec, "root boundary must be the exterior orbit");
    // host chains must terminate at the exterior
    for (std::int32_t c = 0; c < comp_count_; ++c) {
        std::int32_t cur = c;
        std::int32_t steps = 0;
        while (comp_host_[cur] != kNoDart) {
            cur = comp_of_[head_[comp_host_[cur]]];
            require(++steps <= comp_count_, Err::MalformedSpec, "cyclic component nesting");
        }
    }
}

int PlaneGraph::self_loop_count(NodeId v) const {
    int c = 0;
    Dart d0 = node_dart_[v];
    if (d0 == kNoDart) return 0;
    Dart d = d0;
    do {
        if (head_[twin(d)] == v && side_of(d) == 0) ++c;
        d = next_[d];
    } while (d != d0);
    return c;
}

int PlaneGraph::max_self_loops_per_node() const {
    int best = 0;
    for (NodeId v = 0; v < n_; ++v) best = std::max(best, self_loop_count(v));
    return best;
}

int PlaneGraph::max_parallel_multiplicity() const {
    std::map<std::pair<NodeId, NodeId>, int> mult;
    int best = 0;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        NodeId u = head_[2 * e], v = head_[2 * e + 1];
        if (u == v) continue;
        auto key = std::minmax(u, v);
        best = std::max(best, ++mult[{key.first, key.second}]);
    }
    return best;
}

std::vector<Dart> PlaneGraph::rotation(NodeId v) const {
    std::vector<Dart> out;
    Dart d0 = node_dart_[v];
    if (d0 == kNoDart) return out;
    Dart d = d0;
    do {
        out.push_back(d);
        d = next_[d];
    } while (d != d0);
    return out;
}

std::vector<Dart> PlaneGraph::exterior_walk() const {
    std::vector<Dart> out;
    if (outer_dart_ == kNoDart) return out;
    Dart d = outer_dart_;
    do {
        out.push_back(d);
        d = face_successor(d);
    } while (d != outer_dart_);
    return out;
}

bool PlaneGraph::is_triangulation() const {
    if (dart_count() == 0) return false;
    for (const auto& f : faces_.faces)
        if (f.size() != 3) return false;
    return connected();
}

std::vector<std::int32_t> dfs_number(const PlaneGraph& g, NodeId v) {
    require(v >= 0 && v < g.node_count(), Err::MalformedSpec, "dfs root out of range");
    if (!g.connected()) fail(Err::Disconnected, "dfs numbering needs a connected graph");
    std::vector<std::int32_t> num(g.node_count(), 0);
    if (g.node_count() == 1) {
        num[0] = 1;
        return num;
    }
    Dart d_ext = kNoDart;
    for (Dart d : g.exterior_walk()) {
        if (g.head(d) == v) {
            d_ext = d;
            break;
        }
    }
    if (d_ext == kNoDart) fail(Err::NotOnOuterFace, "dfs root not on the exterior boundary");

    std::int32_t counter = 0;
    num[v] = ++counter;
    struct Frame {
        Dart cursor;
        Dart stop;
        bool first;
    };
    std::vector<Frame> stack;
    stack.push_back({d_ext, d_ext, true});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (!f.first && f.cursor == f.stop) {
            stack.pop_back();
            continue;
        }
        Dart d = f.cursor;
        f.first = false;
        f.cursor = g.next(d);
        NodeId t = g.head(twin(d));
        if (num[t] == 0) {
            num[t] = ++counter;
            Dart entry = twin(d);
            if (g.next(entry) != entry) stack.push_back({g.next(entry), entry, true});
        }
    }
    require(counter == g.node_count(), Err::Disconnected, "dfs failed to reach every node");
    return num;
}

}  // namespace pgc
