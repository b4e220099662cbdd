#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "pgc/plane_graph.hpp"

namespace pgc {

// ── GraphBuilder ────────────────────────────────────────────────

GraphBuilder::GraphBuilder(const PlaneGraph& g) {
    const Dart nd = g.dart_count();
    head_.resize(nd);
    next_.resize(nd);
    prev_.resize(nd);
    for (Dart d = 0; d < nd; ++d) {
        head_[d] = g.head(d);
        next_[d] = g.next(d);
        prev_[d] = g.prev(d);
    }
    node_dart_.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) node_dart_[v] = g.node_dart(v);
    dead_.assign(nd / 2, 0);
    node_dead_.assign(g.node_count(), 0);
    forward_.assign(g.edge_forward().begin(), g.edge_forward().end());
    outer_ = g.outer_dart();
    directed_ = g.directed();
}

NodeId GraphBuilder::add_node() {
    node_dart_.push_back(kNoDart);
    node_dead_.push_back(0);
    return static_cast<NodeId>(node_dart_.size() - 1);
}

Dart GraphBuilder::add_edge(NodeId u, Dart after_u, NodeId v, Dart after_v, bool forward) {
    const EdgeId e = static_cast<EdgeId>(dead_.size());
    dead_.push_back(0);
    forward_.push_back(forward ? 1 : 0);
    const Dart du = 2 * e, dv = 2 * e + 1;
    head_.push_back(u);
    head_.push_back(v);
    next_.resize(head_.size());
    prev_.resize(head_.size());

    auto splice_in = [&](Dart d, NodeId at, Dart after) {
        if (after == kNoDart) {
            require(node_dart_[at] == kNoDart, Err::MalformedSpec,
                    "splice position required at a non-empty node");
            next_[d] = d;
            prev_[d] = d;
            node_dart_[at] = d;
        } else {
            require(head_[after] == at, Err::MalformedSpec, "splice dart at wrong node");
            next_[d] = next_[after];
            prev_[d] = after;
            prev_[next_[after]] = d;
            next_[after] = d;
        }
    };
    splice_in(du, u, after_u);
    splice_in(dv, v, after_v);
    return du;
}

void GraphBuilder::delete_edge(EdgeId e) {
    require(!dead_[e], Err::MalformedSpec, "edge already deleted");
    for (Dart d : {2 * e + 1, 2 * e}) {
        NodeId v = head_[d];
        if (next_[d] == d) {
            node_dart_[v] = kNoDart;
        } else {
            next_[prev_[d]] = next_[d];
            prev_[next_[d]] = prev_[d];
            if (node_dart_[v] == d) node_dart_[v] = next_[d];
        }
        next_[d] = d;
        prev_[d] = d;
    }
    dead_[e] = 1;
}

void GraphBuilder::delete_node(NodeId v) {
    require(node_dart_[v] == kNoDart, Err::MalformedSpec, "node still has darts");
    node_dead_[v] = 1;
}

void GraphBuilder::set_comp_nesting(std::vector<Dart> host, std::vector<Dart> boundary) {
    comp_host_ = std::move(host);
    comp_boundary_ = std::move(boundary);
    nesting_set_ = true;
}

GraphBuilder::Finalized GraphBuilder::finalize() const {
    Finalized out;
    const NodeId bn = static_cast<NodeId>(node_dart_.size());
    const EdgeId be = static_cast<EdgeId>(dead_.size());
    out.node_map.assign(bn, kNoNode);
    out.edge_map.assign(be, -1);
    NodeId n_final = 0;
    for (NodeId v = 0; v < bn; ++v)
        if (!node_dead_[v]) out.node_map[v] = n_final++;
    EdgeId e_final = 0;
    for (EdgeId e = 0; e < be; ++e)
        if (!dead_[e]) out.edge_map[e] = e_final++;

    std::vector<NodeId> head(2 * e_final);
    std::vector<Dart> next(2 * e_final);
    std::vector<std::uint8_t> forward(e_final);
    auto dart_map = [&](Dart d) -> Dart {
        if (d == kNoDart) return kNoDart;
        EdgeId ne = out.edge_map[edge_of(d)];
        return ne < 0 ? kNoDart : dart_of(ne, side_of(d));
    };
    for (EdgeId e = 0; e < be; ++e) {
        if (dead_[e]) continue;
        for (Dart d : {2 * e, 2 * e + 1}) {
            Dart nd2 = dart_map(d);
            NodeId hv = out.node_map[head_[d]];
            require(hv != kNoNode, Err::MalformedSpec, "live dart at deleted node");
            head[nd2] = hv;
            next[nd2] = dart_map(next_[d]);
        }
        forward[out.edge_map[e]] = forward_[e];
    }
    std::vector<Dart> host, boundary;
    if (nesting_set_) {
        for (Dart d : comp_host_) host.push_back(dart_map(d));
        for (Dart d : comp_boundary_) boundary.push_back(dart_map(d));
    }
    out.graph = PlaneGraph::from_arrays(n_final, std::move(head), std::move(next),
                                        dart_map(outer_), directed_, std::move(forward),
                                        std::move(host), std::move(boundary));
    return out;
}

// ── delete_edges ────────────────────────────────────────────────

namespace {

// Surviving darts on the face obtained by merging all faces connected to
// seed_face across removed edges; ascending dart order.
std::vector<Dart> merged_region_alive(const PlaneGraph& g, const std::vector<std::uint8_t>& remove,
                                      std::int32_t seed_face) {
    const auto& fl = g.faces();
    std::vector<std::uint8_t> in_region(fl.size(), 0);
    std::vector<std::int32_t> stack{seed_face};
    in_region[seed_face] = 1;
    while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        for (Dart d : fl.faces[f]) {
            if (remove[edge_of(d)]) {
                auto f2 = fl.face_of[twin(d)];
                if (!in_region[f2]) {
                    in_region[f2] = 1;
                    stack.push_back(f2);
                }
            }
        }
    }
    std::vector<Dart> alive;
    for (std::int32_t f = 0; f < static_cast<std::int32_t>(fl.size()); ++f) {
        if (!in_region[f]) continue;
        for (Dart d : fl.faces[f])
            if (!remove[edge_of(d)]) alive.push_back(d);
    }
    std::sort(alive.begin(), alive.end());
    return alive;
}

}  // namespace

EdgeSurgeryResult delete_edges(const PlaneGraph& g, const std::vector<std::uint8_t>& remove,
                               bool allow_disconnect) {
    const EdgeId m = g.edge_count();
    require(static_cast<EdgeId>(remove.size()) == m, Err::MalformedSpec, "remove mask size");

    EdgeSurgeryResult out;
    out.edge_map.assign(m, -1);
    EdgeId m_final = 0;
    for (EdgeId e = 0; e < m; ++e)
        if (!remove[e]) out.edge_map[e] = m_final++;
    auto dart_map = [&](Dart d) -> Dart {
        if (d == kNoDart) return kNoDart;
        EdgeId ne = out.edge_map[edge_of(d)];
        return ne < 0 ? kNoDart : dart_of(ne, side_of(d));
    };

    std::vector<NodeId> head(2 * m_final);
    std::vector<Dart> next(2 * m_final);
    std::vector<std::uint8_t> forward(m_final);
    for (EdgeId e = 0; e < m; ++e) {
        if (remove[e]) continue;
        forward[out.edge_map[e]] = g.edge_forward(e) ? 1 : 0;
        for (Dart d : {2 * e, 2 * e + 1}) {
            Dart nx = g.next(d);
            while (remove[edge_of(nx)]) nx = g.next(nx);
            head[dart_map(d)] = g.head(d);
            next[dart_map(d)] = dart_map(nx);
        }
    }

    // Exterior designation.
    Dart new_outer = kNoDart;
    if (g.outer_dart() != kNoDart) {
        if (!remove[edge_of(g.outer_dart())]) {
            new_outer = dart_map(g.outer_dart());
        } else {
            auto alive = merged_region_alive(g, remove, g.faces().exterior);
            if (!alive.empty()) new_outer = dart_map(alive.front());
        }
    }
    if (new_outer == kNoDart && m_final > 0) {
        // root component lost every dart; promote an exterior-hosted sibling
        for (std::int32_t c = 0; c < g.component_count(); ++c) {
            Dart b = g.component_boundary(c);
            if (g.component_host(c) == kNoDart && b != kNoDart && !remove[edge_of(b)]) {
                new_outer = dart_map(b);
                break;
            }
        }
        require(new_outer != kNoDart, Err::ContractUnmet,
                "no exterior designation survives edge deletion");
    }

    // Final components on the new arrays.
    std::vector<std::int32_t> comp_of(g.node_count(), -1);
    std::int32_t n_comp = 0;
    {
        std::vector<Dart> node_dart(g.node_count(), kNoDart);
        for (Dart d = 2 * m_final; d-- > 0;) node_dart[head[d]] = d;
        std::vector<std::uint8_t> seen(2 * m_final, 0);
        std::vector<Dart> stack;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (comp_of[v] != -1) continue;
            comp_of[v] = n_comp;
            if (node_dart[v] != kNoDart) {
                stack.push_back(node_dart[v]);
                seen[node_dart[v]] = 1;
                while (!stack.empty()) {
                    Dart d = stack.back();
                    stack.pop_back();
                    comp_of[head[d]] = n_comp;
                    for (Dart e2 : {twin(d), next[d]}) {
                        if (!seen[e2]) {
                            seen[e2] = 1;
                            stack.push_back(e2);
                        }
                    }
                }
            }
            ++n_comp;
        }
    }
    if (!allow_disconnect)
        require(n_comp == g.component_count(), Err::ContractUnmet,
                "edge deletion disconnected the graph");

    std::vector<Dart> host(n_comp, kNoDart), boundary(n_comp, kNoDart);
    std::vector<std::uint8_t> resolved(n_comp, 0);
    std::vector<NodeId> comp_min_node(n_comp, kNoNode);
    for (NodeId v = g.node_count(); v-- > 0;) comp_min_node[comp_of[v]] = v;

    const std::int32_t root_new = new_outer != kNoDart ? comp_of[head[new_outer]] : comp_of[0];

    std::function<Dart(Dart)> remap_host = [&](Dart h) -> Dart {
        if (h == kNoDart) return kNoDart;
        if (!remove[edge_of(h)]) return dart_map(h);
        auto alive = merged_region_alive(g, remove, g.faces().face_of[h]);
        if (!alive.empty()) return dart_map(alive.front());
        // hosting structure dissolved; climb one nesting level
        return remap_host(g.component_host(g.component_of(g.head(h))));
    };

    for (std::int32_t c = 0; c < n_comp; ++c) {
        if (c == root_new) {
            boundary[c] = new_outer;
            resolved[c] = 1;
            continue;
        }
        std::int32_t old_c = g.component_of(comp_min_node[c]);
        Dart ob = g.component_boundary(old_c);
        if (ob != kNoDart && !remove[edge_of(ob)] && comp_of[g.head(ob)] == c) {
            host[c] = remap_host(g.component_host(old_c));
            boundary[c] = dart_map(ob);
            resolved[c] = 1;
        } else if (ob == kNoDart) {
            // dartless component: keeps (remapped) host
            host[c] = remap_host(g.component_host(old_c));
            resolved[c] = 1;
        }
    }
    // Split-off pieces sit on the face that absorbed the edges that cut them
    // loose.
    for (std::int32_t c = 0; c < n_comp; ++c) {
        if (resolved[c]) continue;
        Dart host_dart = kNoDart, boundary_dart = kNoDart;
        for (EdgeId e = 0; e < m; ++e) {
            if (!remove[e]) continue;
            if (comp_of[g.head(2 * e)] != c && comp_of[g.head(2 * e + 1)] != c) continue;
            for (Dart d : merged_region_alive(g, remove, g.faces().face_of[2 * e])) {
                bool own = comp_of[g.head(d)] == c;
                if (own && boundary_dart == kNoDart) boundary_dart = dart_map(d);
                if (!own && host_dart == kNoDart) host_dart = dart_map(d);
            }
            if (host_dart != kNoDart) break;
        }
        if (host_dart == kNoDart)
            host_dart = remap_host(g.component_host(g.component_of(comp_min_node[c])));
        if (boundary_dart == kNoDart) {
            for (Dart d = 0; d < g.dart_count(); ++d) {
                if (!remove[edge_of(d)] && comp_of[g.head(d)] == c) {
                    boundary_dart = dart_map(d);
                    break;
                }
            }
        }
        host[c] = host_dart;
        boundary[c] = boundary_dart;
    }

    out.graph = PlaneGraph::from_arrays(g.node_count(), std::move(head), std::move(next),
                                        new_outer, g.directed(), std::move(forward),
                                        std::move(host), std::move(boundary));
    return out;
}

EdgeSurgeryResult delete_self_loops(const PlaneGraph& g) {
    std::vector<std::uint8_t> remove(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.head(2 * e) == g.head(2 * e + 1)) remove[e] = 1;
    return delete_edges(g, remove, false);
}

// ── cut_along_cycle ─────────────────────────────────────────────

namespace {

constexpr std::int8_t kUnknown = 0, kLeft = 1, kRight = 2;

struct SideInfo {
    std::vector<std::int8_t> dart_side;  // darts at cycle nodes, strict sides
    std::vector<std::int8_t> node_side;  // strict nodes
    std::vector<std::int8_t> cyc_mark;   // 1 forward, 2 backward
    std::vector<std::int8_t> comp_side;  // per component; cycle comp stays unknown
    std::vector<std::int32_t> cyc_pos;   // per node
    std::int32_t cyc_comp = -1;
};

// Classifies darts/nodes relative to cycle `cyc`, inside assumed left of the
// walk.  Throws NotACycle when the cycle fails to separate.
SideInfo classify_sides(const PlaneGraph& g, const std::vector<Dart>& cyc) {
    const std::int32_t l = static_cast<std::int32_t>(cyc.size());
    const Dart nd = g.dart_count();
    SideInfo si;
    si.dart_side.assign(nd, kUnknown);
    si.node_side.assign(g.node_count(), kUnknown);
    si.cyc_mark.assign(nd, 0);
    si.comp_side.assign(g.component_count(), kUnknown);
    si.cyc_pos.assign(g.node_count(), -1);
    si.cyc_comp = g.component_of(g.head(cyc[0]));

    for (std::int32_t i = 0; i < l; ++i) {
        si.cyc_mark[cyc[i]] = 1;
        si.cyc_mark[twin(cyc[i])] = 2;
        si.cyc_pos[g.head(cyc[i])] = i;
    }
    for (std::int32_t i = 0; i < l; ++i) {
        Dart out_d = cyc[i];
        Dart in_d = twin(cyc[(i + l - 1) % l]);
        for (Dart d = g.next(out_d); d != in_d; d = g.next(d)) {
            require(d != out_d, Err::NotACycle, "cycle arc scan wrapped");
            si.dart_side[d] = kLeft;
        }
        for (Dart d = g.next(in_d); d != out_d; d = g.next(d)) {
            require(d != in_d, Err::NotACycle, "cycle arc scan wrapped");
            si.dart_side[d] = kRight;
        }
    }
    // flood strict nodes
    std::vector<NodeId> stack;
    auto seed = [&](NodeId v, std::int8_t s) {
        if (si.cyc_pos[v] >= 0) return;
        if (si.node_side[v] != kUnknown) {
            require(si.node_side[v] == s, Err::NotACycle, "cycle does not separate");
            return;
        }
        si.node_side[v] = s;
        stack.push_back(v);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (Dart d : g.rotation(u)) {
                NodeId w = g.head(twin(d));
                if (si.cyc_pos[w] >= 0) continue;
                if (si.node_side[w] == kUnknown) {
                    si.node_side[w] = s;
                    stack.push_back(w);
                } else {
                    require(si.node_side[w] == s, Err::NotACycle, "cycle does not separate");
                }
            }
        }
    };
    for (Dart d = 0; d < nd; ++d)
        if (si.dart_side[d] != kUnknown) seed(g.head(twin(d)), si.dart_side[d]);

    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (si.node_side[v] == kUnknown) continue;
        auto c = g.component_of(v);
        if (c == si.cyc_comp) continue;  // straddles by design
        require(si.comp_side[c] == kUnknown || si.comp_side[c] == si.node_side[v], Err::NotACycle,
                "component straddles the cycle");
        si.comp_side[c] = si.node_side[v];
    }
    return si;
}

// Side of a face orbit; kUnknown when the orbit lies in an unclassified
// floating component.
std::int8_t orbit_side(const PlaneGraph& g, const SideInfo& si, std::int32_t f) {
    std::int8_t s = kUnknown;
    for (Dart d : g.faces().faces[f]) {
        std::int8_t ds = kUnknown;
        if (si.cyc_mark[d] == 1) ds = kRight;  // psi-orbit keeps its region right of travel
        else if (si.cyc_mark[d] == 2) ds = kLeft;
        else if (si.cyc_pos[g.head(d)] >= 0) ds = si.dart_side[d];
        else if (si.node_side[g.head(d)] != kUnknown) ds = si.node_side[g.head(d)];
        else if (si.comp_side[g.component_of(g.head(d))] != kUnknown)
            ds = si.comp_side[g.component_of(g.head(d))];
        if (ds == kUnknown) continue;
        require(s == kUnknown || s == ds, Err::NotACycle, "face straddles the cycle");
        s = ds;
    }
    return s;
}

}  // namespace

CutResult cut_along_cycle(const PlaneGraph& g, const std::vector<Dart>& cycle_in) {
    const std::int32_t l = static_cast<std::int32_t>(cycle_in.size());
    require(l >= 2, Err::NotACycle, "cycle needs at least two darts");
    std::vector<Dart> cyc = cycle_in;

    {
        std::set<NodeId> nodes;
        std::set<EdgeId> edges;
        for (std::int32_t i = 0; i < l; ++i) {
            Dart d = cyc[i];
            require(d >= 0 && d < g.dart_count(), Err::NotACycle, "cycle dart out of range");
            require(nodes.insert(g.head(d)).second, Err::NotACycle, "cycle repeats a node");
            require(edges.insert(edge_of(d)).second, Err::NotACycle, "cycle repeats an edge");
            require(g.head(twin(d)) == g.head(cyc[(i + 1) % l]), Err::NotACycle,
                    "cycle darts do not chain");
        }
    }

    SideInfo si = classify_sides(g, cyc);

    // Orient so the inside (bounded side) is on the left: the boundary orbit
    // of the cycle's component must not be on the left.
    {
        Dart b = g.component_boundary(si.cyc_comp);
        std::int8_t ext_side = orbit_side(g, si, g.faces().face_of[b]);
        require(ext_side != kUnknown, Err::NotACycle, "cannot orient the cycle");
        if (ext_side == kLeft) {
            std::vector<Dart> rev(l);
            for (std::int32_t i = 0; i < l; ++i) rev[i] = twin(cyc[l - 1 - i]);
            cyc = std::move(rev);
            si = classify_sides(g, cyc);
            Dart b2 = g.component_boundary(si.cyc_comp);
            require(orbit_side(g, si, g.faces().face_of[b2]) == kRight, Err::NotACycle,
                    "cycle orientation did not settle");
        }
    }

    // Resolve floating components through the nesting forest.
    {
        std::function<std::int8_t(std::int32_t)> resolve = [&](std::int32_t c) -> std::int8_t {
            if (si.comp_side[c] != kUnknown) return si.comp_side[c];
            Dart h = g.component_host(c);
            std::int8_t s;
            if (h == kNoDart) {
                s = kRight;  // exterior region is outside the cycle
            } else {
                s = orbit_side(g, si, g.faces().face_of[h]);
                if (s == kUnknown) s = resolve(g.component_of(g.head(h)));
            }
            si.comp_side[c] = s;
            return s;
        };
        for (std::int32_t c = 0; c < g.component_count(); ++c)
            if (c != si.cyc_comp) resolve(c);
    }

    auto node_inside = [&](NodeId v) {
        if (si.node_side[v] != kUnknown) return si.node_side[v] == kLeft;
        return si.comp_side[g.component_of(v)] == kLeft;
    };
    auto noncyc_edge_inside = [&](EdgeId e) {
        for (Dart d : {2 * e, 2 * e + 1}) {
            NodeId v = g.head(d);
            if (si.cyc_pos[v] >= 0) {
                require(si.dart_side[d] != kUnknown, Err::NotACycle, "unclassified chord dart");
                return si.dart_side[d] == kLeft;
            }
        }
        return node_inside(g.head(2 * e));
    };

    CutResult res;

    // Builds one side; returns arrays plus the dart map.
    auto build_piece = [&](bool keep_inside, std::vector<NodeId>& node_map,
                           std::vector<EdgeId>& edge_map, std::int32_t& strict_count,
                           std::vector<NodeId>& head, std::vector<Dart>& next,
                           std::vector<std::uint8_t>& forward) {
        node_map.assign(g.node_count(), kNoNode);
        edge_map.assign(g.edge_count(), -1);
        for (std::int32_t i = 0; i < l; ++i) node_map[g.head(cyc[i])] = i;
        NodeId n_new = l;
        strict_count = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (si.cyc_pos[v] >= 0) continue;
            if (node_inside(v) == keep_inside) {
                node_map[v] = n_new++;
                ++strict_count;
            }
        }
        for (std::int32_t i = 0; i < l; ++i) edge_map[edge_of(cyc[i])] = i;
        EdgeId m_new = l;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (edge_map[e] >= 0) continue;
            if (noncyc_edge_inside(e) == keep_inside) edge_map[e] = m_new++;
        }
        head.assign(2 * m_new, kNoNode);
        next.assign(2 * m_new, kNoDart);
        forward.assign(m_new, 1);
        auto dmap = [&](Dart d) -> Dart {
            EdgeId e = edge_map[edge_of(d)];
            if (e < 0) return kNoDart;
            if (e < l) return cyc[e] == d ? 2 * e : 2 * e + 1;
            return dart_of(e, side_of(d));
        };
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            EdgeId ne = edge_map[e];
            if (ne < 0) continue;
            if (ne < l) {
                Dart fd = cyc[ne];
                head[2 * ne] = node_map[g.head(fd)];
                head[2 * ne + 1] = node_map[g.head(twin(fd))];
                forward[ne] = g.tail_node(e) == g.head(fd) ? 1 : 0;
            } else {
                head[2 * ne] = node_map[g.head(2 * e)];
                head[2 * ne + 1] = node_map[g.head(2 * e + 1)];
                forward[ne] = g.edge_forward(e) ? 1 : 0;
            }
            for (Dart d : {2 * e, 2 * e + 1}) {
                Dart nx = g.next(d);
                while (dmap(nx) == kNoDart) nx = g.next(nx);
                next[dmap(d)] = dmap(nx);
            }
        }
        return std::function<Dart(Dart)>([&g, &edge_map, &cyc, l](Dart d) -> Dart {
            EdgeId e = edge_map[edge_of(d)];
            if (e < 0) return kNoDart;
            if (e < l) return cyc[e] == d ? 2 * e : 2 * e + 1;
            return dart_of(e, side_of(d));
        });
    };

    // Rebuilds a piece with per-component nesting derived from the original.
    auto with_nesting = [&](std::vector<NodeId> head, std::vector<Dart> next,
                            std::vector<std::uint8_t> forward, Dart outer, NodeId n_piece,
                            const std::vector<NodeId>& node_map,
                            const std::function<Dart(Dart)>& dmap, bool keep_inside) {
        PlaneGraph tmp = PlaneGraph::from_arrays(n_piece, head, next, outer, g.directed(), forward);
        if (tmp.component_count() <= 1) return tmp;
        std::vector<Dart> host(tmp.component_count(), kNoDart);
        std::vector<Dart> bnd(tmp.component_count(), kNoDart);
        for (std::int32_t c = 0; c < tmp.component_count(); ++c)
            bnd[c] = tmp.component_boundary(c);
        std::vector<NodeId> old_min(g.component_count(), kNoNode);
        for (NodeId v = g.node_count(); v-- > 0;) old_min[g.component_of(v)] = v;
        for (std::int32_t oc = 0; oc < g.component_count(); ++oc) {
            if (oc == si.cyc_comp) continue;  // piece root keeps defaults
            if (si.comp_side[oc] != (keep_inside ? kLeft : kRight)) continue;
            NodeId nv = node_map[old_min[oc]];
            if (nv == kNoNode) continue;
            auto nc = tmp.component_of(nv);
            Dart oh = g.component_host(oc);
            Dart ob = g.component_boundary(oc);
            Dart nh = oh == kNoDart ? kNoDart : dmap(oh);
            if (oh != kNoDart)
                require(nh != kNoDart, Err::NotACycle, "nested component lost its host");
            host[nc] = nh;
            if (ob != kNoDart) bnd[nc] = dmap(ob);
        }
        // the piece root must not carry a host
        host[tmp.component_of(tmp.head(outer))] = kNoDart;
        bnd[tmp.component_of(tmp.head(outer))] = outer;
        return PlaneGraph::from_arrays(n_piece, std::move(head), std::move(next), outer,
                                       g.directed(), std::move(forward), std::move(host),
                                       std::move(bnd));
    };

    {
        std::vector<NodeId> head;
        std::vector<Dart> next;
        std::vector<std::uint8_t> forward;
        auto dmap = build_piece(true, res.node_to_inside, res.edge_to_inside,
                                res.inside_strict_nodes, head, next, forward);
        // exterior of the inside piece: forward dart of cycle edge 0
        res.inside = with_nesting(std::move(head), std::move(next), std::move(forward), 0,
                                  l + res.inside_strict_nodes, res.node_to_inside, dmap, true);
    }
    {
        std::vector<NodeId> head;
        std::vector<Dart> next;
        std::vector<std::uint8_t> forward;
        auto dmap = build_piece(false, res.node_to_outside, res.edge_to_outside,
                                res.outside_strict_nodes, head, next, forward);
        Dart new_outer = dmap(g.outer_dart());
        require(new_outer != kNoDart, Err::NotACycle, "exterior dart fell inside the cycle");
        res.outside = with_nesting(std::move(head), std::move(next), std::move(forward), new_outer,
                                   l + res.outside_strict_nodes, res.node_to_outside, dmap, false);
        res.hole_dart = 2 * (l - 1) + 1;  // image of twin(d_l); head x_1
    }
    return res;
}

// ── glue_along_cycle ────────────────────────────────────────────

PlaneGraph glue_along_cycle(const PlaneGraph& g_in, const PlaneGraph& g_out, Dart hole_dart,
                            Dart in_dart) {
    require(g_in.directed() == g_out.directed(), Err::MalformedSpec, "direction mode mismatch");
    require(g_in.outer_dart() != kNoDart, Err::LengthMismatch, "inside piece has no boundary");
    require(hole_dart >= 0 && hole_dart < g_out.dart_count(), Err::MalformedSpec,
            "hole dart out of range");
    if (in_dart == kNoDart) in_dart = g_in.outer_dart();
    require(g_in.faces().face_of[in_dart] == g_in.faces().exterior, Err::BoundaryMismatch,
            "alignment dart is not on the exterior orbit");

    std::vector<Dart> ext;
    {
        Dart d = in_dart;
        do {
            ext.push_back(d);
            d = g_in.face_successor(d);
        } while (d != in_dart);
    }
    std::vector<Dart> hole;
    {
        Dart d = hole_dart;
        do {
            hole.push_back(d);
            d = g_out.face_successor(d);
        } while (d != hole_dart);
    }
    const std::int32_t l = static_cast<std::int32_t>(ext.size());
    if (static_cast<std::int32_t>(hole.size()) != l)
        fail(Err::LengthMismatch, "boundary and hole have different lengths");
    require(l >= 2, Err::LengthMismatch, "degenerate glue cycle");

    {
        std::set<NodeId> a, b;
        for (Dart d : ext)
            require(a.insert(g_in.head(d)).second, Err::BoundaryMismatch,
                    "inside boundary is not a simple cycle");
        for (Dart d : hole)
            require(b.insert(g_out.head(d)).second, Err::BoundaryMismatch,
                    "hole boundary is not a simple cycle");
    }
    for (std::int32_t c = 0; c < g_in.component_count(); ++c) {
        Dart h = g_in.component_host(c);
        require(h == kNoDart || g_in.faces().face_of[h] != g_in.faces().exterior,
                Err::BoundaryMismatch, "component nested in the glue region");
    }
    for (std::int32_t c = 0; c < g_out.component_count(); ++c) {
        Dart h = g_out.component_host(c);
        require(h == kNoDart || g_out.faces().face_of[h] != g_out.faces().face_of[hole_dart],
                Err::BoundaryMismatch, "component nested in the hole");
    }

    // ext[i] pairs with hole[(l - i) % l]; the pair becomes one edge whose
    // forward dart (at x_i) is ext[i] alias twin(hole-pair).
    auto hole_pair = [&](std::int32_t i) { return hole[(l - i) % l]; };

    std::vector<NodeId> in_map(g_in.node_count(), kNoNode);
    std::vector<NodeId> out_map(g_out.node_count(), kNoNode);
    for (std::int32_t i = 0; i < l; ++i) in_map[g_in.head(ext[i])] = i;
    for (std::int32_t j = 0; j < l; ++j) {
        std::int32_t xi = ((1 - j) % l + l) % l;  // hole walk runs backward
        out_map[g_out.head(hole[j])] = xi;
    }
    NodeId n_final = l;
    for (NodeId v = 0; v < g_in.node_count(); ++v)
        if (in_map[v] == kNoNode) in_map[v] = n_final++;
    for (NodeId v = 0; v < g_out.node_count(); ++v)
        if (out_map[v] == kNoNode) out_map[v] = n_final++;

    std::vector<EdgeId> in_emap(g_in.edge_count(), -1);
    std::vector<EdgeId> out_emap(g_out.edge_count(), -1);
    for (std::int32_t i = 0; i < l; ++i) {
        in_emap[edge_of(ext[i])] = i;
        out_emap[edge_of(hole_pair(i))] = i;
    }
    EdgeId m_final = l;
    for (EdgeId e = 0; e < g_in.edge_count(); ++e)
        if (in_emap[e] < 0) in_emap[e] = m_final++;
    for (EdgeId e = 0; e < g_out.edge_count(); ++e)
        if (out_emap[e] < 0) out_emap[e] = m_final++;

    auto in_dmap = [&](Dart d) -> Dart {
        EdgeId e = in_emap[edge_of(d)];
        if (e < l) return ext[e] == d ? 2 * e : 2 * e + 1;
        return dart_of(e, side_of(d));
    };
    auto out_dmap = [&](Dart d) -> Dart {
        EdgeId e = out_emap[edge_of(d)];
        if (e < l) return hole_pair(e) == d ? 2 * e + 1 : 2 * e;
        return dart_of(e, side_of(d));
    };

    std::vector<NodeId> head(2 * m_final, kNoNode);
    std::vector<Dart> next(2 * m_final, kNoDart);
    std::vector<std::uint8_t> forward(m_final, 1);

    for (std::int32_t i = 0; i < l; ++i) {
        head[2 * i] = i;
        head[2 * i + 1] = (i + 1) % l;
        if (g_in.directed()) {
            NodeId to = out_map[g_out.tail_node(edge_of(hole_pair(i)))];
            NodeId ti = in_map[g_in.tail_node(edge_of(ext[i]))];
            require(to == ti, Err::BoundaryMismatch, "cycle edge direction mismatch");
            forward[i] = to == i ? 1 : 0;
        }
    }
    for (EdgeId e = 0; e < g_in.edge_count(); ++e) {
        if (in_emap[e] < l) continue;
        EdgeId ne = in_emap[e];
        head[2 * ne] = in_map[g_in.head(2 * e)];
        head[2 * ne + 1] = in_map[g_in.head(2 * e + 1)];
        forward[ne] = g_in.edge_forward(e) ? 1 : 0;
    }
    for (EdgeId e = 0; e < g_out.edge_count(); ++e) {
        if (out_emap[e] < l) continue;
        EdgeId ne = out_emap[e];
        head[2 * ne] = out_map[g_out.head(2 * e)];
        head[2 * ne + 1] = out_map[g_out.head(2 * e + 1)];
        forward[ne] = g_out.edge_forward(e) ? 1 : 0;
    }

    for (NodeId v = 0; v < g_in.node_count(); ++v) {
        if (in_map[v] < l) continue;
        for (Dart d : g_in.rotation(v)) next[in_dmap(d)] = in_dmap(g_in.next(d));
    }
    for (NodeId v = 0; v < g_out.node_count(); ++v) {
        if (out_map[v] < l) continue;
        for (Dart d : g_out.rotation(v)) next[out_dmap(d)] = out_dmap(g_out.next(d));
    }
    for (std::int32_t i = 0; i < l; ++i) {
        Dart fwd_out = twin(hole_pair(i));  // forward C dart at x_i in g_out
        NodeId ov = g_out.head(fwd_out);
        require(out_map[ov] == i, Err::BoundaryMismatch, "hole walk inconsistent");
        Dart in_fwd = ext[i];
        Dart in_bwd = twin(ext[(i + l - 1) % l]);
        Dart cur = 2 * i;  // merged forward dart
        for (Dart d = g_in.next(in_fwd); d != in_bwd; d = g_in.next(d)) {
            require(d != in_fwd, Err::BoundaryMismatch, "inside boundary arc loop");
            next[cur] = in_dmap(d);
            cur = in_dmap(d);
        }
        next[cur] = out_dmap(g_out.next(fwd_out));
        for (Dart d : g_out.rotation(ov)) {
            if (d == fwd_out) continue;
            next[out_dmap(d)] = out_dmap(g_out.next(d));
        }
    }

    Dart new_outer = out_dmap(g_out.outer_dart());
    PlaneGraph merged =
        PlaneGraph::from_arrays(n_final, head, next, new_outer, g_in.directed(), forward);
    if (merged.component_count() > 1) {
        std::vector<Dart> host(merged.component_count(), kNoDart);
        std::vector<Dart> bnd(merged.component_count(), kNoDart);
        for (std::int32_t c = 0; c < merged.component_count(); ++c)
            bnd[c] = merged.component_boundary(c);
        auto assign = [&](NodeId sample_final, Dart h, Dart b) {
            auto c = merged.component_of(sample_final);
            host[c] = h;
            if (b != kNoDart) bnd[c] = b;
        };
        std::vector<NodeId> in_min(g_in.component_count(), kNoNode);
        for (NodeId v = g_in.node_count(); v-- > 0;) in_min[g_in.component_of(v)] = v;
        std::vector<NodeId> out_min(g_out.component_count(), kNoNode);
        for (NodeId v = g_out.node_count(); v-- > 0;) out_min[g_out.component_of(v)] = v;
        for (std::int32_t c = 0; c < g_in.component_count(); ++c) {
            if (c == g_in.root_component()) continue;  // merges into the glued component
            Dart h = g_in.component_host(c);
            Dart b = g_in.component_boundary(c);
            assign(in_map[in_min[c]], h == kNoDart ? kNoDart : in_dmap(h),
                   b == kNoDart ? kNoDart : in_dmap(b));
        }
        auto hole_comp = g_out.component_of(g_out.head(hole[0]));
        for (std::int32_t c = 0; c < g_out.component_count(); ++c) {
            Dart h = g_out.component_host(c);
            Dart b = g_out.component_boundary(c);
            if (c == hole_comp) {
                assign(out_map[out_min[c]], h == kNoDart ? kNoDart : out_dmap(h),
                       h == kNoDart ? new_outer : (b == kNoDart ? kNoDart : out_dmap(b)));
            } else {
                assign(out_map[out_min[c]], h == kNoDart ? kNoDart : out_dmap(h),
                       b == kNoDart ? kNoDart : out_dmap(b));
            }
        }
        host[merged.component_of(merged.head(new_outer))] = kNoDart;
        merged = PlaneGraph::from_arrays(n_final, std::move(head), std::move(next), new_outer,
                                         g_in.directed(), std::move(forward), std::move(host),
                                         std::move(bnd));
    }
    return merged;
}

}  // namespace pgc
