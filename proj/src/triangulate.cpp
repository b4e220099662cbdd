#include "pgc/triangulate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pgc {

namespace {

using Pair = std::pair<NodeId, NodeId>;

Pair norm_pair(NodeId u, NodeId v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

TriangulateResult triangulate_all_faces(const PlaneGraph& g) {
    return triangulate_all_faces_ex(g, false);
}

TriangulateResult triangulate_all_faces_ex(const PlaneGraph& g, bool allow_loop_chords) {
    if (!allow_loop_chords)
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            require(g.head(2 * e) != g.head(2 * e + 1), Err::LoopsPresent,
                    "triangulation input must be loop-free");

    GraphBuilder b(g);
    std::set<Pair> present;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.head(2 * e) != g.head(2 * e + 1))
            present.insert(norm_pair(g.head(2 * e), g.head(2 * e + 1)));
    std::vector<EdgeId> added;

    auto connect = [&](NodeId u, Dart after_u, NodeId v, Dart after_v) {
        require(u != v, Err::ContractUnmet, "connection chord would be a loop");
        require(!present.count(norm_pair(u, v)), Err::ContractUnmet,
                "connection chord would duplicate an edge");
        Dart du = b.add_edge(u, after_u, v, after_v, u < v);
        present.insert(norm_pair(u, v));
        added.push_back(edge_of(du));
        return du;
    };

    // Phase A: connect every hosted component to its host region.
    if (g.component_count() > 1) {
        std::vector<NodeId> min_node(g.component_count(), kNoNode);
        for (NodeId v = g.node_count(); v-- > 0;) min_node[g.component_of(v)] = v;

        // regions: exterior (key -1) and one per face id
        std::map<std::int32_t, std::vector<std::int32_t>> hosted;
        for (std::int32_t c = 0; c < g.component_count(); ++c) {
            if (c == g.root_component()) continue;
            Dart h = g.component_host(c);
            hosted[h == kNoDart ? -1 : g.faces().face_of[h]].push_back(c);
        }
        for (auto& [region, comps] : hosted) {
            std::sort(comps.begin(), comps.end());
            // region anchor: a dart position on the hosting boundary
            NodeId anchor_node;
            Dart anchor_after;
            if (region == -1) {
                Dart a0 = g.outer_dart();
                if (a0 == kNoDart) {
                    anchor_node = min_node[g.root_component()];
                    anchor_after = kNoDart;  // bare node
                } else {
                    anchor_node = g.head(a0);
                    anchor_after = g.prev(a0);
                }
            } else {
                Dart a0 = *std::min_element(g.faces().faces[region].begin(),
                                            g.faces().faces[region].end());
                anchor_node = g.head(a0);
                anchor_after = g.prev(a0);
            }
            for (auto c : comps) {
                Dart bd = g.component_boundary(c);
                NodeId tv;
                Dart tafter;
                if (bd == kNoDart) {
                    tv = min_node[c];
                    tafter = kNoDart;
                } else {
                    tv = g.head(bd);
                    tafter = g.prev(bd);
                }
                Dart du = connect(anchor_node, anchor_after, tv, tafter);
                // chain the next sibling from the fresh dart
                anchor_after = du;
            }
        }
    }

    // Phase B: chord every face of size > 3.
    // Collect current face walks from the builder state.
    std::vector<std::vector<Dart>> pending;
    {
        const Dart nd = static_cast<Dart>(2 * g.edge_count() + 2 * added.size());
        std::vector<std::uint8_t> seen(nd, 0);
        for (Dart d = 0; d < nd; ++d) {
            if (seen[d]) continue;
            std::vector<Dart> walk;
            Dart x = d;
            do {
                seen[x] = 1;
                walk.push_back(x);
                x = b.next(twin(x));
            } while (x != d);
            if (walk.size() > 3) pending.push_back(std::move(walk));
        }
    }

    while (!pending.empty()) {
        std::vector<Dart> walk = std::move(pending.back());
        pending.pop_back();
        const std::int32_t s = static_cast<std::int32_t>(walk.size());
        if (s <= 3) continue;
        // corner k sits at head(walk[k]); a chord between corners i and j
        // splits the walk into [CA, d_j .. d_{i-1}] and [CB, d_i .. d_{j-1}]
        std::int32_t ci = -1, cj = -1;
        for (std::int32_t gap = 2; gap <= s / 2 && ci < 0; ++gap) {
            for (std::int32_t i = 0; i < s; ++i) {
                std::int32_t j = (i + gap) % s;
                NodeId wu = b.head(walk[i]);
                NodeId wv = b.head(walk[j]);
                if (wu == wv || present.count(norm_pair(wu, wv))) continue;
                ci = i;
                cj = j;
                break;
            }
        }
        if (ci < 0 && allow_loop_chords) {
            // fall back to a loop chord between two visits of one node
            for (std::int32_t gap = 2; gap <= s / 2 && ci < 0; ++gap) {
                for (std::int32_t i = 0; i < s; ++i) {
                    std::int32_t j = (i + gap) % s;
                    if (b.head(walk[i]) != b.head(walk[j])) continue;
                    ci = i;
                    cj = j;
                    break;
                }
            }
        }
        require(ci >= 0, Err::ContractUnmet, "face admits no chord");
        NodeId wu = b.head(walk[ci]);
        NodeId wv = b.head(walk[cj]);
        Dart ca = b.add_edge(wu, b.prev(walk[ci]), wv, b.prev(walk[cj]), wu < wv);
        if (wu != wv) present.insert(norm_pair(wu, wv));
        added.push_back(edge_of(ca));
        std::vector<Dart> w1, w2;
        w1.push_back(ca);
        for (std::int32_t k = cj; k != ci; k = (k + 1) % s) w1.push_back(walk[k]);
        w2.push_back(twin(ca));
        for (std::int32_t k = ci; k != cj; k = (k + 1) % s) w2.push_back(walk[k]);
        if (w1.size() > 3) pending.push_back(std::move(w1));
        if (w2.size() > 3) pending.push_back(std::move(w2));
    }

    auto fin = b.finalize();
    TriangulateResult out;
    out.graph = std::move(fin.graph);
    out.added = std::move(added);
    return out;
}

}  // namespace pgc
