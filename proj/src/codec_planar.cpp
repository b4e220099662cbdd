#include "pgc/codec_planar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "extend.hpp"
#include "pgc/separator.hpp"
#include "pgc/triangulate.hpp"

namespace pgc {

using detail::Extension;

std::int64_t degree_gap_over_degrees(const std::vector<std::int64_t>& degrees_sorted,
                                     std::int64_t n, std::int64_t k_min) {
    auto has_degree = [&](std::int64_t d) {
        return std::binary_search(degrees_sorted.begin(), degrees_sorted.end(), d);
    };
    auto lo = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<long double>(n), 0.6L)));
    auto hi = static_cast<std::int64_t>(std::floor(std::pow(static_cast<long double>(n), 0.7L)));
    for (std::int64_t k = std::max(k_min, lo); k <= hi; ++k)
        if (!has_degree(k) && !has_degree(k - 1)) return k;
    std::int64_t maxdeg = degrees_sorted.empty() ? 0 : degrees_sorted.back();
    return std::max({maxdeg + 2, k_min, std::int64_t{5}});
}

int degree_gap(const PlaneGraph& h, int k_min) {
    std::vector<std::int64_t> deg(h.node_count());
    for (NodeId v = 0; v < h.node_count(); ++v) deg[v] = h.degree(v);
    std::sort(deg.begin(), deg.end());
    return static_cast<int>(degree_gap_over_degrees(deg, h.node_count(), k_min));
}

namespace {

// Attaches a k-wheel around the exterior walk of the base (wheel outside),
// or inside the given hole walk (wheel inside).  Wheel nodes are appended as
// w0, w1..wk; returns the dart to designate as the new exterior for the
// outside variant (a hub sector), or kNoDart for the hole variant.
Dart attach_wheel(Extension& ext, const std::vector<Dart>& walk, int k, bool outside) {
    const std::int32_t l = static_cast<std::int32_t>(walk.size());
    require(k >= l + 2 && k >= 6, Err::ContractUnmet, "wheel parameter too small");
    NodeId w0 = ext.add_node();
    std::vector<NodeId> w(k + 1);
    for (int i = 1; i <= k; ++i) w[i] = ext.add_node();

    std::vector<Dart> rim(k + 1);  // rim[i] = dart w_i -> w_{i+1} (rim[k]: w_k -> w_1)
    for (int i = 1; i < k; ++i) rim[i] = ext.add_edge(w[i], w[i + 1]);
    rim[k] = ext.add_edge(w[k], w[1]);
    std::vector<Dart> spoke(k + 1);  // spoke[i] = dart w0 -> w_i
    for (int i = 1; i <= k; ++i) spoke[i] = ext.add_edge(w0, w[i]);
    Dart chord = ext.add_edge(w[1], w[k - 1]);  // w_1 -> w_{k-1}
    std::vector<Dart> att(l + 1);  // att[i] = dart w_i -> x_i
    // attachment targets: position j of the walk pairs with rim index
    // sigma(j): identity when outside, mirrored when inside
    auto sigma = [&](std::int32_t j) { return outside ? j : (j == 1 ? 1 : l + 2 - j); };
    for (std::int32_t j = 1; j <= l; ++j)
        att[sigma(j)] = ext.add_edge(w[sigma(j)], ext.head[walk[j - 1]]);

    if (outside) {
        // annulus quads between consecutive attachments
        for (std::int32_t i = 1; i < l; ++i)
            ext.face({att[i], walk[i - 1], twin(att[i + 1]), twin(rim[i])});
        // region between the last attachment, the chord, and the free rim arc
        std::vector<Dart> region{att[l], walk[l - 1], twin(att[1]), chord};
        for (int j = k - 2; j >= l; --j) region.push_back(twin(rim[j]));
        ext.face(region);
        ext.face({twin(chord), twin(rim[k]), twin(rim[k - 1])});  // (w_{k-1}, w_1, w_k)
        for (int i = 1; i < k; ++i) ext.face({spoke[i], rim[i], twin(spoke[i + 1])});
        ext.face({spoke[k], rim[k], twin(spoke[1])});  // becomes the exterior
        return spoke[k];
    }
    // wheel inside the hole: mirrored
    for (std::int32_t j = 2; j < l; ++j) {
        std::int32_t si = sigma(j);
        ext.face({att[si], walk[j - 1], twin(att[si - 1]), rim[si - 1]});
    }
    if (l >= 2) ext.face({att[2], walk[l - 1], twin(att[1]), rim[1]});
    {
        std::vector<Dart> region{att[1], walk[0], twin(att[sigma(2)])};
        for (int j = sigma(2); j <= k - 2; ++j) region.push_back(rim[j]);
        region.push_back(twin(chord));
        ext.face(region);
    }
    ext.face({chord, rim[k - 1], rim[k]});  // (w_1, w_{k-1}, w_k)
    for (int i = 1; i < k; ++i) ext.face({spoke[i + 1], twin(rim[i]), twin(spoke[i])});
    ext.face({spoke[1], twin(rim[k]), twin(spoke[k])});
    return kNoDart;
}

}  // namespace

PlanarSplit split_planar(const PlaneGraph& g, const PiDescriptor& pi, double rho) {
    const NodeId n = g.node_count();
    if (n < 5) fail(Err::TooSmall, "graph too small to split");

    // triangulate (loop chords allowed), then delete self-loops; the
    // separator runs on the result
    TriangulateResult tri = triangulate_all_faces_ex(g, true);
    auto loopless = delete_self_loops(tri.graph);
    const PlaneGraph& gp = loopless.graph;
    if (gp.node_count() < 4 || gp.edge_count() < gp.node_count())
        fail(Err::TooSmall, "triangulated graph has no usable cycle");
    int d = 0;
    for (const auto& f : gp.faces().faces) d = std::max(d, static_cast<int>(f.size()));
    SeparatorCycle sep;
    try {
        sep = find_cycle_separator(gp, d);
    } catch (const Error& e) {
        if (e.code() == Err::NoCycle) fail(Err::TooSmall, "no separator cycle");
        throw;
    }

    // cycle darts in tri.graph coordinates
    std::vector<EdgeId> inv(gp.edge_count(), -1);
    for (EdgeId e = 0; e < tri.graph.edge_count(); ++e)
        if (loopless.edge_map[e] >= 0) inv[loopless.edge_map[e]] = e;
    std::vector<Dart> cyc_tri;
    for (Dart d2 : sep.darts) cyc_tri.push_back(dart_of(inv[edge_of(d2)], side_of(d2)));

    // G_C: drop the triangulation edges that the cycle does not use
    const EdgeId m_orig = g.edge_count();
    std::vector<std::uint8_t> drop(tri.graph.edge_count(), 0);
    for (EdgeId e = m_orig; e < tri.graph.edge_count(); ++e) drop[e] = 1;
    for (Dart d2 : cyc_tri) drop[edge_of(d2)] = 0;
    auto gc_result = delete_edges(tri.graph, drop, true);
    const PlaneGraph& gc = gc_result.graph;

    std::vector<Dart> cyc;
    for (Dart d2 : cyc_tri) {
        EdgeId ne = gc_result.edge_map[edge_of(d2)];
        require(ne >= 0, Err::ContractUnmet, "cycle edge lost building G_C");
        cyc.push_back(dart_of(ne, side_of(d2)));
    }
    // x = cycle node owning the lowest cycle dart
    {
        std::size_t best = 0;
        for (std::size_t i = 1; i < cyc.size(); ++i)
            if (cyc[i] < cyc[best]) best = i;
        std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
    }
    const std::int32_t l = static_cast<std::int32_t>(cyc.size());

    PlanarSplit out;
    out.separator_len = l;
    out.original.resize(l);
    // gc edge e is original iff its tri.graph preimage is below m_orig
    {
        std::vector<EdgeId> gc_to_tri(gc.edge_count(), -1);
        for (EdgeId e = 0; e < tri.graph.edge_count(); ++e)
            if (gc_result.edge_map[e] >= 0) gc_to_tri[gc_result.edge_map[e]] = e;
        for (std::int32_t q = 0; q < l; ++q)
            out.original[q] = gc_to_tri[edge_of(cyc[q])] < m_orig ? 1 : 0;
    }

    CutResult cut = cut_along_cycle(gc, cyc);

    int k1 = degree_gap(cut.inside, std::max(l + 2, 6));
    int k2 = degree_gap(cut.outside, std::max(l + 2, 6));
    out.k1 = static_cast<std::uint32_t>(k1);
    out.k2 = static_cast<std::uint32_t>(k2);

    {
        Extension ext(cut.inside);
        Dart outer = attach_wheel(ext, cut.inside.exterior_walk(), k1, true);
        out.g1 = ext.build(outer);
    }
    {
        Extension ext(cut.outside);
        std::vector<Dart> hole;
        Dart d2 = cut.hole_dart;
        do {
            hole.push_back(d2);
            d2 = ext.next[twin(d2)];
        } while (d2 != cut.hole_dart);
        attach_wheel(ext, hole, k2, false);
        out.g2 = ext.build(cut.outside.outer_dart());
    }

    require(out.g1.node_count() == cut.inside_strict_nodes + l + k1 + 1, Err::ContractUnmet,
            "inside part node accounting");
    require(out.g2.node_count() == cut.outside_strict_nodes + l + k2 + 1, Err::ContractUnmet,
            "outside part node accounting");
    require(out.g1.node_count() + out.g2.node_count() == n + l + k1 + k2 + 2, Err::ContractUnmet,
            "split node accounting");
    if (std::max(out.g1.node_count(), out.g2.node_count()) > rho * n)
        fail(Err::SplitNotShrinking, "separator split fails the shrink factor");

    // surface pi violations in the parts rather than assuming the paper's
    // connectivity claims
    for (const PlaneGraph* part : {&out.g1, &out.g2}) {
        auto viol = validate(*part, pi);
        require(viol.empty(), Err::ContractUnmet, "split part violates pi");
    }
    return out;
}

WheelInfo identify_wheel(const PlaneGraph& gi, int k, int l) {
    WheelInfo out;
    for (NodeId v = 0; v < gi.node_count(); ++v) {
        if (gi.degree(v) != k) continue;
        require(out.hub == kNoNode, Err::WheelNotFound, "several degree-k nodes");
        out.hub = v;
    }
    require(out.hub != kNoNode, Err::WheelNotFound, "no degree-k node");

    std::set<NodeId> rim_set;
    for (Dart d : gi.rotation(out.hub)) {
        NodeId w = gi.head(twin(d));
        require(w != out.hub, Err::WheelNotFound, "hub has a self-loop");
        require(rim_set.insert(w).second, Err::WheelNotFound, "hub has parallel spokes");
    }
    auto neighbours = [&](NodeId v) {
        std::set<NodeId> out_set;
        for (Dart d : gi.rotation(v)) out_set.insert(gi.head(twin(d)));
        return out_set;
    };
    auto adjacent = [&](NodeId a, NodeId b2) {
        for (Dart d : gi.rotation(a))
            if (gi.head(twin(d)) == b2) return true;
        return false;
    };

    NodeId w1 = kNoNode, wk = kNoNode;
    for (NodeId v : rim_set) {
        if (gi.degree(v) == 5) {
            require(w1 == kNoNode, Err::AmbiguousRim, "several degree-5 rim nodes");
            w1 = v;
        }
    }
    require(w1 != kNoNode, Err::AmbiguousRim, "no degree-5 rim node");
    auto nb1 = neighbours(w1);
    for (NodeId v : rim_set) {
        if (v == w1 || !nb1.count(v)) continue;
        if (gi.degree(v) != 3) continue;
        require(wk == kNoNode, Err::AmbiguousRim, "several degree-3 common neighbours");
        wk = v;
    }
    require(wk != kNoNode, Err::AmbiguousRim, "w_k not found");

    out.rim.assign(1, w1);
    std::set<NodeId> seen{w1, wk};
    // w2: common neighbour of hub and w1, not wk, not adjacent to wk
    NodeId w2 = kNoNode;
    for (NodeId v : rim_set) {
        if (v == w1 || v == wk || !nb1.count(v)) continue;
        if (adjacent(v, wk)) continue;
        require(w2 == kNoNode, Err::AmbiguousRim, "several candidates for w_2");
        w2 = v;
    }
    require(w2 != kNoNode, Err::AmbiguousRim, "w_2 not found");
    out.rim.push_back(w2);
    seen.insert(w2);
    while (static_cast<int>(out.rim.size()) < k - 1) {
        NodeId prev = out.rim[out.rim.size() - 2];
        NodeId curv = out.rim.back();
        NodeId nxt = kNoNode;
        for (NodeId v : neighbours(curv)) {
            if (v == prev || v == out.hub || !rim_set.count(v) || seen.count(v)) continue;
            require(nxt == kNoNode, Err::AmbiguousRim, "rim walk is ambiguous");
            nxt = v;
        }
        require(nxt != kNoNode, Err::AmbiguousRim, "rim walk broke");
        out.rim.push_back(nxt);
        seen.insert(nxt);
    }
    out.rim.push_back(wk);
    require(static_cast<int>(out.rim.size()) == k, Err::AmbiguousRim, "rim size mismatch");

    std::set<NodeId> wheel_set(out.rim.begin(), out.rim.end());
    wheel_set.insert(out.hub);
    for (int i = 0; i < l; ++i) {
        NodeId wi = out.rim[i];
        NodeId x = kNoNode;
        for (NodeId v : neighbours(wi)) {
            if (wheel_set.count(v)) continue;
            require(x == kNoNode, Err::AmbiguousRim, "several attachments at one rim node");
            x = v;
        }
        require(x != kNoNode, Err::AmbiguousRim, "missing attachment");
        out.attachments.push_back(x);
    }
    for (int i = l; i < k; ++i) {
        for (NodeId v : neighbours(out.rim[i]))
            require(wheel_set.count(v), Err::AmbiguousRim, "unexpected attachment on the free arc");
    }
    return out;
}

namespace {

// The unique dart at x whose edge avoids the wheel and whose face touches it.
Dart separator_dart_at(const PlaneGraph& g, NodeId x, const std::set<NodeId>& wheel) {
    Dart found = kNoDart;
    for (Dart d : g.rotation(x)) {
        if (wheel.count(g.head(twin(d)))) continue;
        bool touches = false;
        for (Dart fd : g.faces().faces[g.faces().face_of[d]])
            if (wheel.count(g.head(fd))) touches = true;
        if (!touches) continue;
        require(found == kNoDart, Err::BoundaryMismatch, "ambiguous separator dart");
        found = d;
    }
    require(found != kNoDart, Err::BoundaryMismatch, "no separator dart at x");
    return found;
}

}  // namespace

PlaneGraph merge_planar(const PlaneGraph& g1, const PlaneGraph& g2, std::uint32_t k1,
                        std::uint32_t k2, const std::vector<std::uint8_t>& original) {
    const std::int32_t l = static_cast<std::int32_t>(original.size());
    require(l >= 2, Err::BitmapLengthMismatch, "originality bitmap too short");

    WheelInfo wi1 = identify_wheel(g1, static_cast<int>(k1), l);
    WheelInfo wi2 = identify_wheel(g2, static_cast<int>(k2), l);

    std::set<NodeId> wheel1(wi1.rim.begin(), wi1.rim.end());
    wheel1.insert(wi1.hub);
    std::set<NodeId> wheel2(wi2.rim.begin(), wi2.rim.end());
    wheel2.insert(wi2.hub);

    Dart in_dart_old = separator_dart_at(g1, wi1.attachments[0], wheel1);
    Dart hole_old = separator_dart_at(g2, wi2.attachments[0], wheel2);

    auto in_rm = detail::remove_nodes(g1, wheel1);
    auto out_rm = detail::remove_nodes(g2, wheel2);
    auto map_dart = [](const std::vector<EdgeId>& em, Dart d) {
        EdgeId e = em[edge_of(d)];
        return e < 0 ? kNoDart : dart_of(e, side_of(d));
    };
    Dart in_dart = map_dart(in_rm.edge_map, in_dart_old);
    Dart hole = map_dart(out_rm.edge_map, hole_old);
    require(in_dart != kNoDart && hole != kNoDart, Err::BoundaryMismatch,
            "separator darts lost while unwrapping");

    PlaneGraph glued = glue_along_cycle(in_rm.graph, out_rm.graph, hole, in_dart);

    std::vector<std::uint8_t> remove(glued.edge_count(), 0);
    bool any = false;
    for (std::int32_t q = 0; q < l; ++q) {
        if (!original[q]) {
            remove[q] = 1;  // glue numbers the cycle edges 0..l-1 in walk order
            any = true;
        }
    }
    if (!any) return glued;
    return delete_edges(glued, remove, true).graph;
}

}  // namespace pgc
