#include "pgc/codec_tri.hpp"

#include <algorithm>
#include <set>

#include "extend.hpp"
#include "pgc/separator.hpp"

namespace pgc {

namespace detail {

NodeId wrap_boundary_triangle(Extension& ext, const std::vector<Dart>& walk, Dart* outer_out) {
    const std::int32_t l = static_cast<std::int32_t>(walk.size());
    require(l >= 2, Err::ContractUnmet, "boundary walk too short to wrap");
    NodeId y = ext.add_node();
    NodeId a = ext.add_node();
    NodeId b = ext.add_node();
    auto node_at = [&](std::int32_t i) { return ext.head[walk[i % l]]; };

    Dart ya = ext.add_edge(y, a);
    Dart ab = ext.add_edge(a, b);
    Dart by = ext.add_edge(b, y);
    Dart yx1 = ext.add_edge(y, node_at(0));
    Dart ax1 = ext.add_edge(a, node_at(0));
    Dart ax2 = ext.add_edge(a, node_at(1));
    std::vector<Dart> bx(l);  // b to walk positions 1..l-1 and 0
    for (std::int32_t i = 1; i <= l; ++i) bx[i % l] = ext.add_edge(b, node_at(i % l));

    ext.face({ya, ab, by});  // the new exterior triangle
    *outer_out = ya;
    ext.face({yx1, twin(ax1), twin(ya)});         // (y, x1, a)
    ext.face({ax1, walk[0], twin(ax2)});          // (a, x1, x2)
    ext.face({ax2, twin(bx[1 % l]), twin(ab)});   // (a, x2, b)
    for (std::int32_t q = 1; q + 1 < l; ++q)
        ext.face({bx[q], walk[q], twin(bx[q + 1])});  // (b, x_{q+1}, x_{q+2})
    ext.face({bx[l - 1], walk[l - 1], twin(bx[0])});  // (b, x_l, x_1)
    ext.face({bx[0], twin(yx1), twin(by)});           // (b, x_1, y)
    return y;
}

NodeId star_face_walk(Extension& ext, const std::vector<Dart>& walk) {
    NodeId z = ext.add_node();
    const std::int32_t l = static_cast<std::int32_t>(walk.size());
    std::vector<Dart> spokes(l);
    for (std::int32_t j = 0; j < l; ++j) spokes[j] = ext.add_edge(z, ext.head[walk[j]]);
    for (std::int32_t j = 0; j < l; ++j)
        ext.face({spokes[j], walk[j], twin(spokes[(j + 1) % l])});
    return z;
}

}  // namespace detail

using detail::Extension;

TriSplit split_tri(const PlaneGraph& g, double rho) {
    require(g.is_triangulation(), Err::MalformedSpec, "split_tri needs a plane triangulation");
    const NodeId n = g.node_count();
    if (n < 5) fail(Err::TooSmall, "triangulation too small to split");

    // separator runs on the undirected loop-free version
    auto loopless = delete_self_loops(g);
    const PlaneGraph& gp = loopless.graph;
    if (gp.edge_count() < gp.node_count()) fail(Err::TooSmall, "loop-free version has no cycle");
    int d = 0;
    for (const auto& f : gp.faces().faces) d = std::max(d, static_cast<int>(f.size()));
    SeparatorCycle sep;
    try {
        sep = find_cycle_separator(gp, d);
    } catch (const Error& e) {
        if (e.code() == Err::NoCycle) fail(Err::TooSmall, "no separator cycle");
        throw;
    }

    // map the cycle back into g (delete_self_loops keeps dart sides)
    std::vector<EdgeId> inv(gp.edge_count(), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (loopless.edge_map[e] >= 0) inv[loopless.edge_map[e]] = e;
    std::vector<Dart> cyc;
    for (Dart d2 : sep.darts) cyc.push_back(dart_of(inv[edge_of(d2)], side_of(d2)));

    // x = the cycle node owning the lowest cycle dart; rotate it first
    {
        std::size_t best = 0;
        for (std::size_t i = 1; i < cyc.size(); ++i)
            if (cyc[i] < cyc[best]) best = i;
        std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
    }

    CutResult cut = cut_along_cycle(g, cyc);
    const std::int32_t l = static_cast<std::int32_t>(cyc.size());

    TriSplit out;
    out.separator_len = l;

    {
        Extension ext(cut.inside);
        std::vector<Dart> walk = cut.inside.exterior_walk();
        Dart outer = kNoDart;
        detail::wrap_boundary_triangle(ext, walk, &outer);
        out.g1 = ext.build(outer);
    }
    {
        Extension ext(cut.outside);
        std::vector<Dart> hole;
        {
            Dart d2 = cut.hole_dart;
            do {
                hole.push_back(d2);
                d2 = ext.next[twin(d2)];
            } while (d2 != cut.hole_dart);
        }
        detail::star_face_walk(ext, hole);
        std::vector<Dart> bwalk = cut.outside.exterior_walk();
        Dart outer = kNoDart;
        detail::wrap_boundary_triangle(ext, bwalk, &outer);
        out.g2 = ext.build(outer);
    }

    require(out.g1.is_triangulation() && out.g2.is_triangulation(), Err::ContractUnmet,
            "split parts are not triangulations");
    require(out.g1.node_count() == cut.inside_strict_nodes + l + 3, Err::ContractUnmet,
            "inside part node accounting");
    require(out.g2.node_count() == cut.outside_strict_nodes + l + 4, Err::ContractUnmet,
            "outside part node accounting");
    require(out.g1.node_count() + out.g2.node_count() == n + l + 7, Err::ContractUnmet,
            "split node accounting");
    if (std::max(out.g1.node_count(), out.g2.node_count()) > rho * n)
        fail(Err::SplitNotShrinking, "separator split fails the shrink factor");

    // side string: dfs numbers of x (and z) under roots y1, y2
    {
        NodeId y1 = out.g1.node_count() - 3;  // wrap appends y first
        auto num = dfs_number(out.g1, y1);
        out.dfs_x_in_g1 = static_cast<std::uint32_t>(num[0]);  // x is node 0 of the cut
    }
    {
        NodeId z = cut.outside.node_count();      // star appends z first
        NodeId y2 = cut.outside.node_count() + 1; // wrap appends y after z
        auto num = dfs_number(out.g2, y2);
        out.dfs_x_in_g2 = static_cast<std::uint32_t>(num[0]);
        out.dfs_z_in_g2 = static_cast<std::uint32_t>(num[z]);
    }
    return out;
}

namespace detail {

NodeId lowest_degree_boundary_node(const PlaneGraph& g) {
    std::set<NodeId> bset;
    for (Dart d : g.exterior_walk()) bset.insert(g.head(d));
    NodeId best = kNoNode;
    bool tie = false;
    for (NodeId v : bset) {
        if (best == kNoNode || g.degree(v) < g.degree(best)) {
            best = v;
            tie = false;
        } else if (g.degree(v) == g.degree(best)) {
            tie = true;
        }
    }
    require(best != kNoNode && !tie, Err::AmbiguousLowDegree,
            "exterior boundary lacks a strict minimum-degree node");
    return best;
}

NodeId node_with_number(const std::vector<std::int32_t>& num, std::uint32_t want) {
    if (want < 1 || want > num.size()) fail(Err::DfsOutOfRange, "dfs number out of range");
    for (NodeId v = 0; v < static_cast<NodeId>(num.size()); ++v)
        if (num[v] == static_cast<std::int32_t>(want)) return v;
    fail(Err::DfsOutOfRange, "dfs number not assigned");
}

NodeRemoval remove_nodes(const PlaneGraph& g, const std::set<NodeId>& victims) {
    std::vector<std::uint8_t> mask(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (victims.count(g.head(2 * e)) || victims.count(g.head(2 * e + 1))) mask[e] = 1;
    auto del = delete_edges(g, mask, false);
    // drop the now-bare victim nodes
    NodeRemoval out;
    out.edge_map = del.edge_map;
    out.node_map.assign(g.node_count(), kNoNode);
    NodeId keep = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!victims.count(v)) out.node_map[v] = keep++;
    const PlaneGraph& mid = del.graph;
    std::vector<NodeId> head(mid.dart_count());
    std::vector<Dart> next(mid.dart_count());
    for (Dart d2 = 0; d2 < mid.dart_count(); ++d2) {
        NodeId v = out.node_map[mid.head(d2)];
        require(v != kNoNode, Err::ContractUnmet, "victim node still has darts");
        head[d2] = v;
        next[d2] = mid.next(d2);
    }
    std::vector<std::uint8_t> fwd(mid.edge_forward());
    // victim components vanish; remaining components keep hosts
    std::vector<Dart> host, bnd;
    for (std::int32_t c = 0; c < mid.component_count(); ++c) {
        // keep only components that still own a surviving node
        bool alive = false;
        for (NodeId v = 0; v < g.node_count() && !alive; ++v)
            alive = !victims.count(v) && mid.component_of(v) == c;
        if (!alive) continue;
        host.push_back(mid.component_host(c));
        bnd.push_back(mid.component_boundary(c));
    }
    out.graph = PlaneGraph::from_arrays(keep, std::move(head), std::move(next), mid.outer_dart(),
                                        mid.directed(), std::move(fwd), std::move(host),
                                        std::move(bnd));
    return out;
}

}  // namespace detail

using detail::lowest_degree_boundary_node;
using detail::node_with_number;
using detail::remove_nodes;

PlaneGraph merge_tri(const PlaneGraph& g1, const PlaneGraph& g2, std::uint32_t dfs_x_in_g1,
                     std::uint32_t dfs_x_in_g2, std::uint32_t dfs_z_in_g2) {
    // locate x in g1 and recover the inside part
    NodeId y1 = lowest_degree_boundary_node(g1);
    NodeId x1;
    {
        auto num = dfs_number(g1, y1);
        x1 = node_with_number(num, dfs_x_in_g1);
    }
    std::set<NodeId> b1;
    for (Dart d : g1.exterior_walk()) b1.insert(g1.head(d));
    require(b1.size() == 3, Err::BoundaryMismatch, "inside part boundary is not a triangle");
    require(!b1.count(x1), Err::BoundaryMismatch, "x lies on the gadget triangle");

    // the forward separator dart at x: the cycle-edge dart whose face touches
    // the gadget triangle
    Dart in_dart_old = kNoDart;
    for (Dart d : g1.rotation(x1)) {
        NodeId other = g1.head(twin(d));
        if (b1.count(other)) continue;
        bool touches = false;
        for (Dart fd : g1.faces().faces[g1.faces().face_of[d]])
            if (b1.count(g1.head(fd))) touches = true;
        if (!touches) continue;
        require(in_dart_old == kNoDart, Err::BoundaryMismatch, "ambiguous separator dart at x");
        in_dart_old = d;
    }
    require(in_dart_old != kNoDart, Err::BoundaryMismatch, "no separator dart at x");

    auto in_rm = remove_nodes(g1, b1);
    Dart in_dart = in_rm.edge_map[edge_of(in_dart_old)] < 0
                       ? kNoDart
                       : dart_of(in_rm.edge_map[edge_of(in_dart_old)], side_of(in_dart_old));
    require(in_dart != kNoDart, Err::BoundaryMismatch, "separator dart lost in unwrapping");

    // locate x and z in g2; recover the outside part and the hole
    NodeId y2 = lowest_degree_boundary_node(g2);
    NodeId x2, z;
    {
        auto num = dfs_number(g2, y2);
        x2 = node_with_number(num, dfs_x_in_g2);
        z = node_with_number(num, dfs_z_in_g2);
    }
    std::set<NodeId> b2;
    for (Dart d : g2.exterior_walk()) b2.insert(g2.head(d));
    require(b2.size() == 3, Err::BoundaryMismatch, "outside part boundary is not a triangle");
    require(!b2.count(x2) && !b2.count(z) && x2 != z, Err::BoundaryMismatch,
            "x or z misplaced in the outside part");

    Dart star = kNoDart;
    for (Dart d : g2.rotation(x2)) {
        if (g2.head(twin(d)) != z) continue;
        require(star == kNoDart, Err::BoundaryMismatch, "multiple x-z edges");
        star = d;
    }
    require(star != kNoDart, Err::BoundaryMismatch, "x has no edge to z");
    Dart hole_old = g2.next(star);
    require(g2.head(twin(hole_old)) != z && !b2.count(g2.head(twin(hole_old))),
            Err::BoundaryMismatch, "hole dart misidentified");

    std::set<NodeId> victims2 = b2;
    victims2.insert(z);
    auto out_rm = remove_nodes(g2, victims2);
    Dart hole = out_rm.edge_map[edge_of(hole_old)] < 0
                    ? kNoDart
                    : dart_of(out_rm.edge_map[edge_of(hole_old)], side_of(hole_old));
    require(hole != kNoDart, Err::BoundaryMismatch, "hole dart lost in unwrapping");

    return glue_along_cycle(in_rm.graph, out_rm.graph, hole, in_dart);
}

}  // namespace pgc
