#include "pgc/base_table.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pgc {

int BaseTable::index_width() const {
    std::uint64_t a = alpha();
    int w = 0;
    while ((std::uint64_t{1} << w) < a) ++w;
    return w;
}

namespace {

// ── shared growth helpers ───────────────────────────────────────

PlaneGraph with_outer(const PlaneGraph& g, Dart new_outer) {
    std::vector<NodeId> head(g.dart_count());
    std::vector<Dart> next(g.dart_count());
    for (Dart d = 0; d < g.dart_count(); ++d) {
        head[d] = g.head(d);
        next[d] = g.next(d);
    }
    std::vector<std::uint8_t> fwd(g.edge_forward());
    std::vector<Dart> host(g.component_count()), bnd(g.component_count());
    for (std::int32_t c = 0; c < g.component_count(); ++c) {
        host[c] = g.component_host(c);
        bnd[c] = g.component_boundary(c);
    }
    // rerooting may move the exterior into another component; hosts of the
    // old and new root components swap roles only when both sit outside
    auto new_root = g.component_of(g.head(new_outer));
    if (host[new_root] != kNoDart)
        fail(Err::MalformedSpec, "cannot reroot into a nested component");
    bnd[new_root] = new_outer;
    return PlaneGraph::from_arrays(g.node_count(), std::move(head), std::move(next), new_outer,
                                   g.directed(), std::move(fwd), std::move(host), std::move(bnd));
}

struct GrowLimits {
    int n_max;
    int l3;
    int l4;
};

// All states reachable by pendant nodes, in-face chords/loops/parallels, and
// re-rooting: every connected plane multigraph within the limits, with every
// choice of exterior face.
std::map<std::string, PlaneGraph> grow_connected(const GrowLimits& lim) {
    std::map<std::string, PlaneGraph> states;
    std::deque<const PlaneGraph*> queue;
    auto admit = [&](PlaneGraph&& g) {
        std::string code = canonical_plane_code(g);
        auto [it, fresh] = states.emplace(std::move(code), std::move(g));
        if (fresh) {
            require(states.size() <= TableCache::kMaxStates, Err::CapExceeded,
                    "state explosion during enumeration");
            queue.push_back(&it->second);
        }
    };
    {
        // one bare node
        admit(PlaneGraph::from_arrays(1, {}, {}, kNoDart, false, {}));
    }
    while (!queue.empty()) {
        const PlaneGraph& g = *queue.front();
        queue.pop_front();
        const NodeId n = g.node_count();

        if (g.dart_count() == 0) {
            if (n < lim.n_max) {
                GraphBuilder b(g);
                NodeId w = b.add_node();
                b.add_edge(0, kNoDart, w, kNoDart, true);
                b.set_outer(0);
                admit(std::move(b.finalize().graph));
            }
            continue;
        }
        // pendant node at every corner
        if (n < lim.n_max) {
            for (Dart a = 0; a < g.dart_count(); ++a) {
                GraphBuilder b(g);
                NodeId w = b.add_node();
                b.add_edge(g.head(a), g.prev(a), w, kNoDart, true);
                admit(std::move(b.finalize().graph));
            }
        }
        // chord between two corners of one face (loops and parallels within
        // bounds)
        for (const auto& face : g.faces().faces) {
            const std::size_t fs = face.size();
            for (std::size_t i = 0; i < fs; ++i) {
                for (std::size_t j = i; j < fs; ++j) {
                    NodeId u = g.head(face[i]), v = g.head(face[j]);
                    if (u == v) {
                        if (g.self_loop_count(u) >= lim.l3) continue;
                    } else {
                        int mult = 0;
                        for (EdgeId e = 0; e < g.edge_count(); ++e) {
                            auto p = std::minmax(g.head(2 * e), g.head(2 * e + 1));
                            if (p == std::minmax(u, v)) ++mult;
                        }
                        if (mult >= lim.l4) continue;
                    }
                    GraphBuilder b(g);
                    b.add_edge(u, b.prev(face[i]), v, b.prev(face[j]), u <= v);
                    admit(std::move(b.finalize().graph));
                }
            }
        }
        // re-root: designate each face as the exterior
        for (const auto& face : g.faces().faces) {
            Dart lowest = *std::min_element(face.begin(), face.end());
            if (g.faces().face_of[lowest] == g.faces().exterior) continue;
            admit(with_outer(g, lowest));
        }
    }
    return states;
}

// Places component K into a region of S: the exterior (host == kNoDart) or
// the face of S designated by host_dart.
PlaneGraph place_component(const PlaneGraph& s, const PlaneGraph& k, Dart host_dart) {
    const Dart off = s.dart_count();
    const NodeId noff = s.node_count();
    std::vector<NodeId> head;
    std::vector<Dart> next;
    std::vector<std::uint8_t> fwd;
    head.reserve(off + k.dart_count());
    next.reserve(off + k.dart_count());
    for (Dart d = 0; d < off; ++d) {
        head.push_back(s.head(d));
        next.push_back(s.next(d));
    }
    for (Dart d = 0; d < k.dart_count(); ++d) {
        head.push_back(k.head(d) + noff);
        next.push_back(k.next(d) + off);
    }
    for (EdgeId e = 0; e < s.edge_count(); ++e) fwd.push_back(s.edge_forward(e) ? 1 : 0);
    for (EdgeId e = 0; e < k.edge_count(); ++e) fwd.push_back(k.edge_forward(e) ? 1 : 0);
    std::vector<Dart> host, bnd;
    for (std::int32_t c = 0; c < s.component_count(); ++c) {
        host.push_back(s.component_host(c));
        bnd.push_back(s.component_boundary(c));
    }
    auto shift = [&](Dart d) { return d == kNoDart ? kNoDart : d + off; };
    for (std::int32_t c = 0; c < k.component_count(); ++c) {
        host.push_back(c == k.root_component() ? host_dart : shift(k.component_host(c)));
        bnd.push_back(shift(c == k.root_component() ? k.outer_dart() : k.component_boundary(c)));
    }
    Dart outer = s.outer_dart();
    if (outer == kNoDart) outer = shift(k.outer_dart());
    return PlaneGraph::from_arrays(s.node_count() + k.node_count(), std::move(head),
                                   std::move(next), outer, s.directed(), std::move(fwd),
                                   std::move(host), std::move(bnd));
}

std::map<std::string, PlaneGraph> grow_any(const GrowLimits& lim,
                                           const std::map<std::string, PlaneGraph>& connected) {
    std::map<std::string, PlaneGraph> states;
    std::deque<const PlaneGraph*> queue;
    auto admit = [&](PlaneGraph&& g) {
        std::string code = canonical_plane_code(g);
        auto [it, fresh] = states.emplace(std::move(code), std::move(g));
        if (fresh) {
            require(states.size() <= TableCache::kMaxStates, Err::CapExceeded,
                    "state explosion during enumeration");
            queue.push_back(&it->second);
        }
    };
    for (const auto& [code, g] : connected) {
        PlaneGraph copy = g;
        admit(std::move(copy));
    }
    while (!queue.empty()) {
        const PlaneGraph& s = *queue.front();
        queue.pop_front();
        for (const auto& [code, k] : connected) {
            if (s.node_count() + k.node_count() > lim.n_max) continue;
            admit(place_component(s, k, kNoDart));
            for (const auto& face : s.faces().faces)
                admit(place_component(s, k, *std::min_element(face.begin(), face.end())));
        }
    }
    return states;
}

std::vector<PlaneGraph> orientations_of(const PlaneGraph& g) {
    std::vector<PlaneGraph> out;
    const EdgeId m = g.edge_count();
    require(m <= 20, Err::CapExceeded, "too many edges to enumerate orientations");
    std::vector<NodeId> head(g.dart_count());
    std::vector<Dart> next(g.dart_count());
    for (Dart d = 0; d < g.dart_count(); ++d) {
        head[d] = g.head(d);
        next[d] = g.next(d);
    }
    std::vector<Dart> host(g.component_count()), bnd(g.component_count());
    for (std::int32_t c = 0; c < g.component_count(); ++c) {
        host[c] = g.component_host(c);
        bnd[c] = g.component_boundary(c);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint8_t> fwd(m);
        for (EdgeId e = 0; e < m; ++e) fwd[e] = (mask >> e) & 1;
        out.push_back(PlaneGraph::from_arrays(g.node_count(), head, next, g.outer_dart(), true,
                                              std::move(fwd), host, bnd));
    }
    return out;
}

std::string cache_file_name(const PiDescriptor& pi, int n) {
    std::string s = pi.to_string();
    for (char& ch : s)
        if (ch == ',' || ch == '=') ch = '_';
    return "table_" + s + "_n" + std::to_string(n) + ".pgt";
}

}  // namespace

const BaseTable& TableCache::get(const PiDescriptor& pi, int n) {
    require(n >= 1, Err::MalformedSpec, "table size must be positive");
    require(n <= kMaxEnumerationNodes, Err::CapExceeded,
            "requested table beyond the enumeration cap");
    std::string key = pi.to_string() + "/" + std::to_string(n);
    auto it = mem_.find(key);
    if (it != mem_.end()) return it->second;

    // disk?
    if (!dir_.empty()) {
        std::ifstream in(dir_ + "/" + cache_file_name(pi, n));
        if (in) {
            std::string tag, pistr;
            int ver, fn;
            std::uint64_t alpha;
            in >> tag >> ver >> pistr >> fn >> alpha;
            if (tag == "pgc-table" && ver == 1 && pistr == pi.to_string() && fn == n) {
                BaseTable t;
                t.pi = pi;
                t.n = n;
                t.keys.resize(alpha);
                t.reprs.resize(alpha);
                bool ok = true;
                for (std::uint64_t i = 0; i < alpha && ok; ++i)
                    ok = static_cast<bool>(in >> t.keys[i] >> t.reprs[i]);
                if (ok && std::is_sorted(t.keys.begin(), t.keys.end()))
                    return mem_.emplace(key, std::move(t)).first->second;
            }
            // fall through and rebuild on any mismatch
        }
    }

    GrowLimits lim{n, pi.l3, pi.l4};
    auto connected = grow_connected(lim);
    std::map<std::string, PlaneGraph>* universe = &connected;
    std::map<std::string, PlaneGraph> any_states;
    if (pi.connectivity == Connectivity::Any) {
        any_states = grow_any(lim, connected);
        universe = &any_states;
    }

    std::map<std::string, std::string> entries;  // key -> repr
    PiDescriptor undirected_pi = pi;
    undirected_pi.directed = false;
    for (const auto& [code, g] : *universe) {
        if (g.node_count() != n) continue;
        if (!validate(g, undirected_pi).empty()) continue;
        if (!pi.directed) {
            entries.emplace(canonical_code(g, pi, kMaxEnumerationNodes), code);
        } else {
            for (const PlaneGraph& og : orientations_of(g))
                entries.emplace(canonical_code(og, pi, kMaxEnumerationNodes),
                                canonical_plane_code(og));
        }
    }
    require(!entries.empty(), Err::CapExceeded, "no pi-graphs of this size exist");

    BaseTable t;
    t.pi = pi;
    t.n = n;
    for (auto& [k, r] : entries) {
        t.keys.push_back(k);
        t.reprs.push_back(r);
    }

    if (!dir_.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        std::ofstream out(dir_ + "/" + cache_file_name(pi, n), std::ios::trunc);
        if (out) {
            out << "pgc-table 1 " << pi.to_string() << ' ' << n << ' ' << t.alpha() << '\n';
            for (std::size_t i = 0; i < t.keys.size(); ++i)
                out << t.keys[i] << ' ' << t.reprs[i] << '\n';
        }
    }
    return mem_.emplace(key, std::move(t)).first->second;
}

std::uint64_t count_distinct(TableCache& cache, const PiDescriptor& pi, int n) {
    return cache.get(pi, n).alpha();
}

std::uint64_t index_value(const PlaneGraph& g, const PiDescriptor& pi, const BaseTable& table) {
    std::string key = canonical_code(g, pi, TableCache::kMaxEnumerationNodes);
    auto it = std::lower_bound(table.keys.begin(), table.keys.end(), key);
    if (it == table.keys.end() || *it != key)
        fail(Err::NotInTable, "graph is not in the base table (pi violation?)");
    return static_cast<std::uint64_t>(it - table.keys.begin());
}

BitString index_bits(const PlaneGraph& g, const PiDescriptor& pi, const BaseTable& table) {
    BitString out;
    out.push_uint(index_value(g, pi, table), table.index_width());
    return out;
}

PlaneGraph unindex(std::uint64_t index, const BaseTable& table) {
    if (index >= table.alpha()) fail(Err::NotInTable, "index out of range");
    return plane_code_to_graph(table.reprs[index]);
}

// ── independent generators for cross-checks ─────────────────────

std::set<std::string> enumerate_by_rotation_brute(const PiDescriptor& pi, int n) {
    require(pi.simple(), Err::CapExceeded, "rotation brute force covers simple pi only");
    require(n >= 1 && n <= 4, Err::CapExceeded, "rotation brute force covers n <= 4 only");
    require(pi.connectivity != Connectivity::Any, Err::CapExceeded,
            "rotation brute force covers connected classes only");
    std::set<std::string> out;
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) pairs.push_back({u, v});

    PiDescriptor undirected_pi = pi;
    undirected_pi.directed = false;

    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1u << i)) edges.push_back(pairs[i]);
        const EdgeId m = static_cast<EdgeId>(edges.size());
        if (n > 1 && m == 0) continue;
        std::vector<std::vector<Dart>> at(n);
        for (EdgeId e = 0; e < m; ++e) {
            at[edges[e].first].push_back(2 * e);
            at[edges[e].second].push_back(2 * e + 1);
        }
        // iterate rotation systems: per node, permutations of darts after the
        // first (cyclic orders)
        std::vector<std::vector<std::vector<Dart>>> node_orders(n);
        for (NodeId v = 0; v < n; ++v) {
            auto& darts = at[v];
            if (darts.size() <= 2) {
                node_orders[v].push_back(darts);
                continue;
            }
            std::vector<Dart> rest(darts.begin() + 1, darts.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<Dart> order{darts[0]};
                order.insert(order.end(), rest.begin(), rest.end());
                node_orders[v].push_back(order);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<std::vector<Dart>> rotations(n);
            for (NodeId v = 0; v < n; ++v) rotations[v] = node_orders[v][pick[v]];
            Dart outer0 = m > 0 ? 0 : kNoDart;
            try {
                PlaneGraph g = PlaneGraph::build(n, rotations, outer0, false, {});
                for (const auto& face : g.faces().faces) {
                    PlaneGraph rooted =
                        with_outer(g, *std::min_element(face.begin(), face.end()));
                    if (!validate(rooted, undirected_pi).empty()) continue;
                    if (!pi.directed) {
                        out.insert(canonical_code(rooted, pi, TableCache::kMaxEnumerationNodes));
                    } else {
                        for (const PlaneGraph& og : orientations_of(rooted))
                            out.insert(canonical_code(og, pi, TableCache::kMaxEnumerationNodes));
                    }
                }
                if (m == 0 && validate(g, undirected_pi).empty())
                    out.insert(canonical_code(g, pi, TableCache::kMaxEnumerationNodes));
            } catch (const Error& e) {
                if (e.code() != Err::NonPlanarRotation) throw;
            }
            // advance the mixed-radix counter
            NodeId v = 0;
            while (v < n && ++pick[v] == node_orders[v].size()) pick[v++] = 0;
            if (v == n) break;
        }
    }
    return out;
}

std::set<std::string> enumerate_triangulations_by_insertion_flip(int n) {
    require(n >= 3 && n <= TableCache::kMaxEnumerationNodes, Err::CapExceeded,
            "triangulation closure cap");
    // seed: the triangle
    PlaneGraph triangle = PlaneGraph::build(
        3, {{dart_of(0, 0), dart_of(2, 1)}, {dart_of(1, 0), dart_of(0, 1)},
            {dart_of(2, 0), dart_of(1, 1)}},
        0, false, {});

    std::map<std::string, PlaneGraph> states;
    std::deque<const PlaneGraph*> queue;
    auto admit = [&](PlaneGraph&& g) {
        std::string code = canonical_plane_code(g);
        auto [it, fresh] = states.emplace(std::move(code), std::move(g));
        if (fresh) queue.push_back(&it->second);
    };
    admit(std::move(triangle));
    while (!queue.empty()) {
        const PlaneGraph& g = *queue.front();
        queue.pop_front();
        const auto& fl = g.faces();
        // insert a degree-3 node into an interior face
        if (g.node_count() < n) {
            for (std::int32_t f = 0; f < static_cast<std::int32_t>(fl.size()); ++f) {
                if (f == fl.exterior) continue;
                GraphBuilder b(g);
                NodeId w = b.add_node();
                // star the triangle: spokes placed by the face-successor rule
                const auto& face = fl.faces[f];
                std::vector<Dart> spokes;
                for (int i = 0; i < 3; ++i) {
                    NodeId u = g.head(face[i]);
                    spokes.push_back(
                        b.add_edge(w, spokes.empty() ? kNoDart : spokes.back(), u,
                                   b.prev(face[i]), true));
                }
                admit(std::move(b.finalize().graph));
            }
        }
        // flip an interior edge shared by two interior triangles
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto f1 = fl.face_of[2 * e], f2 = fl.face_of[2 * e + 1];
            if (f1 == fl.exterior || f2 == fl.exterior || f1 == f2) continue;
            // quad corners: b -p-> c -q-> a -r-> d -s-> b with e = {a, b}
            Dart e1 = 2 * e;
            Dart p = g.face_successor(e1), q = g.face_successor(p);
            Dart e2 = 2 * e + 1;
            Dart r = g.face_successor(e2), s = g.face_successor(r);
            NodeId c = g.head(q), d = g.head(s);
            if (c == d) continue;
            bool exists = false;
            for (EdgeId e3 = 0; e3 < g.edge_count() && !exists; ++e3)
                exists = std::minmax(g.head(2 * e3), g.head(2 * e3 + 1)) == std::minmax(c, d);
            if (exists) continue;
            GraphBuilder b(g);
            b.delete_edge(e);
            b.add_edge(c, b.prev(q), d, b.prev(s), true);
            admit(std::move(b.finalize().graph));
        }
        // reroot
        for (const auto& face : fl.faces) {
            Dart lowest = *std::min_element(face.begin(), face.end());
            if (fl.face_of[lowest] == fl.exterior) continue;
            admit(with_outer(g, lowest));
        }
    }
    std::set<std::string> out;
    PiDescriptor tri_pi;
    tri_pi.connectivity = Connectivity::Triangulated;
    tri_pi.l3 = 0;
    tri_pi.l4 = 1;
    for (const auto& [code, g] : states) {
        if (g.node_count() != n) continue;
        if (!validate(g, tri_pi).empty()) continue;
        out.insert(code);
    }
    return out;
}

}  // namespace pgc
