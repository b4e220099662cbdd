#include "pgc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace pgc {

namespace {

// Incremental triangulation state: rotation arrays plus a live list of
// interior triangles.  The exterior face never changes.
struct TriState {
    std::vector<NodeId> head;
    std::vector<Dart> next, prev;
    std::vector<std::array<Dart, 3>> faces;  // triples in orbit order
    std::vector<std::int32_t> face_of;       // per dart
    std::vector<std::int32_t> interior;      // live interior face ids
    std::vector<std::int32_t> interior_pos;  // face id -> position in `interior`
    std::set<std::pair<NodeId, NodeId>> present;
    NodeId n = 0;

    void set_next(Dart d, Dart x) { next[d] = x; prev[x] = d; }

    void add_face(std::array<Dart, 3> f, bool is_interior) {
        auto id = static_cast<std::int32_t>(faces.size());
        faces.push_back(f);
        interior_pos.push_back(-1);
        for (Dart d : f) face_of[d] = id;
        if (is_interior) {
            interior_pos[id] = static_cast<std::int32_t>(interior.size());
            interior.push_back(id);
        }
    }

    void kill_face(std::int32_t id) {
        auto pos = interior_pos[id];
        require(pos >= 0, Err::ContractUnmet, "generator touched the exterior face");
        interior_pos[interior.back()] = pos;
        std::swap(interior[pos], interior.back());
        interior.pop_back();
        interior_pos[id] = -1;
    }

    std::array<Dart, 3> oriented_face(std::int32_t id, Dart start) const {
        auto f = faces[id];
        while (f[0] != start) std::rotate(f.begin(), f.begin() + 1, f.end());
        return f;
    }

    // Splits interior face id by a new node joined to its three corners.
    void insert_node(std::int32_t id) {
        NodeId w = n++;
        auto f = faces[id];
        kill_face(id);
        Dart s[3];
        for (int j = 0; j < 3; ++j) {
            s[j] = static_cast<Dart>(head.size());
            head.push_back(w);
            head.push_back(head[f[j]]);
            next.resize(head.size());
            prev.resize(head.size());
            present.insert(std::minmax(w, head[f[j]]));
        }
        for (int j = 0; j < 3; ++j) {
            int jn = (j + 1) % 3;
            // face [s_j, f_j, twin(s_jn)]
            set_next(twin(s[j]), f[j]);
            set_next(twin(f[j]), twin(s[jn]));
            set_next(s[jn], s[j]);
            face_of.resize(head.size());
            add_face({s[j], f[j], twin(s[jn])}, true);
        }
    }

    // Diagonal flip of edge e; returns false when illegal.
    bool flip(EdgeId e, std::int32_t exterior_id) {
        Dart e1 = 2 * e, e2 = 2 * e + 1;
        auto f1 = face_of[e1], f2 = face_of[e2];
        if (f1 == exterior_id || f2 == exterior_id || f1 == f2) return false;
        auto t1 = oriented_face(f1, e1);
        auto t2 = oriented_face(f2, e2);
        Dart p = t1[1], q = t1[2], r = t2[1], s = t2[2];
        NodeId a = head[e1], b2 = head[e2];
        NodeId c = head[q], d = head[s];
        if (c == d || present.count(std::minmax(c, d))) return false;
        present.erase(std::minmax(a, b2));
        present.insert(std::minmax(c, d));
        // splice out both darts of e
        for (Dart x : {e1, e2}) {
            set_next(prev[x], next[x]);
        }
        // reuse the edge slot for {c, d}
        head[e1] = c;
        head[e2] = d;
        // splice in: at c immediately before q, at d immediately before s
        set_next(prev[q], e1);
        set_next(e1, q);
        set_next(prev[s], e2);
        set_next(e2, s);
        kill_face(f1);
        kill_face(f2);
        add_face({e1, s, p}, true);
        add_face({e2, q, r}, true);
        return true;
    }

    PlaneGraph build(bool validate_now = true) const {
        (void)validate_now;
        std::vector<NodeId> h = head;
        std::vector<Dart> nx = next;
        return PlaneGraph::from_arrays(n, std::move(h), std::move(nx), 0, false, {});
    }
};

TriState seed_triangle() {
    TriState st;
    st.n = 3;
    // edges: 0 = {0,1}, 1 = {1,2}, 2 = {2,0}
    st.head = {0, 1, 1, 2, 2, 0};
    st.next.assign(6, kNoDart);
    st.prev.assign(6, kNoDart);
    st.set_next(0, 5);
    st.set_next(5, 0);
    st.set_next(2, 1);
    st.set_next(1, 2);
    st.set_next(4, 3);
    st.set_next(3, 4);
    st.face_of.assign(6, -1);
    st.add_face({1, 5, 3}, true);   // interior
    st.add_face({0, 2, 4}, false);  // exterior, id 1
    st.present = {{0, 1}, {1, 2}, {0, 2}};
    return st;
}

}  // namespace

PlaneGraph gen_triangulation(int n, std::uint64_t seed) {
    require(n >= 3, Err::MalformedSpec, "triangulations need n >= 3");
    std::mt19937_64 rng(seed);
    TriState st = seed_triangle();
    const std::int32_t exterior_id = 1;
    while (st.n < n) {
        auto pick = st.interior[rng() % st.interior.size()];
        st.insert_node(pick);
    }
    EdgeId m = static_cast<EdgeId>(st.head.size() / 2);
    for (int i = 0; i < n; ++i) {
        EdgeId e = static_cast<EdgeId>(rng() % m);
        st.flip(e, exterior_id);
    }
    PlaneGraph g = st.build();
    require(g.edge_count() == 3 * g.node_count() - 6, Err::ContractUnmet,
            "triangulation edge count");
    require(g.is_triangulation(), Err::ContractUnmet, "generator output not a triangulation");
    return g;
}

PlaneGraph gen_plane_graph(int n, double deletion_fraction, std::uint64_t seed, int add_loops,
                           int add_parallel) {
    PlaneGraph tri = gen_triangulation(std::max(n, 3), seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

    // spanning tree by BFS in dart order
    std::vector<std::uint8_t> in_tree(tri.edge_count(), 0);
    {
        std::vector<std::uint8_t> seen(tri.node_count(), 0);
        std::vector<NodeId> queue{0};
        seen[0] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            NodeId v = queue[qi];
            for (Dart d : tri.rotation(v)) {
                NodeId w2 = tri.head(twin(d));
                if (seen[w2]) continue;
                seen[w2] = 1;
                in_tree[edge_of(d)] = 1;
                queue.push_back(w2);
            }
        }
    }
    std::vector<std::uint8_t> remove(tri.edge_count(), 0);
    for (EdgeId e = 0; e < tri.edge_count(); ++e) {
        if (in_tree[e]) continue;
        if (std::uniform_real_distribution<double>(0, 1)(rng) < deletion_fraction) remove[e] = 1;
    }
    PlaneGraph g = delete_edges(tri, remove, false).graph;

    if (add_loops > 0 || add_parallel > 0) {
        GraphBuilder b(g);
        EdgeId m = g.edge_count();
        for (int i = 0; i < add_loops; ++i) {
            Dart d = static_cast<Dart>(rng() % (2 * m));
            b.add_edge(g.head(d), d, g.head(d), d, true);
        }
        for (int i = 0; i < add_parallel; ++i) {
            EdgeId e = static_cast<EdgeId>(rng() % m);
            Dart du = 2 * e, dv = 2 * e + 1;
            b.add_edge(b.head(du), du, b.head(dv), b.prev(dv), true);
        }
        g = b.finalize().graph;
    }
    return g;
}

PlaneGraph generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::Triangulation:
            return gen_triangulation(spec.n, spec.seed);
        case GenSpec::Kind::PlaneConnected:
            return gen_plane_graph(spec.n, spec.deletion_fraction, spec.seed);
        case GenSpec::Kind::PlaneAny:
            return gen_plane_graph(spec.n, spec.deletion_fraction, spec.seed);
        case GenSpec::Kind::MultiTriangulation:
            return gen_triangulation(spec.n, spec.seed);
    }
    fail(Err::MalformedSpec, "unknown generator kind");
}

// ── brute-force isomorphism oracle ──────────────────────────────

namespace {

bool directed_tails_match(const PlaneGraph& a, const PlaneGraph& b,
                          const std::vector<Dart>& dmap) {
    if (!a.directed()) return true;
    for (Dart d = 0; d < a.dart_count(); ++d) {
        bool ta = a.tail_node(edge_of(d)) == a.head(d);
        bool tb = b.tail_node(edge_of(dmap[d])) == b.head(dmap[d]);
        if (ta != tb) return false;
    }
    return true;
}

// Attempts a dart-level embedding isomorphism realizing the node permutation.
bool plane_iso_under_perm(const PlaneGraph& a, const PlaneGraph& b,
                          const std::vector<NodeId>& perm) {
    // group edges into parallel classes / loop classes
    std::map<std::pair<NodeId, NodeId>, std::vector<EdgeId>> cls_a, cls_b;
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        auto key = std::minmax(perm[a.head(2 * e)], perm[a.head(2 * e + 1)]);
        cls_a[{key.first, key.second}].push_back(e);
    }
    for (EdgeId e = 0; e < b.edge_count(); ++e) {
        auto key = std::minmax(b.head(2 * e), b.head(2 * e + 1));
        cls_b[{key.first, key.second}].push_back(e);
    }
    if (cls_a.size() != cls_b.size()) return false;
    for (auto& [k, v] : cls_a) {
        auto it = cls_b.find(k);
        if (it == cls_b.end() || it->second.size() != v.size()) return false;
    }
    // enumerate per-class bijections and loop side swaps via mixed radix
    struct Class {
        std::vector<EdgeId> ea, eb;
        bool loop;
    };
    std::vector<Class> classes;
    std::size_t total_options = 1;
    for (auto& [k, v] : cls_a) {
        Class c{v, cls_b[k], k.first == k.second};
        std::sort(c.eb.begin(), c.eb.end());
        classes.push_back(c);
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= c.ea.size(); ++i) fact *= i;
        total_options *= fact * (c.loop ? (std::size_t{1} << c.ea.size()) : 1);
        if (total_options > 1'000'000) fail(Err::TooLargeForCanonical, "oracle search too large");
    }

    std::vector<std::vector<EdgeId>> perms(classes.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t ci) -> bool {
        if (ci == classes.size()) {
            // assemble the dart map and verify the embedding
            std::vector<Dart> dmap(a.dart_count(), kNoDart);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                const auto& c = classes[i];
                for (std::size_t j = 0; j < c.ea.size(); ++j) {
                    EdgeId ea = c.ea[j], eb = perms[i][j];
                    // orient: dart 2ea sits at node perm[head_a(2ea)]
                    bool swap_sides;
                    if (!c.loop) {
                        swap_sides = b.head(2 * eb) != perm[a.head(2 * ea)];
                    } else {
                        swap_sides = false;  // adjusted by the loop mask below
                    }
                    dmap[2 * ea] = swap_sides ? 2 * eb + 1 : 2 * eb;
                    dmap[2 * ea + 1] = swap_sides ? 2 * eb : 2 * eb + 1;
                }
            }
            // loop masks
            std::vector<std::pair<Dart, Dart>> loop_darts;
            for (std::size_t i = 0; i < classes.size(); ++i)
                if (classes[i].loop)
                    for (std::size_t j = 0; j < classes[i].ea.size(); ++j)
                        loop_darts.push_back({2 * classes[i].ea[j], 2 * perms[i][j]});
            std::size_t masks = std::size_t{1} << loop_darts.size();
            for (std::size_t mask = 0; mask < masks; ++mask) {
                auto dm = dmap;
                for (std::size_t i = 0; i < loop_darts.size(); ++i) {
                    if (mask & (std::size_t{1} << i)) {
                        auto [da, db] = loop_darts[i];
                        dm[da] = twin(db);
                        dm[twin(da)] = db;
                    }
                }
                bool ok = true;
                for (Dart d = 0; d < a.dart_count() && ok; ++d) {
                    if (b.head(dm[d]) != perm[a.head(d)]) ok = false;
                    else if (dm[a.next(d)] != b.next(dm[d])) ok = false;
                }
                if (ok && a.dart_count() > 0 &&
                    b.faces().face_of[dm[a.outer_dart()]] != b.faces().exterior)
                    ok = false;
                if (ok && !directed_tails_match(a, b, dm)) ok = false;
                if (ok) return true;
            }
            return false;
        }
        auto& c = classes[ci];
        perms[ci] = c.eb;
        std::sort(perms[ci].begin(), perms[ci].end());
        do {
            if (rec(ci + 1)) return true;
        } while (std::next_permutation(perms[ci].begin(), perms[ci].end()));
        return false;
    };
    return rec(0);
}

}  // namespace

bool brute_force_isomorphic(const PlaneGraph& a, const PlaneGraph& b, const PiDescriptor& pi) {
    if (a.node_count() > 8 || b.node_count() > 8)
        fail(Err::TooLargeForCanonical, "oracle caps at 8 nodes");
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() ||
        a.directed() != b.directed())
        return false;
    const NodeId n = a.node_count();
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (pi.embedding == EmbedMode::Planar) {
            std::multiset<std::pair<NodeId, NodeId>> ea, eb;
            for (EdgeId e = 0; e < a.edge_count(); ++e) {
                NodeId u = perm[a.head(2 * e)], v = perm[a.head(2 * e + 1)];
                if (a.directed()) {
                    NodeId t = perm[a.tail_node(e)];
                    ea.insert({t, t == u ? v : u});
                } else {
                    ea.insert(std::minmax(u, v));
                }
            }
            for (EdgeId e = 0; e < b.edge_count(); ++e) {
                NodeId u = b.head(2 * e), v = b.head(2 * e + 1);
                if (b.directed()) {
                    NodeId t = b.tail_node(e);
                    eb.insert({t, t == u ? v : u});
                } else {
                    eb.insert(std::minmax(u, v));
                }
            }
            if (ea == eb) return true;
        } else {
            if (plane_iso_under_perm(a, b, perm)) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

MeasureRow measure_one(const PlaneGraph& g, const PiDescriptor& pi, const EncodeConfig& cfg,
                       TableCache& tables) {
    MeasureRow row;
    row.n = g.node_count();
    row.m = g.edge_count();
    CodeStats st;
    auto t0 = std::chrono::steady_clock::now();
    auto blob = encode(g, pi, cfg, tables, &st);
    auto t1 = std::chrono::steady_clock::now();
    auto dec = decode(blob, tables);
    auto t2 = std::chrono::steady_clock::now();
    require(dec.graph.node_count() == g.node_count(), Err::ContractUnmet,
            "measurement round trip changed the size");
    row.bits = st.total_bits;
    row.bits_per_edge = st.bits_per_edge();
    row.p = st.p;
    row.q = st.q;
    row.t_encode_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.t_decode_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return row;
}

std::string measure_csv(const std::vector<MeasureRow>& rows) {
    std::ostringstream os;
    os << "n,m,bits,bits_per_edge,p,q,t_encode_ms,t_decode_ms\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.m << ',' << r.bits << ',' << r.bits_per_edge << ',' << r.p << ','
           << r.q << ',' << r.t_encode_ms << ',' << r.t_decode_ms << '\n';
    return os.str();
}

}  // namespace pgc
