#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "pgc/plane_graph.hpp"

namespace pgc {

// Canonical codes are strings over {'0','1'}.  They double as a serialization
// format: base tables reconstruct graphs from them.

namespace {

void emit_gamma(std::string& out, std::uint64_t v) {
    std::uint64_t n = v + 1;
    unsigned w = 0;
    for (std::uint64_t t = n; t; t >>= 1) ++w;
    out.append(w - 1, '0');
    for (unsigned i = w; i-- > 0;) out.push_back(((n >> i) & 1) ? '1' : '0');
}

struct CodeCursor {
    const std::string* s;
    std::size_t pos = 0;
    bool bit() {
        require(pos < s->size(), Err::CorruptBlob, "canonical code truncated");
        return (*s)[pos++] == '1';
    }
    std::uint64_t gamma() {
        unsigned zeros = 0;
        while (!bit()) {
            require(++zeros <= 63, Err::CorruptBlob, "canonical code gamma overflow");
        }
        std::uint64_t n = 1;
        for (unsigned i = 0; i < zeros; ++i) n = (n << 1) | (bit() ? 1 : 0);
        return n - 1;
    }
    std::string take(std::size_t k) {
        require(pos + k <= s->size(), Err::CorruptBlob, "canonical code truncated");
        std::string r = s->substr(pos, k);
        pos += k;
        return r;
    }
};

struct NestingIndex {
    // per component: hosted dartful children and isolated-node counts, keyed
    // by face id of the host graph
    std::vector<std::map<std::int32_t, std::vector<std::int32_t>>> children;
    std::vector<std::map<std::int32_t, std::int32_t>> isolated;
    std::vector<std::int32_t> ext_comps;  // dartful, hosted in the exterior region
    std::int32_t ext_isolated = 0;
};

NestingIndex build_nesting_index(const PlaneGraph& g) {
    NestingIndex ni;
    ni.children.resize(g.component_count());
    ni.isolated.resize(g.component_count());
    for (std::int32_t c = 0; c < g.component_count(); ++c) {
        bool dartful = g.component_boundary(c) != kNoDart;
        Dart h = g.component_host(c);
        if (h == kNoDart) {
            if (dartful) ni.ext_comps.push_back(c);
            else ++ni.ext_isolated;
            continue;
        }
        auto host_comp = g.component_of(g.head(h));
        auto f = g.faces().face_of[h];
        if (dartful) ni.children[host_comp][f].push_back(c);
        else ++ni.isolated[host_comp][f];
    }
    return ni;
}

// Structural code of one component starting at dart d0, with recursively
// nested component codes attached per face (in face discovery order).
std::string component_code_from(const PlaneGraph& g, Dart d0, const NestingIndex& ni,
                                const std::vector<std::string>& comp_code) {
    std::vector<std::int32_t> label(g.dart_count(), -1);
    std::vector<Dart> order;
    label[d0] = 0;
    order.push_back(d0);
    std::string out;
    std::string body;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Dart d = order[i];
        for (Dart t : {twin(d), g.next(d)}) {
            if (label[t] == -1) {
                label[t] = static_cast<std::int32_t>(order.size());
                order.push_back(t);
            }
            emit_gamma(body, label[t]);
        }
    }
    emit_gamma(out, order.size());
    out += body;
    if (g.directed()) {
        for (std::size_t i = 0; i < order.size(); ++i) {
            Dart d = order[i];
            if (label[twin(d)] < static_cast<std::int32_t>(i)) continue;
            out.push_back(g.tail_node(edge_of(d)) == g.head(d) ? '1' : '0');
        }
    }
    auto comp = g.component_of(g.head(d0));
    bool has_children = !ni.children[comp].empty() || !ni.isolated[comp].empty();
    out.push_back(has_children ? '1' : '0');
    if (has_children) {
        // faces in discovery order (order of their minimal dart label)
        std::vector<std::int32_t> face_order;
        std::vector<std::uint8_t> seen(g.faces().size(), 0);
        for (Dart d : order) {
            auto f = g.faces().face_of[d];
            if (!seen[f]) {
                seen[f] = 1;
                face_order.push_back(f);
            }
        }
        for (auto f : face_order) {
            auto itc = ni.children[comp].find(f);
            std::vector<std::string> kids;
            if (itc != ni.children[comp].end())
                for (auto cc : itc->second) kids.push_back(comp_code[cc]);
            std::sort(kids.begin(), kids.end());
            emit_gamma(out, kids.size());
            for (const auto& k : kids) {
                emit_gamma(out, k.size());
                out += k;
            }
            auto iti = ni.isolated[comp].find(f);
            emit_gamma(out, iti == ni.isolated[comp].end() ? 0 : iti->second);
        }
    }
    return out;
}

std::string min_component_code(const PlaneGraph& g, std::int32_t comp, const NestingIndex& ni,
                               const std::vector<std::string>& comp_code) {
    Dart b = g.component_boundary(comp);
    require(b != kNoDart, Err::MalformedSpec, "dartful component without boundary");
    std::string best;
    Dart d = b;
    do {
        std::string cand = component_code_from(g, d, ni, comp_code);
        if (best.empty() || cand < best) best = cand;
        d = g.face_successor(d);
    } while (d != b);
    return best;
}

// nesting depth of a component (0 = exterior-hosted)
std::vector<std::int32_t> nesting_depths(const PlaneGraph& g) {
    std::vector<std::int32_t> depth(g.component_count(), -1);
    std::function<std::int32_t(std::int32_t)> rec = [&](std::int32_t c) -> std::int32_t {
        if (depth[c] >= 0) return depth[c];
        Dart h = g.component_host(c);
        depth[c] = h == kNoDart ? 0 : rec(g.component_of(g.head(h))) + 1;
        return depth[c];
    };
    for (std::int32_t c = 0; c < g.component_count(); ++c) rec(c);
    return depth;
}

}  // namespace

std::string canonical_plane_code(const PlaneGraph& g) {
    NestingIndex ni = build_nesting_index(g);
    std::vector<std::string> comp_code(g.component_count());
    auto depth = nesting_depths(g);
    std::vector<std::int32_t> comps(g.component_count());
    std::iota(comps.begin(), comps.end(), 0);
    std::sort(comps.begin(), comps.end(),
              [&](auto a, auto b) { return depth[a] > depth[b]; });
    for (auto c : comps) {
        if (g.component_boundary(c) == kNoDart) continue;  // isolated: counted, not coded
        comp_code[c] = min_component_code(g, c, ni, comp_code);
    }
    std::string out;
    emit_gamma(out, g.node_count());
    emit_gamma(out, g.edge_count());
    out.push_back(g.directed() ? '1' : '0');
    std::vector<std::string> roots;
    for (auto c : ni.ext_comps) roots.push_back(comp_code[c]);
    std::sort(roots.begin(), roots.end());
    emit_gamma(out, roots.size());
    for (const auto& r : roots) {
        emit_gamma(out, r.size());
        out += r;
    }
    emit_gamma(out, ni.ext_isolated);
    return out;
}

// ── reconstruction from a canonical plane code ──────────────────

namespace {

struct ParsedPiece {
    // arrays in local ids
    std::vector<NodeId> head;
    std::vector<Dart> next;
    std::vector<std::uint8_t> forward;
    NodeId n = 0;
    Dart boundary = kNoDart;  // image of label 0
    std::vector<Dart> host_of_comp;    // local comp -> local host dart (or kNoDart for comp 0)
    std::int32_t isolated_total = 0;   // appended dartless nodes
    std::vector<std::int32_t> isolated_host_face_dart;  // one host dart per isolated node
};

ParsedPiece parse_component(CodeCursor& cur, bool directed);

// Appends `child` into `piece`, hosted at dart `host` of piece.
void absorb_child(ParsedPiece& piece, const ParsedPiece& child, Dart host) {
    NodeId node_off = piece.n;
    Dart dart_off = static_cast<Dart>(piece.head.size());
    EdgeId edge_off = dart_off / 2;
    piece.n += child.n;
    for (std::size_t d = 0; d < child.head.size(); ++d) {
        piece.head.push_back(child.head[d] + node_off);
        piece.next.push_back(child.next[d] + dart_off);
    }
    for (auto f : child.forward) piece.forward.push_back(f);
    (void)edge_off;
    piece.host_of_comp.push_back(host);  // child root comp
    for (std::size_t c = 1; c < child.host_of_comp.size(); ++c)
        piece.host_of_comp.push_back(child.host_of_comp[c] + dart_off);
    for (auto hd : child.isolated_host_face_dart)
        piece.isolated_host_face_dart.push_back(hd + dart_off);
    piece.isolated_total += child.isolated_total;
}

ParsedPiece parse_component(CodeCursor& cur, bool directed) {
    ParsedPiece piece;
    const std::uint64_t nd = cur.gamma();
    require(nd >= 2 && nd % 2 == 0, Err::CorruptBlob, "bad component dart count");
    std::vector<std::int32_t> twin_label(nd, -1), next_label(nd, -1);
    std::uint64_t assigned = 1;
    for (std::uint64_t i = 0; i < nd; ++i) {
        for (int which = 0; which < 2; ++which) {
            std::uint64_t lab = cur.gamma();
            require(lab <= assigned && lab < nd, Err::CorruptBlob, "bad label");
            if (lab == assigned) ++assigned;
            (which == 0 ? twin_label : next_label)[i] = static_cast<std::int32_t>(lab);
        }
    }
    require(assigned == nd, Err::CorruptBlob, "labels do not cover component");
    for (std::uint64_t i = 0; i < nd; ++i) {
        require(twin_label[i] != static_cast<std::int32_t>(i), Err::CorruptBlob, "twin fixpoint");
        require(twin_label[twin_label[i]] == static_cast<std::int32_t>(i), Err::CorruptBlob,
                "twin not involutive");
    }
    // label -> final dart: edges in ascending first-label order
    std::vector<Dart> dart_of_label(nd, kNoDart);
    EdgeId e = 0;
    for (std::uint64_t i = 0; i < nd; ++i) {
        if (dart_of_label[i] != kNoDart) continue;
        dart_of_label[i] = 2 * e;
        dart_of_label[twin_label[i]] = 2 * e + 1;
        ++e;
    }
    piece.head.assign(nd, kNoNode);
    piece.next.assign(nd, kNoDart);
    for (std::uint64_t i = 0; i < nd; ++i)
        piece.next[dart_of_label[i]] = dart_of_label[next_label[i]];
    // nodes = rotation cycles, numbered by minimal label
    NodeId v = 0;
    for (std::uint64_t i = 0; i < nd; ++i) {
        Dart d = dart_of_label[i];
        if (piece.head[d] != kNoNode) continue;
        Dart x = d;
        do {
            piece.head[x] = v;
            x = piece.next[x];
            require(x != kNoDart, Err::CorruptBlob, "broken rotation");
        } while (x != d);
        ++v;
    }
    piece.n = v;
    piece.boundary = dart_of_label[0];
    piece.forward.assign(nd / 2, 1);
    if (directed) {
        for (std::uint64_t i = 0; i < nd; ++i) {
            if (twin_label[i] < static_cast<std::int32_t>(i)) continue;
            bool tail_here = cur.bit();
            Dart d = dart_of_label[i];
            // forward flag means tail is head(2e)
            bool fwd = side_of(d) == 0 ? tail_here : !tail_here;
            piece.forward[edge_of(d)] = fwd ? 1 : 0;
        }
    }
    piece.host_of_comp.push_back(kNoDart);  // root of this piece

    if (cur.bit()) {
        // children per face, in face discovery order of the label BFS
        // recompute face orbits and their discovery order
        std::vector<std::int32_t> face_of(nd, -1);
        std::vector<std::vector<Dart>> faces;
        for (std::uint64_t i = 0; i < nd; ++i) {
            Dart d = dart_of_label[i];
            if (face_of[d] != -1) continue;
            std::int32_t f = static_cast<std::int32_t>(faces.size());
            faces.emplace_back();
            Dart x = d;
            do {
                face_of[x] = f;
                faces[f].push_back(x);
                x = piece.next[twin(x)];
            } while (x != d);
        }
        for (std::int32_t f = 0; f < static_cast<std::int32_t>(faces.size()); ++f) {
            std::uint64_t kids = cur.gamma();
            for (std::uint64_t k = 0; k < kids; ++k) {
                std::uint64_t len = cur.gamma();
                std::string sub = cur.take(len);
                CodeCursor sc{&sub, 0};
                ParsedPiece child = parse_component(sc, directed);
                require(sc.pos == sub.size(), Err::CorruptBlob, "child code trailing bits");
                absorb_child(piece, child, faces[f][0]);
            }
            std::uint64_t iso = cur.gamma();
            for (std::uint64_t k = 0; k < iso; ++k) {
                ++piece.isolated_total;
                piece.isolated_host_face_dart.push_back(faces[f][0]);
            }
        }
    }
    return piece;
}

}  // namespace

PlaneGraph plane_code_to_graph(const std::string& code) {
    CodeCursor cur{&code, 0};
    std::uint64_t n = cur.gamma();
    std::uint64_t m = cur.gamma();
    bool directed = cur.bit();
    std::uint64_t roots = cur.gamma();
    ParsedPiece all;
    std::vector<Dart> comp_host;
    std::vector<Dart> boundaries;  // boundary dart per dartful comp, in comp order
    for (std::uint64_t r = 0; r < roots; ++r) {
        std::uint64_t len = cur.gamma();
        std::string sub = cur.take(len);
        CodeCursor sc{&sub, 0};
        ParsedPiece piece = parse_component(sc, directed);
        require(sc.pos == sub.size(), Err::CorruptBlob, "component code trailing bits");
        absorb_child(all, piece, kNoDart);
    }
    std::uint64_t ext_iso = cur.gamma();
    require(cur.pos == code.size(), Err::CorruptBlob, "canonical code trailing bits");

    // isolated nodes appended after all dartful nodes
    NodeId n_total = all.n + all.isolated_total + static_cast<NodeId>(ext_iso);
    require(n_total == static_cast<NodeId>(n), Err::CorruptBlob, "node count mismatch");
    require(all.head.size() == 2 * m, Err::CorruptBlob, "edge count mismatch");

    // assemble nesting vectors: component order = order of min node =
    // absorption order for dartful comps, then isolated nodes
    std::vector<Dart> host;
    std::vector<Dart> boundary;
    // recompute comps of the assembled arrays cheaply via rotation cycles is
    // done by from_arrays; rely on comp order matching absorption order.
    for (auto h : all.host_of_comp) host.push_back(h);
    for (auto h : all.isolated_host_face_dart) host.push_back(h);
    for (std::uint64_t k = 0; k < ext_iso; ++k) host.push_back(kNoDart);
    // boundary: per dartful comp the stored boundary image; computed below
    // from comp structure: leave empty and fix after construction.
    Dart outer = all.head.empty() ? kNoDart : 0;
    // boundary of each comp: label-0 dart of each absorbed piece. Track via
    // host list: comp i's boundary recorded during absorption order.
    // absorb_child does not record boundaries; recover: boundary of a comp is
    // the dart with the smallest id in its piece... not true in general.
    // Instead rebuild with explicit boundaries captured during absorption.
    (void)boundaries;
    PlaneGraph g0 = PlaneGraph::from_arrays(n_total, all.head, all.next, outer, directed,
                                            all.forward, {}, {});
    // Recover boundaries: comp order of g0 equals absorption order (min node
    // ascends with absorption).  host vector above is aligned with it.
    std::vector<Dart> bnd(g0.component_count(), kNoDart);
    {
        // piece boundaries in absorption order: parse again is wasteful;
        // instead the boundary of dartful comp c is host-independent: it is
        // the image of that piece's label-0 dart, which absorb_child placed
        // at the piece's dart offset.  That offset equals the smallest dart
        // id in the comp only when label 0 mapped to dart 0 of the piece,
        // which holds: dart_of_label[0] == 0 by construction.
        std::vector<std::uint8_t> seen(g0.component_count(), 0);
        for (Dart d = 0; d < g0.dart_count(); ++d) {
            auto c = g0.component_of(g0.head(d));
            if (!seen[c]) {
                seen[c] = 1;
                bnd[c] = d;
            }
        }
    }
    require(static_cast<std::int32_t>(host.size()) == g0.component_count(), Err::CorruptBlob,
            "component count mismatch");
    return PlaneGraph::from_arrays(n_total, all.head, all.next, outer, directed, all.forward,
                                   std::move(host), std::move(bnd));
}

// ── plane equality ──────────────────────────────────────────────

namespace {

bool try_dart_map(const PlaneGraph& a, const PlaneGraph& b, Dart a0, Dart b0) {
    std::vector<Dart> map(a.dart_count(), kNoDart);
    std::vector<Dart> rmap(b.dart_count(), kNoDart);
    std::vector<Dart> stack{a0};
    map[a0] = b0;
    rmap[b0] = a0;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        const Dart pairs_a[2] = {twin(d), a.next(d)};
        const Dart pairs_b[2] = {twin(map[d]), b.next(map[d])};
        for (int i = 0; i < 2; ++i) {
            Dart ta = pairs_a[i], tb = pairs_b[i];
            if (map[ta] == kNoDart && rmap[tb] == kNoDart) {
                map[ta] = tb;
                rmap[tb] = ta;
                stack.push_back(ta);
            } else if (map[ta] != tb) {
                return false;
            }
        }
    }
    for (Dart d = 0; d < a.dart_count(); ++d)
        if (map[d] == kNoDart) return false;
    if (a.directed()) {
        for (Dart d = 0; d < a.dart_count(); ++d) {
            bool ta = a.tail_node(edge_of(d)) == a.head(d);
            bool tb = b.tail_node(edge_of(map[d])) == b.head(map[d]);
            if (ta != tb) return false;
        }
    }
    return true;
}

}  // namespace

bool plane_equal(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() ||
        a.directed() != b.directed() || a.component_count() != b.component_count())
        return false;
    if (a.component_count() == 1) {
        if (a.edge_count() == 0) return true;  // single bare node
        Dart b0 = b.outer_dart();
        Dart d = b0;
        do {
            if (try_dart_map(a, b, a.outer_dart(), d)) return true;
            d = b.face_successor(d);
        } while (d != b0);
        return false;
    }
    return canonical_plane_code(a) == canonical_plane_code(b);
}

// ── abstract (planar) canonical code ────────────────────────────

std::string canonical_abstract_code(const PlaneGraph& g, int node_cap) {
    const NodeId n = g.node_count();
    if (n > node_cap)
        fail(Err::TooLargeForCanonical, "abstract canonicalization above the node cap");
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<NodeId, NodeId>> edges(g.edge_count());
    std::string best;
    do {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            NodeId u = perm[g.head(2 * e)], v = perm[g.head(2 * e + 1)];
            if (g.directed()) {
                NodeId t = perm[g.tail_node(e)];
                NodeId h = t == u ? v : u;
                edges[e] = {t, h};
            } else {
                edges[e] = {std::min(u, v), std::max(u, v)};
            }
        }
        std::sort(edges.begin(), edges.end());
        std::string cand;
        emit_gamma(cand, n);
        emit_gamma(cand, g.edge_count());
        cand.push_back(g.directed() ? '1' : '0');
        for (auto& [u, v] : edges) {
            emit_gamma(cand, u);
            emit_gamma(cand, v);
        }
        if (best.empty() || cand < best) best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace pgc
