#include "pgc/separator.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace pgc {

namespace {

// Binary-lifting LCA over a rooted forest given parent[] and depth[].
struct Lca {
    std::vector<std::vector<std::int32_t>> up;
    const std::vector<std::int32_t>* depth;

    Lca(const std::vector<std::int32_t>& parent, const std::vector<std::int32_t>& dep)
        : depth(&dep) {
        const std::size_t n = parent.size();
        int levels = 1;
        while ((std::size_t{1} << levels) < n) ++levels;
        up.assign(levels + 1, std::vector<std::int32_t>(n, -1));
        up[0] = parent;
        for (int k = 1; k <= levels; ++k)
            for (std::size_t v = 0; v < n; ++v)
                up[k][v] = up[k - 1][v] < 0 ? -1 : up[k - 1][up[k - 1][v]];
    }

    std::int32_t operator()(std::int32_t a, std::int32_t b) const {
        if ((*depth)[a] < (*depth)[b]) std::swap(a, b);
        std::int32_t diff = (*depth)[a] - (*depth)[b];
        for (int k = 0; diff; ++k, diff >>= 1)
            if (diff & 1) a = up[k][a];
        if (a == b) return a;
        for (int k = static_cast<int>(up.size()) - 1; k >= 0; --k) {
            if (up[k][a] != up[k][b]) {
                a = up[k][a];
                b = up[k][b];
            }
        }
        return up[0][a];
    }
};

}  // namespace

SeparatorCycle find_cycle_separator(const PlaneGraph& h, int max_face_size) {
    const NodeId n = h.node_count();
    const EdgeId m = h.edge_count();
    require(h.connected(), Err::MalformedSpec, "separator input must be connected");
    for (EdgeId e = 0; e < m; ++e)
        require(h.head(2 * e) != h.head(2 * e + 1), Err::MalformedSpec,
                "separator input must be loop-free");
    for (const auto& f : h.faces().faces)
        require(static_cast<int>(f.size()) <= max_face_size, Err::MalformedSpec,
                "face exceeds the declared bound");
    if (m < n) fail(Err::NoCycle, "input is a forest");

    // Breadth-first spanning tree from node 0; neighbours scanned in dart-id
    // order for reproducibility.
    std::vector<std::vector<Dart>> darts_at(n);
    for (Dart d = 0; d < 2 * m; ++d) darts_at[h.head(d)].push_back(d);

    std::vector<std::int32_t> parent(n, -1), depth(n, 0);
    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<std::uint8_t> visited(n, 0), edge_in_tree(m, 0);
    std::queue<NodeId> bfs;
    bfs.push(0);
    visited[0] = 1;
    while (!bfs.empty()) {
        NodeId v = bfs.front();
        bfs.pop();
        for (Dart d : darts_at[v]) {
            NodeId w = h.head(twin(d));
            if (visited[w]) continue;
            visited[w] = 1;
            parent[w] = v;
            parent_edge[w] = edge_of(d);
            edge_in_tree[edge_of(d)] = 1;
            depth[w] = depth[v] + 1;
            bfs.push(w);
        }
    }

    // Dual spanning tree (cotree) over faces, crossing non-tree edges only,
    // rooted at the exterior face.
    const auto& fl = h.faces();
    const std::int32_t nf = static_cast<std::int32_t>(fl.size());
    std::vector<std::int32_t> fparent(nf, -1), fdepth(nf, 0);
    std::vector<EdgeId> fparent_edge(nf, -1);
    std::vector<std::uint8_t> fvisited(nf, 0);
    {
        std::queue<std::int32_t> q;
        q.push(fl.exterior);
        fvisited[fl.exterior] = 1;
        while (!q.empty()) {
            auto f = q.front();
            q.pop();
            for (Dart d : fl.faces[f]) {
                EdgeId e = edge_of(d);
                if (edge_in_tree[e]) continue;
                auto f2 = fl.face_of[twin(d)];
                if (fvisited[f2]) continue;
                fvisited[f2] = 1;
                fparent[f2] = f;
                fparent_edge[f2] = e;
                fdepth[f2] = fdepth[f] + 1;
                q.push(f2);
            }
        }
        for (std::int32_t f = 0; f < nf; ++f)
            require(fvisited[f], Err::ContractUnmet, "cotree failed to span the dual");
    }

    Lca primal_lca(parent, depth);
    Lca dual_lca(fparent, fdepth);

    // Subtree sums: phi(f) = faces in the cotree subtree of f, eps(f) = edges
    // with both sides inside that subtree.  An edge with face sides (fa, fb)
    // is interior to subtree(f) exactly when f is an ancestor-or-equal of
    // cotreeLCA(fa, fb); non-tree edges contribute at their parent face.
    std::vector<std::int64_t> cnt(nf, 0), phi(nf, 1);
    for (EdgeId e = 0; e < m; ++e) {
        auto fa = fl.face_of[2 * e], fb = fl.face_of[2 * e + 1];
        if (!edge_in_tree[e] && (fparent_edge[fa] == e || fparent_edge[fb] == e)) {
            cnt[fparent_edge[fa] == e ? fparent[fa] : fparent[fb]] += 1;
        } else {
            cnt[dual_lca(fa, fb)] += 1;
        }
    }
    // accumulate over the cotree bottom-up (children before parents)
    {
        std::vector<std::int32_t> order(nf);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](auto a, auto b) { return fdepth[a] > fdepth[b]; });
        for (auto f : order) {
            if (fparent[f] < 0) continue;
            cnt[fparent[f]] += cnt[f];
            phi[fparent[f]] += phi[f];
        }
    }

    // Pick the shortest balanced fundamental cycle.
    const std::int64_t balance_cap = (2 * static_cast<std::int64_t>(n) + 2) / 3;  // ceil(2n/3)
    std::int64_t best_len = -1;
    EdgeId best_edge = -1;
    std::int64_t best_inside = 0;
    for (std::int32_t f = 0; f < nf; ++f) {
        EdgeId e = fparent_edge[f];
        if (e < 0) continue;
        NodeId u = h.head(2 * e), v = h.head(2 * e + 1);
        std::int64_t len = depth[u] + depth[v] - 2 * depth[primal_lca(u, v)] + 1;
        std::int64_t inside = cnt[f] - phi[f] + 1;
        std::int64_t outside = n - inside - len;
        if (inside > balance_cap || outside > balance_cap) continue;
        if (best_len < 0 || len < best_len || (len == best_len && e < best_edge)) {
            best_len = len;
            best_edge = e;
            best_inside = inside;
        }
    }
    if (best_edge < 0)
        fail(Err::ContractUnmet, "no balanced fundamental cycle exists for this spanning tree");

    // Emit the cycle as darts: u -e-> v, v up to lca, lca down to u.
    SeparatorCycle out;
    {
        NodeId u = h.head(2 * best_edge), v = h.head(2 * best_edge + 1);
        NodeId l = primal_lca(u, v);
        auto dart_up = [&](NodeId x) {
            EdgeId pe = parent_edge[x];
            return h.head(2 * pe) == x ? 2 * pe : 2 * pe + 1;
        };
        out.darts.push_back(h.head(2 * best_edge) == u ? 2 * best_edge : 2 * best_edge + 1);
        for (NodeId x = v; x != l; x = parent[x]) out.darts.push_back(dart_up(x));
        std::vector<Dart> down;
        for (NodeId x = u; x != l; x = parent[x]) down.push_back(twin(dart_up(x)));
        std::reverse(down.begin(), down.end());
        out.darts.insert(out.darts.end(), down.begin(), down.end());
    }
    for (Dart d : out.darts) out.nodes.push_back(h.head(d));
    out.inside_count = static_cast<std::int32_t>(best_inside);
    out.outside_count = static_cast<std::int32_t>(n - best_inside - best_len);

    require(static_cast<std::int64_t>(out.darts.size()) == best_len, Err::ContractUnmet,
            "cycle length bookkeeping mismatch");
    return out;
}

}  // namespace pgc
