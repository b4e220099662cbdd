#include "pgc/pi.hpp"

#include <algorithm>
#include <sstream>

namespace pgc {

PiDescriptor PiDescriptor::parse(const std::string& text) {
    PiDescriptor pi;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5) fail(Err::BadFormat, "pi descriptor needs 5 comma-separated fields");

    if (parts[0] == "plane") pi.embedding = EmbedMode::Plane;
    else if (parts[0] == "planar") pi.embedding = EmbedMode::Planar;
    else fail(Err::BadFormat, "pi embedding must be plane|planar");

    if (parts[1] == "dir") pi.directed = true;
    else if (parts[1] == "undir") pi.directed = false;
    else fail(Err::BadFormat, "pi direction must be dir|undir");

    if (parts[2] == "tri") pi.connectivity = Connectivity::Triangulated;
    else if (parts[2] == "3conn") pi.connectivity = Connectivity::Triconnected;
    else if (parts[2] == "2conn") pi.connectivity = Connectivity::Biconnected;
    else if (parts[2] == "conn") pi.connectivity = Connectivity::Connected;
    else if (parts[2] == "any") pi.connectivity = Connectivity::Any;
    else fail(Err::BadFormat, "pi connectivity must be tri|3conn|2conn|conn|any");

    auto parse_kv = [](const std::string& s, const char* key) -> int {
        std::string prefix = std::string(key) + "=";
        if (s.rfind(prefix, 0) != 0) fail(Err::BadFormat, "expected " + prefix + "<k>");
        try {
            int v = std::stoi(s.substr(prefix.size()));
            if (v < 0) fail(Err::BadFormat, "negative bound");
            return v;
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail(Err::BadFormat, "bad integer in pi descriptor");
        }
    };
    pi.l3 = parse_kv(parts[3], "loops");
    pi.l4 = parse_kv(parts[4], "multi");
    return pi;
}

std::string PiDescriptor::to_string() const {
    std::ostringstream os;
    os << (embedding == EmbedMode::Plane ? "plane" : "planar") << ','
       << (directed ? "dir" : "undir") << ',';
    switch (connectivity) {
        case Connectivity::Triangulated: os << "tri"; break;
        case Connectivity::Triconnected: os << "3conn"; break;
        case Connectivity::Biconnected: os << "2conn"; break;
        case Connectivity::Connected: os << "conn"; break;
        case Connectivity::Any: os << "any"; break;
    }
    os << ",loops=" << l3 << ",multi=" << l4;
    return os.str();
}

namespace {

// Articulation-point search on a multigraph; loops are ignored, parallel
// edges are distinguished by edge id.
bool has_cut_vertex(const PlaneGraph& g, NodeId skip = kNoNode) {
    const NodeId n = g.node_count();
    std::vector<std::int32_t> num(n, -1), low(n, 0);
    std::int32_t counter = 0;
    struct Frame {
        NodeId v;
        EdgeId via_edge;
        std::vector<Dart> darts;
        std::size_t i;
        int children;
    };
    for (NodeId root = 0; root < n; ++root) {
        if (root == skip || num[root] != -1) continue;
        std::vector<Frame> st;
        num[root] = low[root] = counter++;
        st.push_back({root, -1, g.rotation(root), 0, 0});
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < f.darts.size()) {
                Dart d = f.darts[f.i++];
                EdgeId e = edge_of(d);
                NodeId w = g.head(twin(d));
                if (w == f.v || w == skip) continue;  // loop or removed node
                if (e == f.via_edge) continue;        // the tree edge we came by
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    ++f.children;
                    st.push_back({w, e, g.rotation(w), 0, 0});
                } else {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                Frame done = std::move(st.back());
                st.pop_back();
                if (st.empty()) {
                    if (done.children > 1) return true;  // dfs root
                } else {
                    Frame& p = st.back();
                    low[p.v] = std::min(low[p.v], low[done.v]);
                    bool p_is_root = st.size() == 1;
                    if (!p_is_root && low[done.v] >= num[p.v]) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

bool is_biconnected(const PlaneGraph& g) {
    if (!g.connected()) return false;
    if (g.node_count() <= 2) return true;
    return !has_cut_vertex(g);
}

bool is_triconnected(const PlaneGraph& g) {
    if (g.node_count() < 4) return false;
    if (!is_biconnected(g)) return false;
    // {u, v} is a 2-cut iff v is an articulation point of G - u.
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (has_cut_vertex(g, u)) return false;
    return true;
}

std::vector<std::string> validate(const PlaneGraph& g, const PiDescriptor& pi) {
    std::vector<std::string> out;
    if (g.directed() != pi.directed)
        out.push_back(pi.directed ? "graph is undirected but pi requires directed"
                                  : "graph is directed but pi requires undirected");
    switch (pi.connectivity) {
        case Connectivity::Any:
            break;
        case Connectivity::Connected:
            if (!g.connected()) out.push_back("graph is not connected");
            break;
        case Connectivity::Biconnected:
            if (!is_biconnected(g)) out.push_back("graph is not biconnected");
            break;
        case Connectivity::Triconnected:
            if (!is_triconnected(g)) out.push_back("graph is not triconnected");
            break;
        case Connectivity::Triangulated:
            if (!g.is_triangulation())
                out.push_back("graph is not a plane triangulation (every face size 3)");
            break;
    }
    int loops = g.max_self_loops_per_node();
    if (loops > pi.l3)
        out.push_back("a node carries " + std::to_string(loops) + " self-loops, bound is " +
                      std::to_string(pi.l3));
    int mult = g.max_parallel_multiplicity();
    if (mult > pi.l4)
        out.push_back("a node pair carries " + std::to_string(mult) + " parallel edges, bound is " +
                      std::to_string(pi.l4));
    return out;
}

std::string canonical_code(const PlaneGraph& g, const PiDescriptor& pi, int planar_cap) {
    if (pi.embedding == EmbedMode::Planar) return canonical_abstract_code(g, planar_cap);
    return canonical_plane_code(g);
}

bool pi_equal(const PlaneGraph& a, const PlaneGraph& b, const PiDescriptor& pi, int planar_cap) {
    if (pi.embedding == EmbedMode::Planar)
        return canonical_abstract_code(a, planar_cap) == canonical_abstract_code(b, planar_cap);
    return plane_equal(a, b);
}

}  // namespace pgc
