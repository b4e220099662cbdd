#include "pgc/pg_format.hpp"

#include <fstream>
#include <sstream>

namespace pgc {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

Dart parse_dart_ref(const std::string& tok, EdgeId m) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) fail(Err::BadFormat, "dart reference needs edgeId:side");
    EdgeId e;
    int side;
    try {
        e = std::stoi(tok.substr(0, colon));
        side = std::stoi(tok.substr(colon + 1));
    } catch (...) {
        fail(Err::BadFormat, "bad dart reference '" + tok + "'");
    }
    if (e < 0 || e >= m || (side != 0 && side != 1))
        fail(Err::BadFormat, "dart reference out of range '" + tok + "'");
    return dart_of(e, side);
}

std::string dart_ref(Dart d) {
    return std::to_string(edge_of(d)) + ":" + std::to_string(side_of(d));
}

}  // namespace

PgFile parse_pg(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) fail(Err::BadFormat, "empty .pg input");
    auto hdr = split_ws(line);
    if (hdr.size() != 5 || hdr[0] != "pg") fail(Err::BadFormat, "bad .pg header");
    PgFile out;
    if (hdr[1] == "plane") out.mode = EmbedMode::Plane;
    else if (hdr[1] == "planar") out.mode = EmbedMode::Planar;
    else fail(Err::BadFormat, "mode must be plane|planar");
    bool directed;
    if (hdr[2] == "directed") directed = true;
    else if (hdr[2] == "undirected") directed = false;
    else fail(Err::BadFormat, "direction must be directed|undirected");
    NodeId n;
    EdgeId m;
    try {
        n = std::stoi(hdr[3]);
        m = std::stoi(hdr[4]);
    } catch (...) {
        fail(Err::BadFormat, "bad n/m in header");
    }
    if (n < 1 || m < 0) fail(Err::BadFormat, "bad n/m in header");

    std::vector<std::vector<Dart>> rotations(n);
    for (NodeId v = 0; v < n; ++v) {
        if (!std::getline(is, line)) fail(Err::BadFormat, "missing rotation line");
        for (const auto& tok : split_ws(line)) rotations[v].push_back(parse_dart_ref(tok, m));
    }
    if (!std::getline(is, line)) fail(Err::BadFormat, "missing outer line");
    auto outer_toks = split_ws(line);
    if (outer_toks.size() != 2 || outer_toks[0] != "outer")
        fail(Err::BadFormat, "expected `outer <dartRef>`");
    Dart outer = kNoDart;
    if (outer_toks[1] != "-") outer = parse_dart_ref(outer_toks[1], m);
    if ((m == 0) != (outer == kNoDart))
        fail(Err::BadFormat, "outer designation inconsistent with edge count");

    std::vector<std::uint8_t> forward;
    std::vector<std::pair<NodeId, std::pair<std::string, std::string>>> nest_entries;
    while (std::getline(is, line)) {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "dir") {
            if (!directed) fail(Err::BadFormat, "dir line on undirected graph");
            if (toks.size() != 2 || static_cast<EdgeId>(toks[1].size()) != m)
                fail(Err::BadFormat, "dir line needs exactly m bits");
            for (char ch : toks[1]) {
                if (ch != '0' && ch != '1') fail(Err::BadFormat, "dir bits must be 0/1");
                forward.push_back(ch == '1');
            }
        } else if (toks[0] == "nest") {
            // entries: <minNode>/<host>/<own>, host = out|edgeId:side,
            // own = -|edgeId:side
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto a = toks[i].find('/');
                auto b = a == std::string::npos ? a : toks[i].find('/', a + 1);
                if (a == std::string::npos || b == std::string::npos)
                    fail(Err::BadFormat, "bad nest entry '" + toks[i] + "'");
                NodeId mn;
                try {
                    mn = std::stoi(toks[i].substr(0, a));
                } catch (...) {
                    fail(Err::BadFormat, "bad nest entry '" + toks[i] + "'");
                }
                nest_entries.push_back(
                    {mn, {toks[i].substr(a + 1, b - a - 1), toks[i].substr(b + 1)}});
            }
        } else {
            fail(Err::BadFormat, "unexpected line '" + line + "'");
        }
    }
    if (directed && forward.empty() && m > 0)
        fail(Err::BadFormat, "directed graph needs a dir line");

    // first build without nesting to learn the component structure
    PlaneGraph g = PlaneGraph::build(n, rotations, outer, directed, forward);
    if (!nest_entries.empty()) {
        std::vector<Dart> host(g.component_count(), kNoDart);
        std::vector<Dart> boundary(g.component_count(), kNoDart);
        for (std::int32_t c = 0; c < g.component_count(); ++c)
            boundary[c] = g.component_boundary(c);
        for (auto& [mn, hs] : nest_entries) {
            if (mn < 0 || mn >= n) fail(Err::BadFormat, "nest node out of range");
            auto c = g.component_of(mn);
            host[c] = hs.first == "out" ? kNoDart : parse_dart_ref(hs.first, m);
            if (hs.second != "-") boundary[c] = parse_dart_ref(hs.second, m);
        }
        g = PlaneGraph::build(n, rotations, outer, directed, std::move(forward), std::move(host),
                              std::move(boundary));
    }
    PgFile out_file;
    out_file.mode = out.mode;
    out_file.graph = std::move(g);
    return out_file;
}

std::string write_pg(const PlaneGraph& g, EmbedMode mode) {
    std::ostringstream os;
    os << "pg " << (mode == EmbedMode::Plane ? "plane" : "planar") << ' '
       << (g.directed() ? "directed" : "undirected") << ' ' << g.node_count() << ' '
       << g.edge_count() << '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) {
        bool first = true;
        for (Dart d : g.rotation(v)) {
            if (!first) os << ' ';
            os << dart_ref(d);
            first = false;
        }
        os << '\n';
    }
    os << "outer " << (g.outer_dart() == kNoDart ? std::string("-") : dart_ref(g.outer_dart()))
       << '\n';
    if (g.directed() && g.edge_count() > 0) {
        os << "dir ";
        for (EdgeId e = 0; e < g.edge_count(); ++e) os << (g.edge_forward(e) ? '1' : '0');
        os << '\n';
    }
    if (g.component_count() > 1) {
        os << "nest";
        std::vector<NodeId> min_node(g.component_count(), kNoNode);
        for (NodeId v = g.node_count(); v-- > 0;) min_node[g.component_of(v)] = v;
        for (std::int32_t c = 0; c < g.component_count(); ++c) {
            if (c == g.root_component()) continue;
            Dart h = g.component_host(c);
            Dart b = g.component_boundary(c);
            os << ' ' << min_node[c] << '/' << (h == kNoDart ? std::string("out") : dart_ref(h))
               << '/' << (b == kNoDart ? std::string("-") : dart_ref(b));
        }
        os << '\n';
    }
    return os.str();
}

PgFile load_pg_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_pg(ss.str());
}

void save_pg_file(const std::string& path, const PlaneGraph& g, EmbedMode mode) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::IoError, "cannot open " + path + " for writing");
    out << write_pg(g, mode);
    if (!out) fail(Err::IoError, "write failed for " + path);
}

}  // namespace pgc
