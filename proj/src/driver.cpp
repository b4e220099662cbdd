#include "pgc/driver.hpp"

#include <algorithm>
#include <sstream>

#include "pgc/codec_planar.hpp"
#include "pgc/codec_tri.hpp"

namespace pgc {

namespace {

constexpr std::uint8_t kVersion = 1;
constexpr unsigned kTagIndex = 0, kTagExplicit = 1, kTagInternal = 2;

unsigned dart_width(EdgeId m) {
    unsigned w = 1;
    while ((std::int64_t{1} << w) < 2 * static_cast<std::int64_t>(m)) ++w;
    return w;
}

struct LevelTracker {
    std::int64_t lambda = 2;
    std::vector<std::pair<std::int64_t, std::int64_t>> levels;

    void add(std::int64_t n) {
        int i = 0;
        std::int64_t hi = lambda;
        while (n > hi) {
            ++i;
            hi *= 2;
        }
        if (static_cast<int>(levels.size()) <= i) levels.resize(i + 1, {0, 0});
        levels[i].first += 1;
        levels[i].second += n;
    }
};

}  // namespace

std::string CodeStats::to_text() const {
    std::ostringstream os;
    os << "n0 " << n0 << "\n";
    os << "m0 " << m0 << "\n";
    os << "total_bits " << total_bits << "\n";
    os << "payload_bits " << payload_bits << "\n";
    os << "p " << p << "\n";
    os << "q " << q << "\n";
    os << "index_leaves " << index_leaves << "\n";
    os << "explicit_leaves " << explicit_leaves << "\n";
    os << "internal_nodes " << internal_nodes << "\n";
    os << "bits_per_node " << bits_per_node() << "\n";
    os << "bits_per_edge " << bits_per_edge() << "\n";
    for (std::size_t i = 0; i < levels.size(); ++i)
        os << "S(" << i << ") count " << levels[i].first << " nodes " << levels[i].second << "\n";
    return os.str();
}

BitString explicit_leaf_encode(const PlaneGraph& g) {
    BitString out;
    const NodeId n = g.node_count();
    const EdgeId m = g.edge_count();
    gamma_append(out, n);
    gamma_append(out, m);
    const unsigned w = m > 0 ? dart_width(m) : 0;
    for (NodeId v = 0; v < n; ++v) {
        gamma_append(out, g.degree(v));
        for (Dart d : g.rotation(v)) out.push_uint(static_cast<std::uint64_t>(d), w);
    }
    if (m > 0) out.push_uint(static_cast<std::uint64_t>(g.outer_dart()), w);
    if (g.directed())
        for (EdgeId e = 0; e < m; ++e) out.push_bit(g.edge_forward(e));
    if (g.component_count() > 1) {
        for (std::int32_t c = 0; c < g.component_count(); ++c) {
            if (c == g.root_component()) continue;
            gamma_append(out, static_cast<std::uint64_t>(g.component_host(c) + 1));
            gamma_append(out, static_cast<std::uint64_t>(g.component_boundary(c) + 1));
        }
    }
    return out;
}

PlaneGraph explicit_leaf_decode(BitReader& in, bool directed) {
    std::uint64_t n = gamma_decode(in);
    std::uint64_t m = gamma_decode(in);
    if (n < 1 || n > in.remaining() + 2 || m > in.remaining())
        fail(Err::CorruptBlob, "implausible leaf dimensions");
    const unsigned w = m > 0 ? dart_width(static_cast<EdgeId>(m)) : 0;
    std::vector<std::vector<Dart>> rotations(n);
    std::uint64_t total = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        std::uint64_t deg = gamma_decode(in);
        total += deg;
        if (total > 2 * m) fail(Err::CorruptBlob, "degrees exceed dart count");
        for (std::uint64_t i = 0; i < deg; ++i)
            rotations[v].push_back(static_cast<Dart>(in.read_uint(w)));
    }
    if (total != 2 * m) fail(Err::CorruptBlob, "degrees do not cover all darts");
    Dart outer = kNoDart;
    if (m > 0) outer = static_cast<Dart>(in.read_uint(w));
    std::vector<std::uint8_t> forward;
    if (directed)
        for (std::uint64_t e = 0; e < m; ++e) forward.push_back(in.read_bit() ? 1 : 0);
    PlaneGraph g;
    try {
        g = PlaneGraph::build(static_cast<NodeId>(n), rotations, outer, directed,
                              std::move(forward));
    } catch (const Error&) {
        fail(Err::CorruptBlob, "leaf does not describe a plane graph");
    }
    if (g.component_count() > 1) {
        std::vector<Dart> host(g.component_count(), kNoDart);
        std::vector<Dart> bnd(g.component_count(), kNoDart);
        for (std::int32_t c = 0; c < g.component_count(); ++c) bnd[c] = g.component_boundary(c);
        for (std::int32_t c = 0; c < g.component_count(); ++c) {
            if (c == g.root_component()) continue;
            host[c] = static_cast<Dart>(gamma_decode(in)) - 1;
            Dart b = static_cast<Dart>(gamma_decode(in)) - 1;
            if (b != kNoDart) bnd[c] = b;
        }
        std::vector<std::vector<Dart>> rots(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) rots[v] = g.rotation(v);
        std::vector<std::uint8_t> fwd(g.edge_forward());
        try {
            g = PlaneGraph::build(g.node_count(), rots, g.outer_dart(), directed, std::move(fwd),
                                  std::move(host), std::move(bnd));
        } catch (const Error&) {
            fail(Err::CorruptBlob, "leaf nesting is inconsistent");
        }
    }
    return g;
}

namespace {

struct Encoder {
    const PiDescriptor& pi;
    const EncodeConfig& cfg;
    TableCache& tables;
    CodeStats& stats;
    LevelTracker tracker;
    int b_enum;

    BitString code_node(const PlaneGraph& g, int depth) {
        const NodeId n = g.node_count();
        tracker.add(n);
        if (n <= b_enum && (pi.embedding == EmbedMode::Plane || depth == 0)) {
            // abstract-table leaves deeper in the tree would hand the merge a
            // representative with an incompatible embedding
            try {
                const BaseTable& table = tables.get(pi, n);
                BitString out;
                out.push_uint(kTagIndex, 2);
                gamma_append(out, n);
                out.append(index_bits(g, pi, table));
                ++stats.index_leaves;
                stats.p += n;
                return out;
            } catch (const Error& e) {
                if (e.code() != Err::CapExceeded && e.code() != Err::NotInTable) throw;
            }
        }
        if (n > cfg.b_explicit) {
            try {
                return internal_node(g, depth);
            } catch (const Error& e) {
                switch (e.code()) {
                    case Err::TooSmall:
                    case Err::SplitNotShrinking:
                    case Err::NoCycle:
                    case Err::ContractUnmet:
                        break;  // fall through to the explicit leaf
                    default:
                        throw;
                }
            }
        }
        BitString out;
        out.push_uint(kTagExplicit, 2);
        out.append(explicit_leaf_encode(g));
        ++stats.explicit_leaves;
        stats.p += n;
        return out;
    }

    BitString internal_node(const PlaneGraph& g, int depth) {
        BitString x;
        PlaneGraph g1, g2;
        if (pi.triangulated()) {
            TriSplit ts = split_tri(g, cfg.rho);
            std::vector<BitString> parts{gamma_encode(ts.dfs_x_in_g1),
                                         gamma_encode(ts.dfs_x_in_g2),
                                         gamma_encode(ts.dfs_z_in_g2)};
            x = concat_parts(parts).bits;
            g1 = std::move(ts.g1);
            g2 = std::move(ts.g2);
        } else {
            PlanarSplit ps = split_planar(g, pi, cfg.rho);
            BitString bitmap;
            for (auto bit : ps.original) bitmap.push_bit(bit != 0);
            std::vector<BitString> parts{gamma_encode(ps.k1), gamma_encode(ps.k2), bitmap};
            x = concat_parts(parts).bits;
            g1 = std::move(ps.g1);
            g2 = std::move(ps.g2);
        }
        BitString c1 = code_node(g1, depth + 1);
        BitString c2 = code_node(g2, depth + 1);
        Blob blob = concat_parts({c1, c2, x});
        BitString out;
        out.push_uint(kTagInternal, 2);
        out.append(blob.bits);
        ++stats.internal_nodes;
        stats.q += 2 + blob.directory_bits + x.size_bits();
        return out;
    }
};

struct Decoder {
    PiDescriptor pi;
    TableCache& tables;
    CodeStats* stats;
    LevelTracker tracker;

    PlaneGraph decode_node(BitReader& in) {
        unsigned tag = static_cast<unsigned>(in.read_uint(2));
        if (tag == kTagIndex) {
            std::uint64_t n = gamma_decode(in);
            if (n < 1 || n > TableCache::kMaxEnumerationNodes)
                fail(Err::CorruptBlob, "index leaf size out of range");
            const BaseTable& table = tables.get(pi, static_cast<int>(n));
            std::uint64_t idx = in.read_uint(table.index_width());
            if (idx >= table.alpha()) fail(Err::CorruptBlob, "leaf index out of range");
            PlaneGraph g = unindex(idx, table);
            if (stats) {
                ++stats->index_leaves;
                stats->p += g.node_count();
                tracker.add(g.node_count());
            }
            return g;
        }
        if (tag == kTagExplicit) {
            PlaneGraph g = explicit_leaf_decode(in, pi.directed);
            if (stats) {
                ++stats->explicit_leaves;
                stats->p += g.node_count();
                tracker.add(g.node_count());
            }
            return g;
        }
        if (tag != kTagInternal) fail(Err::CorruptBlob, "unknown code node tag");
        const std::size_t before = in.pos();
        auto parts = split_parts(in);
        if (parts.size() != 3) fail(Err::CorruptBlob, "internal node needs three parts");
        const std::size_t directory_bits =
            (in.pos() - before) -
            (parts[0].size_bits() + parts[1].size_bits() + parts[2].size_bits());
        BitReader r1(parts[0]), r2(parts[1]);
        PlaneGraph g1 = decode_node(r1);
        PlaneGraph g2 = decode_node(r2);
        if (r1.remaining() != 0 || r2.remaining() != 0)
            fail(Err::CorruptBlob, "trailing bits in a child code");
        PlaneGraph merged;
        auto xparts = split_parts(parts[2]);
        if (xparts.size() != 3) fail(Err::CorruptBlob, "side string needs three parts");
        if (pi.triangulated()) {
            BitReader xa(xparts[0]), xb(xparts[1]), xc(xparts[2]);
            std::uint64_t dx1 = gamma_decode(xa);
            std::uint64_t dx2 = gamma_decode(xb);
            std::uint64_t dz2 = gamma_decode(xc);
            merged = merge_tri(g1, g2, static_cast<std::uint32_t>(dx1),
                               static_cast<std::uint32_t>(dx2), static_cast<std::uint32_t>(dz2));
        } else {
            BitReader xa(xparts[0]), xb(xparts[1]);
            std::uint64_t k1 = gamma_decode(xa);
            std::uint64_t k2 = gamma_decode(xb);
            std::vector<std::uint8_t> original;
            for (std::size_t i = 0; i < xparts[2].size_bits(); ++i)
                original.push_back(xparts[2].bit(i) ? 1 : 0);
            merged = merge_planar(g1, g2, static_cast<std::uint32_t>(k1),
                                  static_cast<std::uint32_t>(k2), original);
        }
        if (stats) {
            ++stats->internal_nodes;
            stats->q += 2 + directory_bits + parts[2].size_bits();
            tracker.add(merged.node_count());
        }
        return merged;
    }
};

std::vector<std::uint8_t> assemble(const PiDescriptor& pi, const BitString& body_bits) {
    std::vector<std::uint8_t> out;
    out.push_back('P');
    out.push_back('G');
    out.push_back('C');
    out.push_back('1');
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>((static_cast<unsigned>(pi.embedding) << 4) |
                                            (pi.directed ? 1 : 0)));
    out.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(pi.connectivity) << 4));
    for (std::uint8_t b : body_bits.bytes()) out.push_back(b);
    std::uint32_t crc = crc32(out.data(), out.size());
    for (int i = 3; i >= 0; --i) out.push_back(static_cast<std::uint8_t>((crc >> (8 * i)) & 0xFF));
    return out;
}

struct ParsedHeader {
    PiDescriptor pi;
    BitString body;
};

ParsedHeader parse_header(const std::vector<std::uint8_t>& blob) {
    if (blob.size() < 11) fail(Err::CorruptBlob, "blob too short");
    std::uint32_t stored = 0;
    for (int i = 0; i < 4; ++i) stored = (stored << 8) | blob[blob.size() - 4 + i];
    if (crc32(blob.data(), blob.size() - 4) != stored)
        fail(Err::CorruptBlob, "checksum mismatch");
    if (blob[0] != 'P' || blob[1] != 'G' || blob[2] != 'C' || blob[3] != '1')
        fail(Err::CorruptBlob, "bad magic");
    if (blob[4] != kVersion) fail(Err::UnknownVersion, "unsupported version");
    ParsedHeader h;
    unsigned mode = blob[5] >> 4;
    if (mode > 1) fail(Err::CorruptBlob, "bad embedding mode");
    h.pi.embedding = static_cast<EmbedMode>(mode);
    h.pi.directed = (blob[5] & 0x0F) != 0;
    unsigned conn = blob[6] >> 4;
    if (conn > 4) fail(Err::CorruptBlob, "bad connectivity class");
    h.pi.connectivity = static_cast<Connectivity>(conn);
    std::vector<std::uint8_t> body(blob.begin() + 7, blob.end() - 4);
    h.body = BitString::from_bytes(std::move(body), 8 * (blob.size() - 11));
    return h;
}

}  // namespace

std::vector<std::uint8_t> encode(const PlaneGraph& g, const PiDescriptor& pi,
                                 const EncodeConfig& cfg, TableCache& tables, CodeStats* stats) {
    require(cfg.b_enum >= 1 && cfg.b_explicit >= cfg.b_enum, Err::MalformedSpec,
            "config requires 1 <= b_enum <= b_explicit");
    require(cfg.rho > 0 && cfg.rho < 1, Err::MalformedSpec, "config requires 0 < rho < 1");
    {
        auto viol = validate(g, pi);
        if (!viol.empty()) {
            std::string msg = "graph violates pi:";
            for (const auto& v : viol) msg += " " + v + ";";
            fail(Err::ValidationFailed, msg);
        }
    }
    CodeStats local;
    CodeStats& st = stats ? *stats : local;
    st = CodeStats{};
    st.n0 = g.node_count();
    st.m0 = g.edge_count();

    Encoder enc{pi, cfg, tables, st, {}, cfg.effective_b_enum(pi)};
    enc.tracker.lambda = std::max(enc.b_enum, 2);

    BitString body;
    gamma_append(body, pi.l3);
    gamma_append(body, pi.l4);
    gamma_append(body, g.node_count());
    gamma_append(body, enc.b_enum);
    gamma_append(body, cfg.b_explicit);
    BitString root = enc.code_node(g, 0);
    st.payload_bits = root.size_bits();
    body.append(root);

    auto blob = assemble(pi, body);
    st.total_bits = 8 * blob.size();
    st.levels = enc.tracker.levels;
    return blob;
}

DecodeResult decode(const std::vector<std::uint8_t>& blob, TableCache& tables) {
    ParsedHeader h = parse_header(blob);
    BitReader in(h.body);
    h.pi.l3 = static_cast<int>(gamma_decode(in));
    h.pi.l4 = static_cast<int>(gamma_decode(in));
    std::uint64_t n0 = gamma_decode(in);
    gamma_decode(in);  // b_enum (informational)
    gamma_decode(in);  // b_explicit (informational)
    Decoder dec{h.pi, tables, nullptr, {}};
    PlaneGraph g = dec.decode_node(in);
    if (in.remaining() >= 8) fail(Err::CorruptBlob, "trailing data after root code");
    if (static_cast<std::uint64_t>(g.node_count()) != n0)
        fail(Err::CorruptBlob, "decoded size disagrees with the header");
    return {std::move(g), h.pi};
}

CodeStats stats_of_blob(const std::vector<std::uint8_t>& blob, TableCache& tables) {
    ParsedHeader h = parse_header(blob);
    BitReader in(h.body);
    h.pi.l3 = static_cast<int>(gamma_decode(in));
    h.pi.l4 = static_cast<int>(gamma_decode(in));
    std::uint64_t n0 = gamma_decode(in);
    std::uint64_t b_enum = gamma_decode(in);
    gamma_decode(in);
    CodeStats st;
    st.n0 = static_cast<std::int64_t>(n0);
    Decoder dec{h.pi, tables, &st, {}};
    dec.tracker.lambda = std::max<std::int64_t>(static_cast<std::int64_t>(b_enum), 2);
    std::size_t start = in.pos();
    PlaneGraph g = dec.decode_node(in);
    st.payload_bits = in.pos() - start;
    st.total_bits = 8 * blob.size();
    st.m0 = g.edge_count();
    st.levels = dec.tracker.levels;
    return st;
}

}  // namespace pgc
