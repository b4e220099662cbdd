#include "pgc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>

#include "pgc/driver.hpp"
#include "pgc/harness.hpp"
#include "pgc/pg_format.hpp"

struct pgc_graph {
    pgc::PlaneGraph g;
    pgc::EmbedMode mode = pgc::EmbedMode::Plane;
};

namespace {

thread_local std::string t_last_error;

std::mutex g_cache_mutex;
std::string g_table_dir = [] {
    const char* env = std::getenv("PGC_TABLE_DIR");
    return env ? std::string(env) : std::string();
}();
std::unique_ptr<pgc::TableCache> g_cache;

pgc::TableCache& cache_locked() {
    if (!g_cache) g_cache = std::make_unique<pgc::TableCache>(g_table_dir);
    return *g_cache;
}

pgc_status classify(const pgc::Error& e) {
    switch (e.code()) {
        case pgc::Err::ValidationFailed:
            return PGC_ERR_VALIDATION;
        case pgc::Err::BadFormat:
        case pgc::Err::CorruptBlob:
        case pgc::Err::UnknownVersion:
        case pgc::Err::TruncatedInput:
        case pgc::Err::CorruptDirectory:
        case pgc::Err::DfsOutOfRange:
        case pgc::Err::BoundaryMismatch:
        case pgc::Err::WheelNotFound:
        case pgc::Err::AmbiguousRim:
        case pgc::Err::AmbiguousLowDegree:
        case pgc::Err::BitmapLengthMismatch:
        case pgc::Err::NotInTable:
            return PGC_ERR_CORRUPT;
        case pgc::Err::MalformedSpec:
        case pgc::Err::CapExceeded:
        case pgc::Err::TooLargeForCanonical:
        case pgc::Err::IoError:
            return PGC_ERR_USAGE;
        default:
            return PGC_ERR_INTERNAL;
    }
}

template <typename F>
pgc_status guarded(F&& f) {
    try {
        f();
        t_last_error.clear();
        return PGC_OK;
    } catch (const pgc::Error& e) {
        t_last_error = e.what();
        return classify(e);
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PGC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* pgc_last_error(void) { return t_last_error.c_str(); }

void pgc_set_table_dir(const char* dir) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_table_dir = dir ? dir : "";
    g_cache.reset();
}

pgc_status pgc_graph_parse_pg(const char* text, size_t len, pgc_graph** out) {
    if (!text || !out) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        auto parsed = pgc::parse_pg(std::string(text, len));
        *out = new pgc_graph{std::move(parsed.graph), parsed.mode};
    });
}

pgc_status pgc_graph_write_pg(const pgc_graph* g, int planar_mode, char** out_text) {
    if (!g || !out_text) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        *out_text = dup_string(pgc::write_pg(
            g->g, planar_mode ? pgc::EmbedMode::Planar : pgc::EmbedMode::Plane));
    });
}

void pgc_graph_free(pgc_graph* g) { delete g; }
void pgc_buffer_free(void* p) { std::free(p); }

int32_t pgc_graph_node_count(const pgc_graph* g) { return g ? g->g.node_count() : -1; }
int32_t pgc_graph_edge_count(const pgc_graph* g) { return g ? g->g.edge_count() : -1; }

pgc_status pgc_validate(const pgc_graph* g, const char* pi, char** violations_or_null) {
    if (!g || !pi) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    std::string text;
    bool ok = true;
    pgc_status st = guarded([&] {
        auto desc = pgc::PiDescriptor::parse(pi);
        auto viol = pgc::validate(g->g, desc);
        ok = viol.empty();
        for (const auto& v : viol) {
            text += v;
            text += '\n';
        }
    });
    if (st != PGC_OK) return st;
    if (violations_or_null) *violations_or_null = dup_string(text);
    if (!ok) {
        t_last_error = text;
        return PGC_ERR_VALIDATION;
    }
    return PGC_OK;
}

pgc_status pgc_encode(const pgc_graph* g, const char* pi, int b_enum, int b_explicit, double rho,
                      uint8_t** out, size_t* out_len) {
    if (!g || !pi || !out || !out_len) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        auto desc = pgc::PiDescriptor::parse(pi);
        pgc::EncodeConfig cfg;
        if (b_enum > 0) cfg.b_enum = b_enum;
        if (b_explicit > 0) cfg.b_explicit = b_explicit;
        if (rho > 0) cfg.rho = rho;
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto blob = pgc::encode(g->g, desc, cfg, cache_locked());
        *out = static_cast<uint8_t*>(std::malloc(blob.size()));
        std::memcpy(*out, blob.data(), blob.size());
        *out_len = blob.size();
    });
}

pgc_status pgc_decode(const uint8_t* blob, size_t len, pgc_graph** out, int* planar_mode_out) {
    if (!blob || !out) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        std::vector<uint8_t> bytes(blob, blob + len);
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto res = pgc::decode(bytes, cache_locked());
        if (planar_mode_out)
            *planar_mode_out = res.pi.embedding == pgc::EmbedMode::Planar ? 1 : 0;
        *out = new pgc_graph{std::move(res.graph), res.pi.embedding};
    });
}

pgc_status pgc_stats_text(const uint8_t* blob, size_t len, char** out_text) {
    if (!blob || !out_text) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        std::vector<uint8_t> bytes(blob, blob + len);
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto st = pgc::stats_of_blob(bytes, cache_locked());
        *out_text = dup_string(st.to_text());
    });
}

pgc_status pgc_generate(const char* kind, int32_t n, double fraction, uint64_t seed,
                        pgc_graph** out) {
    if (!kind || !out) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        std::string k(kind);
        pgc::PlaneGraph g;
        if (k == "triangulation") g = pgc::gen_triangulation(n, seed);
        else if (k == "plane-connected") g = pgc::gen_plane_graph(n, fraction, seed);
        else if (k == "plane-any") g = pgc::gen_plane_graph(n, fraction, seed);
        else if (k == "multi-triangulation") g = pgc::gen_triangulation(n, seed);
        else pgc::fail(pgc::Err::BadFormat, "unknown generator kind '" + k + "'");
        *out = new pgc_graph{std::move(g), pgc::EmbedMode::Plane};
    });
}

pgc_status pgc_table_alpha(const char* pi, int32_t n, uint64_t* alpha, int32_t* index_width) {
    if (!pi || !alpha) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        auto desc = pgc::PiDescriptor::parse(pi);
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        const auto& table = cache_locked().get(desc, n);
        *alpha = table.alpha();
        if (index_width) *index_width = table.index_width();
    });
}

pgc_status pgc_canonical_code(const pgc_graph* g, const char* pi, char** out_code) {
    if (!g || !pi || !out_code) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        auto desc = pgc::PiDescriptor::parse(pi);
        *out_code = dup_string(pgc::canonical_code(g->g, desc));
    });
}

pgc_status pgc_graph_equal(const pgc_graph* a, const pgc_graph* b, const char* pi,
                           int32_t* equal_out) {
    if (!a || !b || !pi || !equal_out) {
        t_last_error = "null argument";
        return PGC_ERR_USAGE;
    }
    return guarded([&] {
        auto desc = pgc::PiDescriptor::parse(pi);
        *equal_out = pgc::pi_equal(a->g, b->g, desc) ? 1 : 0;
    });
}

}  // extern "C"
