// pgc: encode, decode, and inspect planar graph files.
// Talks to the library exclusively through the C API in pgc.h.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCorrupt = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

int exit_code_for(pgc_status st) {
    switch (st) {
        case PGC_OK: return kExitOk;
        case PGC_ERR_VALIDATION: return kExitValidation;
        case PGC_ERR_CORRUPT: return kExitCorrupt;
        case PGC_ERR_USAGE: return kExitUsage;
        default: return kExitInternal;
    }
}

int complain(pgc_status st) {
    std::cerr << "pgc: " << pgc_last_error() << "\n";
    return exit_code_for(st);
}

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_output(const std::string& path, const void* data, size_t len, bool binary,
                  bool allow_binary_stdout) {
    if (path == "-") {
        if (binary && isatty(fileno(stdout)) && !allow_binary_stdout) {
            std::cerr << "pgc: refusing to write binary data to a terminal"
                         " (use --binary-stdout)\n";
            return false;
        }
        std::fwrite(data, 1, len, stdout);
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
    return static_cast<bool>(out);
}

struct GraphHandle {
    pgc_graph* g = nullptr;
    ~GraphHandle() { pgc_graph_free(g); }
};

struct Buffer {
    void* p = nullptr;
    ~Buffer() { pgc_buffer_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar graph codec"};
    app.require_subcommand(1);

    if (const char* dir = std::getenv("PGC_TABLE_DIR")) pgc_set_table_dir(dir);

    // encode
    std::string enc_pi, enc_in, enc_out = "-";
    int benum = 0, bexplicit = 0;
    double rho = 0;
    bool binary_stdout = false;
    auto* enc = app.add_subcommand("encode", "encode a .pg file into a .pgc blob");
    enc->add_option("--pi", enc_pi, "property descriptor")->required();
    enc->add_option("--benum", benum, "index-leaf cap");
    enc->add_option("--bexplicit", bexplicit, "explicit-leaf cap");
    enc->add_option("--rho", rho, "split shrink factor");
    enc->add_option("input", enc_in, "input .pg (or -)")->required();
    enc->add_option("-o,--output", enc_out, "output .pgc (or -)");
    enc->add_flag("--binary-stdout", binary_stdout, "allow binary on a terminal");

    // decode
    std::string dec_in, dec_out = "-";
    auto* dec = app.add_subcommand("decode", "decode a .pgc blob back into .pg");
    dec->add_option("input", dec_in, "input .pgc (or -)")->required();
    dec->add_option("-o,--output", dec_out, "output .pg (or -)");

    // stats
    std::string stats_in;
    auto* stats = app.add_subcommand("stats", "print the code structure report");
    stats->add_option("input", stats_in, "input .pgc (or -)")->required();

    // gen
    std::string gen_kind = "triangulation", gen_out = "-";
    int gen_n = 100;
    double gen_fraction = 0.3;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a random graph");
    gen->add_option("--kind", gen_kind,
                    "triangulation|plane-connected|plane-any|multi-triangulation");
    gen->add_option("-n", gen_n, "node count")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--fraction", gen_fraction, "edge deletion fraction");
    gen->add_option("-o,--output", gen_out, "output .pg (or -)");

    // validate
    std::string val_pi, val_in;
    auto* val = app.add_subcommand("validate", "check a .pg file against a property");
    val->add_option("--pi", val_pi, "property descriptor")->required();
    val->add_option("input", val_in, "input .pg (or -)")->required();

    // tables
    std::string tab_pi;
    int tab_n = 0;
    auto* tab = app.add_subcommand("tables", "build/inspect a base table");
    tab->add_option("--pi", tab_pi, "property descriptor")->required();
    tab->add_option("-n", tab_n, "node count")->required();

    CLI11_PARSE(app, argc, argv);

    if (enc->parsed()) {
        std::string text;
        if (!read_input(enc_in, text)) {
            std::cerr << "pgc: cannot read " << enc_in << "\n";
            return kExitUsage;
        }
        GraphHandle g;
        if (auto st = pgc_graph_parse_pg(text.c_str(), text.size(), &g.g); st != PGC_OK)
            return complain(st);
        uint8_t* blob = nullptr;
        size_t blob_len = 0;
        if (auto st = pgc_encode(g.g, enc_pi.c_str(), benum, bexplicit, rho, &blob, &blob_len);
            st != PGC_OK)
            return complain(st);
        Buffer owned{blob};
        if (!write_output(enc_out, blob, blob_len, true, binary_stdout)) return kExitUsage;
        return kExitOk;
    }
    if (dec->parsed()) {
        std::string blob;
        if (!read_input(dec_in, blob)) {
            std::cerr << "pgc: cannot read " << dec_in << "\n";
            return kExitUsage;
        }
        GraphHandle g;
        int planar_mode = 0;
        if (auto st = pgc_decode(reinterpret_cast<const uint8_t*>(blob.data()), blob.size(), &g.g,
                                 &planar_mode);
            st != PGC_OK)
            return complain(st);
        char* text = nullptr;
        if (auto st = pgc_graph_write_pg(g.g, planar_mode, &text); st != PGC_OK)
            return complain(st);
        Buffer owned{text};
        if (!write_output(dec_out, text, std::strlen(text), false, true)) return kExitUsage;
        return kExitOk;
    }
    if (stats->parsed()) {
        std::string blob;
        if (!read_input(stats_in, blob)) {
            std::cerr << "pgc: cannot read " << stats_in << "\n";
            return kExitUsage;
        }
        char* text = nullptr;
        if (auto st = pgc_stats_text(reinterpret_cast<const uint8_t*>(blob.data()), blob.size(),
                                     &text);
            st != PGC_OK)
            return complain(st);
        Buffer owned{text};
        std::fputs(text, stdout);
        return kExitOk;
    }
    if (gen->parsed()) {
        GraphHandle g;
        if (auto st = pgc_generate(gen_kind.c_str(), gen_n, gen_fraction, gen_seed, &g.g);
            st != PGC_OK)
            return complain(st);
        char* text = nullptr;
        if (auto st = pgc_graph_write_pg(g.g, 0, &text); st != PGC_OK) return complain(st);
        Buffer owned{text};
        if (!write_output(gen_out, text, std::strlen(text), false, true)) return kExitUsage;
        return kExitOk;
    }
    if (val->parsed()) {
        std::string text;
        if (!read_input(val_in, text)) {
            std::cerr << "pgc: cannot read " << val_in << "\n";
            return kExitUsage;
        }
        GraphHandle g;
        if (auto st = pgc_graph_parse_pg(text.c_str(), text.size(), &g.g); st != PGC_OK)
            return complain(st);
        char* viol = nullptr;
        auto st = pgc_validate(g.g, val_pi.c_str(), &viol);
        Buffer owned{viol};
        if (st == PGC_OK) {
            std::puts("ok");
            return kExitOk;
        }
        if (st == PGC_ERR_VALIDATION) {
            std::fputs(viol, stdout);
            return kExitValidation;
        }
        return complain(st);
    }
    if (tab->parsed()) {
        uint64_t alpha = 0;
        int32_t width = 0;
        if (auto st = pgc_table_alpha(tab_pi.c_str(), tab_n, &alpha, &width); st != PGC_OK)
            return complain(st);
        std::printf("pi %s\nn %d\nalpha %llu\nindex_width %d\n", tab_pi.c_str(), tab_n,
                    static_cast<unsigned long long>(alpha), width);
        return kExitOk;
    }
    return kExitUsage;
}
