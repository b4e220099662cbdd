#include "pgc/bits.hpp"

#include <array>

namespace pgc {

namespace {

unsigned bit_width_u64(std::uint64_t v) {
    unsigned w = 0;
    while (v) {
        ++w;
        v >>= 1;
    }
    return w;
}

}  // namespace

void gamma_append(BitString& out, std::uint64_t v) {
    const std::uint64_t n = v + 1;
    const unsigned w = bit_width_u64(n);  // number of significant bits, >= 1
    for (unsigned i = 0; i + 1 < w; ++i) out.push_bit(false);
    out.push_uint(n, w);
}

BitString gamma_encode(std::uint64_t v) {
    BitString s;
    gamma_append(s, v);
    return s;
}

std::uint64_t gamma_decode(BitReader& in) {
    unsigned zeros = 0;
    while (!in.read_bit()) {
        if (++zeros > 63) fail(Err::CorruptDirectory, "gamma code too long");
    }
    std::uint64_t n = 1;
    for (unsigned i = 0; i < zeros; ++i) n = (n << 1) | (in.read_bit() ? 1u : 0u);
    return n - 1;
}

std::size_t gamma_bit_length(std::uint64_t v) {
    return 2 * bit_width_u64(v + 1) - 1;
}

Blob concat_parts(const std::vector<BitString>& parts) {
    require(!parts.empty(), Err::MalformedSpec, "concat_parts needs k >= 1");
    Blob b;
    gamma_append(b.bits, parts.size());
    for (const BitString& p : parts) gamma_append(b.bits, p.size_bits());
    b.directory_bits = b.bits.size_bits();
    for (const BitString& p : parts) b.bits.append(p);
    return b;
}

std::vector<BitString> split_parts(BitReader& in) {
    const std::uint64_t k = gamma_decode(in);
    if (k == 0 || k > in.remaining() + 1)
        fail(Err::CorruptDirectory, "implausible part count");
    std::vector<std::uint64_t> lens(k);
    std::uint64_t total = 0;
    for (auto& l : lens) {
        l = gamma_decode(in);
        total += l;
    }
    if (total > in.remaining()) fail(Err::CorruptDirectory, "part lengths exceed payload");
    std::vector<BitString> parts;
    parts.reserve(k);
    for (auto l : lens) parts.push_back(in.read_substring(l));
    return parts;
}

std::vector<BitString> split_parts(const BitString& blob) {
    BitReader in(blob);
    auto parts = split_parts(in);
    if (in.remaining() != 0) fail(Err::CorruptDirectory, "trailing bits after parts");
    return parts;
}

std::uint32_t crc32(const std::uint8_t* data, std::size_t len) {
    static const std::array<std::uint32_t, 256> table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t c = 0xFFFFFFFFu;
    for (std::size_t i = 0; i < len; ++i) c = table[(c ^ data[i]) & 0xFFu] ^ (c >> 8);
    return c ^ 0xFFFFFFFFu;
}

}  // namespace pgc
