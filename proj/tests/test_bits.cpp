#include <random>

#include "doctest.h"
#include "pgc/bits.hpp"

using namespace pgc;

namespace {

std::string bit_string(const BitString& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size_bits(); ++i) out.push_back(s.bit(i) ? '1' : '0');
    return out;
}

}  // namespace

TEST_CASE("gamma encodes small values") {
    CHECK(bit_string(gamma_encode(0)) == "1");
    CHECK(bit_string(gamma_encode(1)) == "010");
    CHECK(bit_string(gamma_encode(2)) == "011");
    CHECK(bit_string(gamma_encode(3)) == "00100");
    for (std::uint64_t v : {0ull, 1ull, 5ull, 100ull})
        CHECK(gamma_encode(v).size_bits() == gamma_bit_length(v));
}

TEST_CASE("gamma round-trips") {
    std::mt19937_64 rng(7);
    BitString all;
    std::vector<std::uint64_t> vals;
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t v = rng() % 1000001;
        vals.push_back(v);
        gamma_append(all, v);
    }
    BitReader in(all);
    for (std::uint64_t v : vals) CHECK(gamma_decode(in) == v);
    CHECK(in.remaining() == 0);
}

TEST_CASE("gamma rejects truncation") {
    BitString s = gamma_encode(1000);
    BitString cut = BitString::from_bytes(s.bytes(), s.size_bits() - 3);
    BitReader in(cut);
    CHECK_THROWS_AS((void)gamma_decode(in), Error);
}

TEST_CASE("part concatenation round-trips") {
    auto mk = [](const std::string& bits) {
        BitString s;
        for (char c : bits) s.push_bit(c == '1');
        return s;
    };
    SUBCASE("two one-bit parts") {
        Blob b = concat_parts({mk("0"), mk("1")});
        auto parts = split_parts(b.bits);
        REQUIRE(parts.size() == 2);
        CHECK(bit_string(parts[0]) == "0");
        CHECK(bit_string(parts[1]) == "1");
    }
    SUBCASE("single empty part") {
        Blob b = concat_parts({BitString{}});
        auto parts = split_parts(b.bits);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].size_bits() == 0);
    }
    SUBCASE("directory overhead bound for 5/0/17") {
        std::mt19937_64 rng(3);
        BitString p1, p2, p3;
        for (int i = 0; i < 5; ++i) p1.push_bit(rng() & 1);
        for (int i = 0; i < 17; ++i) p3.push_bit(rng() & 1);
        Blob b = concat_parts({p1, p2, p3});
        std::size_t total = 22;
        std::size_t log_term = 0;
        while ((std::size_t{1} << (log_term + 1)) <= total + 1) ++log_term;
        CHECK(b.directory_bits <= 2 * 3 * (log_term + 1));
        auto parts = split_parts(b.bits);
        CHECK(parts[0] == p1);
        CHECK(parts[1] == p2);
        CHECK(parts[2] == p3);
    }
}

TEST_CASE("part concatenation inverse property fuzz") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 10000; ++it) {
        std::size_t k = 1 + rng() % 5;
        std::vector<BitString> parts(k);
        std::size_t total = 0;
        for (auto& p : parts) {
            std::size_t len = rng() % 40;
            total += len;
            for (std::size_t i = 0; i < len; ++i) p.push_bit(rng() & 1);
        }
        Blob b = concat_parts(parts);
        // exact spec bound on the directory
        std::size_t log_term = 0;
        while ((std::size_t{1} << (log_term + 1)) <= total + 1) ++log_term;
        CHECK(b.directory_bits <= 2 * k * (log_term + 1));
        auto round = split_parts(b.bits);
        REQUIRE(round.size() == k);
        for (std::size_t i = 0; i < k; ++i) CHECK(round[i] == parts[i]);
    }
}

TEST_CASE("corrupt directory reports an error") {
    Blob b = concat_parts({gamma_encode(5), gamma_encode(9)});
    BitString broken = b.bits;
    broken.flip_bit(0);  // part count field
    CHECK_THROWS_AS((void)split_parts(broken), Error);
}

TEST_CASE("crc32 known value") {
    const char* s = "123456789";
    CHECK(crc32(reinterpret_cast<const std::uint8_t*>(s), 9) == 0xCBF43926u);
}
