#ifndef PGC_BITS_HPP
#define PGC_BITS_HPP

#include <cstdint>
#include <vector>

#include "pgc/error.hpp"

namespace pgc {

// Bit-exact sequence of bits, most-significant-bit-first within each byte.
// The final partial byte is zero-padded; the true length is carried in
// size_bits().
class BitString {
  public:
    BitString() = default;

    std::size_t size_bits() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    void push_bit(bool b) {
        if (nbits_ % 8 == 0) bytes_.push_back(0);
        if (b) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (nbits_ % 8));
        ++nbits_;
    }

    // Appends the low `width` bits of v, most significant first.
    void push_uint(std::uint64_t v, unsigned width) {
        for (unsigned i = width; i-- > 0;) push_bit((v >> i) & 1u);
    }

    void append(const BitString& other) {
        for (std::size_t i = 0; i < other.nbits_; ++i) push_bit(other.bit(i));
    }

    bool bit(std::size_t i) const {
        return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
    }

    void flip_bit(std::size_t i) {
        bytes_[i / 8] ^= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }

    bool operator==(const BitString& o) const {
        return nbits_ == o.nbits_ && bytes_ == o.bytes_;
    }

    static BitString from_bytes(std::vector<std::uint8_t> bytes, std::size_t nbits) {
        BitString s;
        s.bytes_ = std::move(bytes);
        s.nbits_ = nbits;
        return s;
    }

  private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

// Bounds-checked cursor over a BitString.  All reads throw TruncatedInput
// past the end; decoders rely on that instead of crashing on corrupt data.
class BitReader {
  public:
    explicit BitReader(const BitString& s) : s_(&s) {}

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return s_->size_bits() - pos_; }

    bool read_bit() {
        if (pos_ >= s_->size_bits()) fail(Err::TruncatedInput, "bit read past end");
        return s_->bit(pos_++);
    }

    std::uint64_t read_uint(unsigned width) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
        return v;
    }

    void skip(std::size_t n) {
        if (remaining() < n) fail(Err::TruncatedInput, "skip past end");
        pos_ += n;
    }

    BitString read_substring(std::size_t nbits) {
        BitString out;
        for (std::size_t i = 0; i < nbits; ++i) out.push_bit(read_bit());
        return out;
    }

  private:
    const BitString* s_;
    std::size_t pos_ = 0;
};

// Elias gamma of v+1, so v = 0 is representable ("1" = one bit).
void gamma_append(BitString& out, std::uint64_t v);
BitString gamma_encode(std::uint64_t v);
std::uint64_t gamma_decode(BitReader& in);
std::size_t gamma_bit_length(std::uint64_t v);

// Self-delimiting concatenation of k parts: a directory of gamma-coded part
// lengths (prefixed by gamma(k)) followed by the raw payload bits.  Part
// boundaries are recoverable from the directory alone.
struct Blob {
    BitString bits;          // directory + payload
    std::size_t directory_bits = 0;
};

Blob concat_parts(const std::vector<BitString>& parts);
std::vector<BitString> split_parts(const BitString& blob);
std::vector<BitString> split_parts(BitReader& in);

std::uint32_t crc32(const std::uint8_t* data, std::size_t len);

}  // namespace pgc

#endif  // PGC_BITS_HPP
