#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace fgqc {

// Fixed-length bit vector packed into 64-bit words, bit i stored at
// word i/64, lane i%64.  Lengths need not be word-aligned; unused high
// bits of the last word are kept zero so that equality and popcount
// work on whole words.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitVec from_string(const std::string& s);  // "1011..." index 0 first

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v = true) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void clear();
    size_t weight() const;
    bool any() const;

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    // cyclic rotation moving bit i to (i + r) mod size
    BitVec rotated(size_t r) const;

    // sub-range [start, start+len) as a fresh vector
    BitVec slice(size_t start, size_t len) const;
    void paste(size_t start, const BitVec& src);  // overwrite [start, start+src.size())

    std::vector<uint32_t> support() const;  // ascending indices of set bits
    static BitVec from_support(size_t nbits, const std::vector<uint32_t>& sup);

    std::string to_string() const;

    // total order matching the comparison of the "b0 b1 b2 ..." character
    // strings ('0' < '1'); used for canonical-form tie-breaking.
    bool lex_less(const BitVec& o) const;

    const std::vector<uint64_t>& words() const { return words_; }

  private:
    size_t nbits_ = 0;
    std::vector<uint64_t> words_;

    uint64_t read64(size_t pos) const;
    void trim_tail() {
        if (nbits_ & 63) words_.back() &= (uint64_t(1) << (nbits_ & 63)) - 1;
    }
};

// MSB-first bit packer used by key and frame serialization: the first bit
// written lands in the most significant bit of the first byte.
class BitWriter {
  public:
    void put(uint64_t value, unsigned width);
    void put_bit(bool b);
    void put_bytes(const uint8_t* data, size_t len);  // 8 bits per byte, MSB first
    size_t bit_count() const { return nbits_; }
    std::vector<uint8_t> take();  // zero-pads the final byte

  private:
    std::vector<uint8_t> bytes_;
    size_t nbits_ = 0;
};

class BitReader {
  public:
    BitReader(const uint8_t* data, size_t len) : data_(data), nbits_(len * 8) {}

    uint64_t get(unsigned width);  // throws MalformedKey past the end
    bool get_bit();
    void get_bytes(uint8_t* out, size_t len);
    size_t bits_left() const { return nbits_ - pos_; }
    size_t position() const { return pos_; }

  private:
    const uint8_t* data_;
    size_t nbits_;
    size_t pos_ = 0;
};

// ceil(log2(x)) for x >= 1: number of bits needed to index x distinct values.
unsigned index_width(uint64_t x);

}  // namespace fgqc
