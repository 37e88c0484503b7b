#include "fgqc/bitvec.hpp"

#include <bit>
#include <cassert>

#include "fgqc/errors.hpp"

namespace fgqc {

BitVec BitVec::from_string(const std::string& s) {
    BitVec v(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') v.set(i);
    return v;
}

void BitVec::clear() {
    for (auto& w : words_) w = 0;
}

size_t BitVec::weight() const {
    size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (nbits_ != o.nbits_) throw SizeMismatch("xor of bit vectors of different length");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

// 64 bits of *this starting at bit pos (pos < size); bits past the end read 0
// because the tail word is kept trimmed.
uint64_t BitVec::read64(size_t pos) const {
    size_t w = pos >> 6, b = pos & 63;
    uint64_t v = words_[w] >> b;
    if (b && w + 1 < words_.size()) v |= words_[w + 1] << (64 - b);
    return v;
}

BitVec BitVec::rotated(size_t r) const {
    if (nbits_ == 0) return *this;
    r %= nbits_;
    if (r == 0) return *this;
    BitVec out(nbits_);
    // output word w holds out-bits [64w, 64w+64) = in-bits starting at
    // (64w - r) mod n, wrapping past n back to the start
    for (size_t w = 0; w < out.words_.size(); ++w) {
        size_t pos = (64 * w + nbits_ - r) % nbits_;
        uint64_t v = read64(pos);
        size_t avail = nbits_ - pos;
        if (avail < 64) {
            v &= (uint64_t(1) << avail) - 1;
            v |= read64(0) << avail;
        }
        out.words_[w] = v;
    }
    out.trim_tail();
    return out;
}

BitVec BitVec::slice(size_t start, size_t len) const {
    assert(start + len <= nbits_);
    BitVec out(len);
    for (size_t i = 0; i < len; ++i)
        if (get(start + i)) out.set(i);
    return out;
}

void BitVec::paste(size_t start, const BitVec& src) {
    assert(start + src.size() <= nbits_);
    for (size_t i = 0; i < src.size(); ++i) set(start + i, src.get(i));
}

std::vector<uint32_t> BitVec::support() const {
    std::vector<uint32_t> sup;
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w) {
            unsigned b = std::countr_zero(w);
            w &= w - 1;
            sup.push_back(uint32_t(i * 64 + b));
        }
    }
    return sup;
}

BitVec BitVec::from_support(size_t nbits, const std::vector<uint32_t>& sup) {
    BitVec v(nbits);
    for (auto i : sup) v.set(i);
    return v;
}

std::string BitVec::to_string() const {
    std::string s(nbits_, '0');
    for (size_t i = 0; i < nbits_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool BitVec::lex_less(const BitVec& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t d = words_[i] ^ o.words_[i];
        if (d) {
            unsigned b = std::countr_zero(d);
            // first differing bit: the vector with 0 there is the smaller string
            return !((words_[i] >> b) & 1);
        }
    }
    return false;
}

void BitWriter::put(uint64_t value, unsigned width) {
    assert(width <= 64);
    if (width < 64) assert(value < (uint64_t(1) << width));
    for (unsigned b = width; b-- > 0;) put_bit((value >> b) & 1);
}

void BitWriter::put_bit(bool b) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    if (b) bytes_.back() |= uint8_t(0x80u >> (nbits_ & 7));
    ++nbits_;
}

void BitWriter::put_bytes(const uint8_t* data, size_t len) {
    for (size_t i = 0; i < len; ++i) put(data[i], 8);
}

std::vector<uint8_t> BitWriter::take() {
    return std::move(bytes_);
}

uint64_t BitReader::get(unsigned width) {
    assert(width <= 64);
    uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | uint64_t(get_bit());
    return v;
}

bool BitReader::get_bit() {
    if (pos_ >= nbits_) throw MalformedKey("bit stream truncated");
    bool b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
    ++pos_;
    return b;
}

void BitReader::get_bytes(uint8_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) out[i] = uint8_t(get(8));
}

unsigned index_width(uint64_t x) {
    assert(x >= 1);
    return unsigned(std::bit_width(x - 1));
}

}  // namespace fgqc
