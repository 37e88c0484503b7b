#include "fgqc/keystream.hpp"

#include <cstring>
#include <random>

namespace fgqc {

namespace {

inline uint32_t rotl32(uint32_t v, int c) { return (v << c) | (v >> (32 - c)); }

inline void quarter_round(uint32_t& a, uint32_t& b, uint32_t& c, uint32_t& d) {
    a += b; d ^= a; d = rotl32(d, 16);
    c += d; b ^= c; b = rotl32(b, 12);
    a += b; d ^= a; d = rotl32(d, 8);
    c += d; b ^= c; b = rotl32(b, 7);
}

inline uint32_t load_le32(const uint8_t* p) {
    return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 | uint32_t(p[3]) << 24;
}

}  // namespace

Keystream::Keystream(const std::array<uint8_t, 16>& seed, uint64_t nonce) {
    // "expand 16-byte k": the 128-bit key is used twice
    static const uint8_t tau[16] = {'e', 'x', 'p', 'a', 'n', 'd', ' ', '1',
                                    '6', '-', 'b', 'y', 't', 'e', ' ', 'k'};
    for (int i = 0; i < 4; ++i) state_[i] = load_le32(tau + 4 * i);
    for (int i = 0; i < 4; ++i) state_[4 + i] = load_le32(seed.data() + 4 * i);
    for (int i = 0; i < 4; ++i) state_[8 + i] = load_le32(seed.data() + 4 * i);
    state_[12] = 0;  // 64-bit block counter
    state_[13] = 0;
    state_[14] = uint32_t(nonce);
    state_[15] = uint32_t(nonce >> 32);
}

void Keystream::refill() {
    std::array<uint32_t, 16> x = state_;
    for (int round = 0; round < 10; ++round) {
        quarter_round(x[0], x[4], x[8], x[12]);
        quarter_round(x[1], x[5], x[9], x[13]);
        quarter_round(x[2], x[6], x[10], x[14]);
        quarter_round(x[3], x[7], x[11], x[15]);
        quarter_round(x[0], x[5], x[10], x[15]);
        quarter_round(x[1], x[6], x[11], x[12]);
        quarter_round(x[2], x[7], x[8], x[13]);
        quarter_round(x[3], x[4], x[9], x[14]);
    }
    for (int i = 0; i < 16; ++i) {
        uint32_t v = x[i] + state_[i];
        block_[4 * i] = uint8_t(v);
        block_[4 * i + 1] = uint8_t(v >> 8);
        block_[4 * i + 2] = uint8_t(v >> 16);
        block_[4 * i + 3] = uint8_t(v >> 24);
    }
    if (++state_[12] == 0) ++state_[13];
    pos_ = 0;
}

uint8_t Keystream::next_byte() {
    if (pos_ >= 64) refill();
    return block_[pos_++];
}

uint64_t Keystream::next_u64() {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(next_byte()) << (8 * i);
    return v;
}

void Keystream::fill(uint8_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) out[i] = next_byte();
}

BitVec Keystream::bits(size_t nbits) {
    BitVec v(nbits);
    size_t nbytes = (nbits + 7) / 8;
    for (size_t b = 0; b < nbytes; ++b) {
        uint8_t byte = next_byte();
        for (int j = 0; j < 8; ++j) {
            size_t i = b * 8 + size_t(j);
            if (i >= nbits) break;
            if ((byte >> (7 - j)) & 1) v.set(i);
        }
    }
    return v;
}

uint64_t EntropySource::below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

std::array<uint8_t, 16> EntropySource::take_seed() {
    std::array<uint8_t, 16> s;
    for (int i = 0; i < 2; ++i) {
        uint64_t v = next_u64();
        std::memcpy(s.data() + 8 * i, &v, 8);
    }
    return s;
}

std::array<uint8_t, 16> system_seed() {
    std::random_device rd;
    std::array<uint8_t, 16> s;
    for (size_t i = 0; i < s.size(); i += 4) {
        uint32_t v = rd();
        std::memcpy(s.data() + i, &v, 4);
    }
    return s;
}

}  // namespace fgqc
