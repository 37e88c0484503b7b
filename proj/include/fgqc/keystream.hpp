#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fgqc/bitvec.hpp"

namespace fgqc {

// Deterministic keystream generator behind the cipher's syndrome vectors:
// 128-bit seed, 64-bit nonce, arbitrary-length output.  The construction is
// the original 20-round ChaCha with its 16-byte-key initialization; any
// stream cipher with this (seed, nonce) shape would slot in, the scheme
// itself only requires the contract.
class Keystream {
  public:
    static constexpr const char* kAlgorithm = "chacha20/128";

    Keystream(const std::array<uint8_t, 16>& seed, uint64_t nonce);

    uint8_t next_byte();
    uint64_t next_u64();
    void fill(uint8_t* out, size_t len);

    // first nbits of the stream, bit i taken MSB-first from byte i/8
    BitVec bits(size_t nbits);

  private:
    std::array<uint32_t, 16> state_;
    std::array<uint8_t, 64> block_;
    size_t pos_ = 64;  // forces a refill on first use

    void refill();
};

// Uniform sampling helpers over a keystream; also the entropy interface the
// key generator consumes, so that tests can drive it deterministically.
class EntropySource {
  public:
    virtual ~EntropySource() = default;
    virtual uint64_t next_u64() = 0;

    // unbiased integer in [0, bound) by rejection
    uint64_t below(uint64_t bound);
    std::array<uint8_t, 16> take_seed();
};

class SeededEntropy final : public EntropySource {
  public:
    explicit SeededEntropy(const std::array<uint8_t, 16>& seed) : ks_(seed, 0) {}
    uint64_t next_u64() override { return ks_.next_u64(); }

  private:
    Keystream ks_;
};

// seed drawn from the operating system
std::array<uint8_t, 16> system_seed();

}  // namespace fgqc
