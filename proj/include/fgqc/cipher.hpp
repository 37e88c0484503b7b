#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fgqc/key.hpp"
#include "fgqc/spa.hpp"

namespace fgqc {

struct CiphertextFrame {
    uint64_t counter = 0;
    BitVec payload;  // length n

    bool operator==(const CiphertextFrame&) const = default;
};

// One key expanded into working form.  Encryption is
//   c = (m G + e_P) P,   e_P = H^-1 z(counter),
// where z is the first n-k keystream bits for (seed, counter); decryption
// undoes P, removes e_P (exactly, or as LLR sign flips), and runs the
// sum-product decoder over H.
class JointCipher {
  public:
    explicit JointCipher(SecretKey key);

    const SecretKey& secret_key() const { return key_; }
    size_t code_length() const { return h_.code_length(); }   // n
    size_t message_length() const { return gen_.message_length(); }  // k
    size_t block_dim() const { return h_.dim(); }             // p = n - k

    const BlockRowParityCheck& parity_check() const { return h_; }
    const QcGenerator& generator() const { return gen_; }
    const TannerGraph& graph() const { return graph_; }

    BitVec derive_z(uint64_t counter) const;       // length n-k
    BitVec perturbation(uint64_t counter) const;   // e_P, length n
    BitVec encode(const BitVec& m) const { return gen_.encode(m); }

    BitVec permute(const BitVec& v) const;
    BitVec unpermute(const BitVec& v) const;
    std::vector<double> unpermute(std::span<const double> llrs) const;

    CiphertextFrame encrypt(const BitVec& message, uint64_t counter) const;
    // test seam: encryption with the syndrome vector supplied directly
    CiphertextFrame encrypt_with_z(const BitVec& message, const BitVec& z, uint64_t counter) const;

    // exact ciphertext: syndrome shortcut first, decoder as fallback with
    // +-hard_llr inputs.  Empty on decode failure.
    std::optional<BitVec> decrypt(const CiphertextFrame& frame, const DecoderConfig& cfg = {}) const;

    // channel LLRs for the transmitted frame (positive favors bit 0);
    // returns the decoded message, empty on decode failure
    std::optional<BitVec> decrypt_soft(std::span<const double> llrs, uint64_t counter,
                                       const DecoderConfig& cfg = {}) const;

    // decode already-unpermuted, already-deperturbed LLRs; exposed for the
    // plain coded path of the channel harness
    DecodeOutcome decode_codeword(std::span<const double> llrs, const DecoderConfig& cfg = {}) const;

    static constexpr double kHardDecisionLlr = 4.0;

  private:
    SecretKey key_;
    Geometry geo_;
    BlockRowParityCheck h_;
    QcGenerator gen_;
    RightInverse hinv_;
    TannerGraph graph_;
    std::vector<uint32_t> perm_, perm_inv_;
};

// frame wire format: "FGQF", 8-byte big-endian counter, 4-byte big-endian
// payload bit length, payload bits MSB-first zero-padded to a byte
std::vector<uint8_t> frame_to_bytes(const CiphertextFrame& frame);
// parses one frame starting at offset; advances offset past it.
// Throws MalformedFrame (message carries the byte offset).
CiphertextFrame frame_from_bytes(std::span<const uint8_t> data, size_t& offset);

// bit-level framing of byte streams into k-bit blocks: append a single 1
// then zeros to the next multiple of k ("1-then-zeros" padding)
std::vector<BitVec> split_into_blocks(std::span<const uint8_t> data, size_t k);
std::vector<uint8_t> join_blocks(const std::vector<BitVec>& blocks);  // strips the padding

}  // namespace fgqc
