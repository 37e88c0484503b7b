#include "fgqc/cipher.hpp"

#include <cstring>
#include <string>

#include "fgqc/errors.hpp"

namespace fgqc {

namespace {
constexpr char kFrameMagic[4] = {'F', 'G', 'Q', 'F'};
}

JointCipher::JointCipher(SecretKey key)
    : key_(std::move(key)),
      geo_(key_.geometry),
      h_(expand_parity_check(key_, geo_)),
      gen_(build_generator(h_)),
      hinv_(right_inverse(h_)),
      graph_(h_),
      perm_(expand_permutation(key_, h_.code_length())),
      perm_inv_(expand_permutation_inverse(key_, h_.code_length())) {}

BitVec JointCipher::derive_z(uint64_t counter) const {
    Keystream ks(key_.seed, counter);
    return ks.bits(block_dim());
}

BitVec JointCipher::perturbation(uint64_t counter) const {
    return hinv_.apply(derive_z(counter));
}

BitVec JointCipher::permute(const BitVec& v) const {
    if (v.size() != perm_.size()) throw SizeMismatch("permutation length mismatch");
    BitVec out(v.size());
    for (size_t i = 0; i < perm_.size(); ++i)
        if (v.get(i)) out.set(perm_[i]);
    return out;
}

BitVec JointCipher::unpermute(const BitVec& v) const {
    if (v.size() != perm_.size()) throw SizeMismatch("permutation length mismatch");
    BitVec out(v.size());
    for (size_t i = 0; i < perm_.size(); ++i)
        if (v.get(perm_[i])) out.set(i);
    return out;
}

std::vector<double> JointCipher::unpermute(std::span<const double> llrs) const {
    if (llrs.size() != perm_.size()) throw SizeMismatch("permutation length mismatch");
    std::vector<double> out(llrs.size());
    for (size_t i = 0; i < perm_.size(); ++i) out[i] = llrs[perm_[i]];
    return out;
}

CiphertextFrame JointCipher::encrypt(const BitVec& message, uint64_t counter) const {
    return encrypt_with_z(message, derive_z(counter), counter);
}

CiphertextFrame JointCipher::encrypt_with_z(const BitVec& message, const BitVec& z, uint64_t counter) const {
    if (message.size() != message_length()) throw LengthMismatch("message length mismatch");
    BitVec y = encode(message);
    y ^= hinv_.apply(z);
    return CiphertextFrame{counter, permute(y)};
}

std::optional<BitVec> JointCipher::decrypt(const CiphertextFrame& frame, const DecoderConfig& cfg) const {
    if (frame.payload.size() != code_length()) throw MalformedFrame("payload length mismatch");
    BitVec y = unpermute(frame.payload);
    y ^= perturbation(frame.counter);
    // exact channel: y is already a codeword unless the key or counter is wrong
    if (graph_.syndrome_zero(y)) return y.slice(0, message_length());

    std::vector<double> llrs(code_length());
    for (size_t i = 0; i < llrs.size(); ++i) llrs[i] = y.get(i) ? -kHardDecisionLlr : kHardDecisionLlr;
    DecodeOutcome out = decode(graph_, llrs, cfg);
    if (!out.converged) return std::nullopt;
    return out.bits.slice(0, message_length());
}

std::optional<BitVec> JointCipher::decrypt_soft(std::span<const double> llrs, uint64_t counter,
                                                const DecoderConfig& cfg) const {
    if (llrs.size() != code_length()) throw LengthMismatch("LLR vector length mismatch");
    std::vector<double> y = unpermute(llrs);
    BitVec e = perturbation(counter);
    for (uint32_t s : e.support()) y[s] = -y[s];
    DecodeOutcome out = decode(graph_, y, cfg);
    if (!out.converged) return std::nullopt;
    return out.bits.slice(0, message_length());
}

DecodeOutcome JointCipher::decode_codeword(std::span<const double> llrs, const DecoderConfig& cfg) const {
    return decode(graph_, llrs, cfg);
}

std::vector<uint8_t> frame_to_bytes(const CiphertextFrame& frame) {
    std::vector<uint8_t> out;
    const size_t nbits = frame.payload.size();
    out.reserve(16 + (nbits + 7) / 8);
    out.insert(out.end(), kFrameMagic, kFrameMagic + 4);
    for (int i = 7; i >= 0; --i) out.push_back(uint8_t(frame.counter >> (8 * i)));
    for (int i = 3; i >= 0; --i) out.push_back(uint8_t(uint32_t(nbits) >> (8 * i)));
    uint8_t acc = 0;
    for (size_t i = 0; i < nbits; ++i) {
        acc |= uint8_t(frame.payload.get(i)) << (7 - (i & 7));
        if ((i & 7) == 7) {
            out.push_back(acc);
            acc = 0;
        }
    }
    if (nbits & 7) out.push_back(acc);
    return out;
}

CiphertextFrame frame_from_bytes(std::span<const uint8_t> data, size_t& offset) {
    auto fail = [&](const char* what) {
        throw MalformedFrame(std::string(what) + " at byte offset " + std::to_string(offset));
    };
    if (offset > data.size() || data.size() - offset < 16) fail("truncated frame header");
    if (std::memcmp(data.data() + offset, kFrameMagic, 4) != 0) fail("bad frame magic");
    uint64_t counter = 0;
    for (int i = 0; i < 8; ++i) counter = counter << 8 | data[offset + 4 + size_t(i)];
    uint32_t nbits = 0;
    for (int i = 0; i < 4; ++i) nbits = nbits << 8 | data[offset + 12 + size_t(i)];
    size_t nbytes = (size_t(nbits) + 7) / 8;
    if (data.size() - offset < 16 + nbytes) fail("truncated frame payload");

    CiphertextFrame frame;
    frame.counter = counter;
    frame.payload = BitVec(nbits);
    for (size_t i = 0; i < nbits; ++i)
        if ((data[offset + 16 + (i >> 3)] >> (7 - (i & 7))) & 1) frame.payload.set(i);
    offset += 16 + nbytes;
    return frame;
}

std::vector<BitVec> split_into_blocks(std::span<const uint8_t> data, size_t k) {
    const size_t payload_bits = data.size() * 8;
    const size_t padded = (payload_bits + 1 + k - 1) / k * k;  // room for the 1 marker
    const size_t count = padded / k;
    std::vector<BitVec> blocks(count, BitVec(k));
    for (size_t i = 0; i < payload_bits; ++i)
        if ((data[i >> 3] >> (7 - (i & 7))) & 1) blocks[i / k].set(i % k);
    blocks[payload_bits / k].set(payload_bits % k);  // the padding marker
    return blocks;
}

std::vector<uint8_t> join_blocks(const std::vector<BitVec>& blocks) {
    if (blocks.empty()) throw MalformedFrame("no blocks to join");
    size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    // find the final 1 marker
    size_t end = total;
    bool found = false;
    while (end-- > 0) {
        if (blocks[end / blocks[0].size()].get(end % blocks[0].size())) {
            found = true;
            break;
        }
    }
    if (!found) throw MalformedFrame("padding marker missing");
    if (end % 8 != 0) throw MalformedFrame("payload is not a whole number of bytes");
    std::vector<uint8_t> out(end / 8, 0);
    for (size_t i = 0; i < end; ++i)
        if (blocks[i / blocks[0].size()].get(i % blocks[0].size())) out[i >> 3] |= uint8_t(0x80u >> (i & 7));
    return out;
}

}  // namespace fgqc
