#include <doctest.h>

#include <array>
#include <random>
#include <string>
#include <vector>

#include "fgqc/cipher.hpp"
#include "fgqc/errors.hpp"

using fgqc::BitVec;
using fgqc::CiphertextFrame;
using fgqc::GeometryKind;
using fgqc::GeometrySpec;
using fgqc::JointCipher;
using fgqc::SecretKey;
using fgqc::SeededEntropy;

namespace {

GeometrySpec eg(uint32_t m, uint32_t q) { return {GeometryKind::EuclideanNoOrigin, m, q}; }

std::array<uint8_t, 16> seed_of(uint64_t v) {
    std::array<uint8_t, 16> s{};
    for (int i = 0; i < 8; ++i) s[size_t(i)] = uint8_t(v >> (8 * i));
    return s;
}

SecretKey sample_key(const GeometrySpec& spec, uint32_t n0, uint32_t l, uint64_t seed = 77) {
    SeededEntropy ent(seed_of(seed));
    return fgqc::keygen(spec, n0, l, ent);
}

const JointCipher& toy_cipher() {
    static const JointCipher c(sample_key(eg(3, 3), 3, 13));
    return c;
}

const JointCipher& big_cipher() {
    static const JointCipher c(sample_key(eg(6, 3), 6, 26));
    return c;
}

BitVec random_bits(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitVec v(n);
    for (size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

}  // namespace

TEST_SUITE("cipher") {

TEST_CASE("noiseless encrypt/decrypt round-trips on the toy system") {
    const JointCipher& sys = toy_cipher();
    CHECK(sys.code_length() == 78);
    CHECK(sys.message_length() == 52);
    CHECK(sys.block_dim() == 26);
    for (uint64_t counter = 0; counter < 10; ++counter) {
        const BitVec m = random_bits(sys.message_length(), 100 + counter);
        const CiphertextFrame frame = sys.encrypt(m, counter);
        CHECK(frame.counter == counter);
        REQUIRE(frame.payload.size() == sys.code_length());
        const auto back = sys.decrypt(frame);
        REQUIRE(back.has_value());
        CHECK(*back == m);
    }
}

TEST_CASE("noiseless round-trips on the large system") {
    const JointCipher& sys = big_cipher();
    CHECK(sys.code_length() == 4368);
    CHECK(sys.message_length() == 3640);
    const BitVec m = random_bits(sys.message_length(), 5);
    const CiphertextFrame f0 = sys.encrypt(m, 0);
    const CiphertextFrame f1 = sys.encrypt(m, 1);
    CHECK(f0.payload != f1.payload);  // the counter re-keys the perturbation
    for (const auto& f : {f0, f1}) {
        const auto back = sys.decrypt(f);
        REQUIRE(back.has_value());
        CHECK(*back == m);
    }
}

TEST_CASE("a zero syndrome vector reduces encryption to permuted encoding") {
    const JointCipher& sys = toy_cipher();
    const BitVec m = random_bits(sys.message_length(), 8);
    const BitVec z(sys.block_dim());
    const CiphertextFrame frame = sys.encrypt_with_z(m, z, 3);
    CHECK(frame.payload == sys.permute(sys.encode(m)));
    CHECK(!sys.parity_check().syndrome(sys.unpermute(frame.payload)).any());
}

TEST_CASE("the unpermuted ciphertext has the derived syndrome") {
    const JointCipher& sys = toy_cipher();
    for (uint64_t counter : {0ull, 1ull, 12345ull}) {
        const BitVec m = random_bits(sys.message_length(), 300 + counter);
        const CiphertextFrame frame = sys.encrypt(m, counter);
        CHECK(sys.parity_check().syndrome(sys.unpermute(frame.payload)) == sys.derive_z(counter));
    }
}

TEST_CASE("the syndrome vector is the leading keystream block") {
    const JointCipher& sys = toy_cipher();
    fgqc::Keystream ks(sys.secret_key().seed, 42);
    CHECK(sys.derive_z(42) == ks.bits(sys.block_dim()));
}

TEST_CASE("the perturbation lives in the pivot block at half weight") {
    const JointCipher& sys = big_cipher();
    const size_t n = sys.code_length(), p = sys.block_dim();
    double total = 0.0;
    for (uint64_t counter = 0; counter < 20; ++counter) {
        const BitVec e = sys.perturbation(counter);
        REQUIRE(e.size() == n);
        for (uint32_t s : e.support()) CHECK(s >= n - p);       // zero outside the pivot block
        CHECK(sys.parity_check().syndrome(e) == sys.derive_z(counter));
        const double w = double(e.weight());
        CHECK(w > 0.35 * double(p));
        CHECK(w < 0.65 * double(p));
        total += w;
    }
    const double mean = total / 20.0;
    CHECK(mean > 0.45 * double(p));
    CHECK(mean < 0.55 * double(p));
}

TEST_CASE("permute and unpermute are inverse to each other") {
    const JointCipher& sys = toy_cipher();
    const BitVec v = random_bits(sys.code_length(), 17);
    CHECK(sys.unpermute(sys.permute(v)) == v);
    CHECK(sys.permute(sys.unpermute(v)) == v);
    CHECK_THROWS_AS(sys.permute(BitVec(7)), fgqc::SizeMismatch);
}

TEST_CASE("a wrong counter or wrong key fails to decrypt") {
    const JointCipher& sys = toy_cipher();
    const BitVec m = random_bits(sys.message_length(), 9);
    CiphertextFrame frame = sys.encrypt(m, 7);
    frame.counter = 8;
    const auto wrong_counter = sys.decrypt(frame);
    CHECK(!(wrong_counter.has_value() && *wrong_counter == m));

    const JointCipher other(sample_key(eg(3, 3), 3, 13, 78));
    const auto wrong_key = other.decrypt(sys.encrypt(m, 7));
    CHECK(!(wrong_key.has_value() && *wrong_key == m));
}

TEST_CASE("a few flipped payload bits are absorbed by the decoder") {
    const JointCipher& sys = big_cipher();
    const BitVec m = random_bits(sys.message_length(), 21);
    CiphertextFrame frame = sys.encrypt(m, 2);
    std::mt19937_64 rng(22);
    for (int f = 0; f < 3; ++f) frame.payload.flip(rng() % frame.payload.size());
    const auto back = sys.decrypt(frame);
    REQUIRE(back.has_value());
    CHECK(*back == m);
}

TEST_CASE("noiseless soft decoding needs zero iterations") {
    const JointCipher& sys = toy_cipher();
    const BitVec m = random_bits(sys.message_length(), 33);
    const CiphertextFrame frame = sys.encrypt(m, 4);
    std::vector<double> llrs(sys.code_length());
    for (size_t i = 0; i < llrs.size(); ++i) llrs[i] = frame.payload.get(i) ? -30.0 : 30.0;
    const auto back = sys.decrypt_soft(llrs, 4);
    REQUIRE(back.has_value());
    CHECK(*back == m);

    // the same pipeline by hand: after unpermutation and sign repair the
    // hard decision is already a codeword
    auto y = sys.unpermute(std::span<const double>(llrs));
    for (uint32_t s : sys.perturbation(4).support()) y[s] = -y[s];
    const auto out = sys.decode_codeword(y);
    CHECK(out.converged);
    CHECK(out.iterations_used == 0);
}

TEST_CASE("the secure channel equals the plain channel under mapped noise") {
    // receiving c = P(x + e) through AWGN and undoing P and e on the LLRs is
    // exactly receiving x with the noise permuted and sign-flipped on the
    // support of e -- bit for bit, including floating point
    const JointCipher& sys = toy_cipher();
    const size_t n = sys.code_length();
    const BitVec m = random_bits(sys.message_length(), 55);
    const uint64_t counter = 6;

    const BitVec x = sys.encode(m);
    const BitVec e = sys.perturbation(counter);
    const CiphertextFrame frame = sys.encrypt(m, counter);
    REQUIRE(sys.permute(x ^ e) == frame.payload);

    std::mt19937_64 rng(56);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> noise(n);
    for (auto& v : noise) v = gauss(rng);
    const double sigma = 0.8, scale = 2.0 / (sigma * sigma);
    auto llr_of = [&](const BitVec& word, const std::vector<double>& nz) {
        std::vector<double> llrs(n);
        for (size_t i = 0; i < n; ++i)
            llrs[i] = scale * ((word.get(i) ? -1.0 : 1.0) + sigma * nz[i]);
        return llrs;
    };

    // secure side: receive the ciphertext, unpermute, repair signs
    auto secure = sys.unpermute(std::span<const double>(llr_of(frame.payload, noise)));
    for (uint32_t s : e.support()) secure[s] = -secure[s];

    // plain side: receive the bare codeword under the mapped noise
    const auto fwd = fgqc::expand_permutation(sys.secret_key(), n);
    std::vector<double> mapped(n);
    for (size_t i = 0; i < n; ++i) mapped[i] = (e.get(i) ? -1.0 : 1.0) * noise[fwd[i]];
    const auto plain = llr_of(x, mapped);

    REQUIRE(secure.size() == plain.size());
    for (size_t i = 0; i < n; ++i) CHECK(secure[i] == plain[i]);
}

TEST_CASE("frames serialize to the documented wire format") {
    CiphertextFrame frame;
    frame.counter = 0x0102030405060708ull;
    frame.payload = BitVec::from_string("10110100011");  // 11 bits
    const auto bytes = fgqc::frame_to_bytes(frame);
    REQUIRE(bytes.size() == 4 + 8 + 4 + 2);
    CHECK(bytes[0] == 'F');
    CHECK(bytes[3] == 'F');
    for (int i = 0; i < 8; ++i) CHECK(bytes[size_t(4 + i)] == i + 1);  // big-endian counter
    CHECK(bytes[12] == 0);
    CHECK(bytes[15] == 11);                // big-endian bit length
    CHECK(bytes[16] == 0b10110100);        // MSB-first payload bits
    CHECK(bytes[17] == 0b01100000);        // zero-padded tail

    size_t offset = 0;
    CHECK(fgqc::frame_from_bytes(bytes, offset) == frame);
    CHECK(offset == bytes.size());
}

TEST_CASE("frame streams parse sequentially and reject damage") {
    std::vector<uint8_t> stream;
    std::vector<CiphertextFrame> frames;
    for (uint64_t c = 0; c < 3; ++c) {
        frames.push_back({c, random_bits(78, 60 + c)});
        const auto bytes = fgqc::frame_to_bytes(frames.back());
        stream.insert(stream.end(), bytes.begin(), bytes.end());
    }
    size_t offset = 0;
    for (uint64_t c = 0; c < 3; ++c) CHECK(fgqc::frame_from_bytes(stream, offset) == frames[c]);
    CHECK(offset == stream.size());

    size_t bad = 0;
    CHECK_THROWS_AS(fgqc::frame_from_bytes(std::span<const uint8_t>(stream.data(), 10), bad),
                    fgqc::MalformedFrame);
    auto corrupt = stream;
    corrupt[0] = 'X';
    bad = 0;
    CHECK_THROWS_AS(fgqc::frame_from_bytes(corrupt, bad), fgqc::MalformedFrame);

    // a truncated final frame reports the offset where that frame starts
    const size_t frame_bytes = stream.size() / 3;
    size_t pos = 2 * frame_bytes;
    try {
        fgqc::frame_from_bytes(std::span<const uint8_t>(stream.data(), stream.size() - 1), pos);
        FAIL("expected MalformedFrame");
    } catch (const fgqc::MalformedFrame& err) {
        CHECK(std::string(err.what()).find("at byte offset " + std::to_string(2 * frame_bytes)) !=
              std::string::npos);
    }
}

TEST_CASE("byte streams split into padded blocks and join back") {
    for (size_t len : {size_t(0), size_t(1), size_t(12), size_t(13), size_t(26), size_t(100)}) {
        std::vector<uint8_t> data(len);
        std::mt19937_64 rng(70 + len);
        for (auto& b : data) b = uint8_t(rng());
        const auto blocks = fgqc::split_into_blocks(data, 52);
        REQUIRE(!blocks.empty());
        CHECK(blocks.size() == (8 * len + 1 + 51) / 52);
        for (const auto& b : blocks) CHECK(b.size() == 52);
        // the padding marker is the single 1 after the payload
        const size_t marker = 8 * len;
        CHECK(blocks[marker / 52].get(marker % 52));
        CHECK(fgqc::join_blocks(blocks) == data);
    }
}

TEST_CASE("join rejects streams without a valid padding marker") {
    CHECK_THROWS_AS(fgqc::join_blocks({}), fgqc::MalformedFrame);
    const std::vector<BitVec> all_zero(2, BitVec(52));
    CHECK_THROWS_AS(fgqc::join_blocks(all_zero), fgqc::MalformedFrame);
    BitVec odd(52);
    odd.set(3);  // marker would leave a 3-bit payload
    CHECK_THROWS_AS(fgqc::join_blocks({odd}), fgqc::MalformedFrame);
}

TEST_CASE("payloads of the wrong length are rejected") {
    const JointCipher& sys = toy_cipher();
    CiphertextFrame frame;
    frame.payload = BitVec(10);
    CHECK_THROWS_AS(sys.decrypt(frame), fgqc::MalformedFrame);
    CHECK_THROWS_AS(sys.decrypt_soft(std::vector<double>(10, 1.0), 0), fgqc::LengthMismatch);
    CHECK_THROWS_AS(sys.encrypt(BitVec(10), 0), fgqc::LengthMismatch);
}

}  // TEST_SUITE
