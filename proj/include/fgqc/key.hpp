#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fgqc/circulant.hpp"
#include "fgqc/geometry.hpp"
#include "fgqc/keystream.hpp"

namespace fgqc {

// pi on a block of l positions, repeated down the diagonal to cover a
// length-n vector (l must divide n); map[i] is where position i goes
struct PermutationBlock {
    std::vector<uint32_t> map;

    size_t size() const { return map.size(); }
    static PermutationBlock identity(size_t l);
    PermutationBlock inverse() const;

    bool operator==(const PermutationBlock&) const = default;
};

struct SecretKey {
    GeometrySpec geometry;
    uint32_t block_count = 0;           // n0
    std::vector<uint32_t> class_ids;    // indices into the canonical class order
    std::vector<uint32_t> shifts;       // per block; shifts[0] == 0
    uint32_t pivot = 0;                 // index of the invertible block (kept last)
    PermutationBlock perm;
    std::array<uint8_t, 16> seed{};     // keystream seed

    bool operator==(const SecretKey&) const = default;
};

// key material sizes in bits, excluding the self-describing header
struct KeySizeReport {
    uint64_t matrix_bits = 0;       // classes + shifts
    uint64_t permutation_bits = 0;  // Lehmer code of pi
    uint64_t seed_bits = 0;
    uint64_t total_bits = 0;
};

KeySizeReport key_size_report(const GeometrySpec& spec, uint32_t block_count, uint32_t l);

// number of representable parity-check matrices: p^(n0-1) * Nc!/(Nc-n0)!
double log2_matrix_count(const GeometrySpec& spec, uint32_t block_count);

// Samples a key: n0 distinct classes (an invertible one moved last as the
// pivot), uniform shifts with the first block unshifted, a uniform block
// permutation, and a fresh keystream seed.  Throws TooFewClasses,
// BadBlockLength, or NoInvertibleBlock (after retries and an exhaustive
// scan; geometries whose lines have even weight always end up there).
SecretKey keygen(const GeometrySpec& spec, uint32_t block_count, uint32_t l, EntropySource& entropy);

// bit layout: header (kind 1, q 8, m 8, n0 8, l 16, pivot ceil(log2 n0)),
// then class ids, shifts for blocks 1..n0-1, Lehmer digits of pi, seed.
std::vector<uint8_t> serialize_key(const SecretKey& key);
SecretKey deserialize_key(const std::vector<uint8_t>& bytes);

// key files: magic "FGQC" + the serialized bit stream
void write_key_file(const SecretKey& key, const std::string& path);
SecretKey read_key_file(const std::string& path);

// expansion into working form
BlockRowParityCheck expand_parity_check(const SecretKey& key, const Geometry& geo);
std::vector<uint32_t> expand_permutation(const SecretKey& key, size_t n);         // position map
std::vector<uint32_t> expand_permutation_inverse(const SecretKey& key, size_t n);

// Lehmer (factorial-base) coding of a permutation; digit i is stored in
// ceil(log2(l-i)) bits, which totals l*ceil(log2 l) - 2^ceil(log2 l) + 1
std::vector<uint32_t> lehmer_encode(const PermutationBlock& perm);
PermutationBlock lehmer_decode(const std::vector<uint32_t>& digits);
uint64_t lehmer_bit_count(uint32_t l);

}  // namespace fgqc
