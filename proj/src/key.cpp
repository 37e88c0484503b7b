#include "fgqc/key.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <set>

#include "fgqc/errors.hpp"

namespace fgqc {

namespace {

constexpr char kKeyMagic[4] = {'F', 'G', 'Q', 'C'};

bool class_invertible(const CyclicClass& cls) {
    // invertibility only depends on the class: shifting multiplies the
    // polynomial by a unit x^s
    return circ_inverse(Circulant(cls.representative)).has_value();
}

}  // namespace

PermutationBlock PermutationBlock::identity(size_t l) {
    PermutationBlock p;
    p.map.resize(l);
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

PermutationBlock PermutationBlock::inverse() const {
    PermutationBlock r;
    r.map.resize(map.size());
    for (size_t i = 0; i < map.size(); ++i) r.map[map[i]] = uint32_t(i);
    return r;
}

uint64_t lehmer_bit_count(uint32_t l) {
    uint64_t bits = 0;
    for (uint32_t i = 0; i < l; ++i) bits += index_width(l - i);
    return bits;
}

std::vector<uint32_t> lehmer_encode(const PermutationBlock& perm) {
    const size_t l = perm.size();
    std::vector<uint32_t> items(l);
    std::iota(items.begin(), items.end(), 0);
    std::vector<uint32_t> digits(l);
    for (size_t i = 0; i < l; ++i) {
        auto it = std::find(items.begin(), items.end(), perm.map[i]);
        digits[i] = uint32_t(it - items.begin());
        items.erase(it);
    }
    return digits;
}

PermutationBlock lehmer_decode(const std::vector<uint32_t>& digits) {
    const size_t l = digits.size();
    std::vector<uint32_t> items(l);
    std::iota(items.begin(), items.end(), 0);
    PermutationBlock perm;
    perm.map.resize(l);
    for (size_t i = 0; i < l; ++i) {
        uint32_t d = digits[i];
        if (d >= items.size()) throw MalformedKey("permutation digit out of range");
        perm.map[i] = items[d];
        items.erase(items.begin() + d);
    }
    return perm;
}

KeySizeReport key_size_report(const GeometrySpec& spec, uint32_t block_count, uint32_t l) {
    uint64_t nc = class_count_of(spec);  // validates the spec
    if (block_count == 0 || block_count > nc) throw TooFewClasses("block count exceeds available classes");
    KeySizeReport r;
    r.matrix_bits = uint64_t(block_count) * index_width(nc) +
                    uint64_t(block_count - 1) * index_width(point_count_of(spec));
    r.permutation_bits = lehmer_bit_count(l);
    r.seed_bits = 128;
    r.total_bits = r.matrix_bits + r.permutation_bits + r.seed_bits;
    return r;
}

double log2_matrix_count(const GeometrySpec& spec, uint32_t block_count) {
    uint64_t nc = class_count_of(spec);
    if (block_count == 0 || block_count > nc) throw TooFewClasses("block count exceeds available classes");
    double bits = double(block_count - 1) * std::log2(double(point_count_of(spec)));
    for (uint32_t i = 0; i < block_count; ++i) bits += std::log2(double(nc - i));
    return bits;
}

SecretKey keygen(const GeometrySpec& spec, uint32_t block_count, uint32_t l, EntropySource& entropy) {
    Geometry geo(spec);
    const auto& classes = geo.cyclic_classes();
    const uint32_t nc = uint32_t(classes.size());
    const uint32_t p = geo.point_count();
    if (block_count == 0 || block_count > nc)
        throw TooFewClasses("geometry offers " + std::to_string(nc) + " classes, need " +
                            std::to_string(block_count));
    if (l == 0 || (uint64_t(block_count) * p) % l != 0)
        throw BadBlockLength("permutation block length must divide the code length");

    std::vector<int> invertible(nc, -1);  // lazy: -1 unknown, 0 no, 1 yes
    auto is_inv = [&](uint32_t id) {
        if (invertible[id] < 0) invertible[id] = class_invertible(classes[id]) ? 1 : 0;
        return invertible[id] == 1;
    };

    // sample an ordered set of distinct classes; accept when one is
    // invertible and rotate it to the back as the pivot
    std::vector<uint32_t> ids;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        ids.clear();
        std::set<uint32_t> used;
        while (ids.size() < block_count) {
            uint32_t id = uint32_t(entropy.below(nc));
            if (used.insert(id).second) ids.push_back(id);
        }
        for (size_t i = ids.size(); i-- > 0;) {
            if (is_inv(ids[i])) {
                std::rotate(ids.begin() + i, ids.begin() + i + 1, ids.end());
                found = true;
                break;
            }
        }
    }
    if (!found) {
        // exhaustive fallback: any invertible class anywhere?
        uint32_t pivot_id = nc;
        for (uint32_t id = 0; id < nc; ++id) {
            if (is_inv(id)) {
                pivot_id = id;
                break;
            }
        }
        if (pivot_id == nc)
            throw NoInvertibleBlock("no cyclic class yields an invertible circulant");
        ids.clear();
        std::set<uint32_t> used{pivot_id};
        while (ids.size() + 1 < block_count) {
            uint32_t id = uint32_t(entropy.below(nc));
            if (used.insert(id).second) ids.push_back(id);
        }
        ids.push_back(pivot_id);
    }

    SecretKey key;
    key.geometry = spec;
    key.block_count = block_count;
    key.class_ids = std::move(ids);
    key.shifts.assign(block_count, 0);
    for (uint32_t i = 1; i < block_count; ++i) key.shifts[i] = uint32_t(entropy.below(p));
    key.pivot = block_count - 1;

    key.perm.map.resize(l);
    std::iota(key.perm.map.begin(), key.perm.map.end(), 0);
    for (uint32_t i = l - 1; i > 0; --i)
        std::swap(key.perm.map[i], key.perm.map[entropy.below(uint64_t(i) + 1)]);

    key.seed = entropy.take_seed();
    return key;
}

std::vector<uint8_t> serialize_key(const SecretKey& key) {
    Geometry geo(key.geometry);
    const uint64_t nc = geo.class_count();
    const uint32_t p = geo.point_count();
    const uint32_t n0 = key.block_count;
    const uint32_t l = uint32_t(key.perm.size());
    if (key.shifts.empty() || key.shifts[0] != 0)
        throw BadParameter("first block must be unshifted");

    BitWriter w;
    w.put(key.geometry.kind == GeometryKind::Projective ? 1 : 0, 1);
    w.put(key.geometry.q, 8);
    w.put(key.geometry.m, 8);
    w.put(n0, 8);
    w.put(l, 16);
    w.put(key.pivot, index_width(n0));

    unsigned wc = index_width(nc), ws = index_width(p);
    for (uint32_t id : key.class_ids) w.put(id, wc);
    for (uint32_t i = 1; i < n0; ++i) w.put(key.shifts[i], ws);
    auto digits = lehmer_encode(key.perm);
    for (uint32_t i = 0; i < l; ++i) w.put(digits[i], index_width(l - i));
    w.put_bytes(key.seed.data(), key.seed.size());
    return w.take();
}

SecretKey deserialize_key(const std::vector<uint8_t>& bytes) {
    BitReader r(bytes.data(), bytes.size());
    SecretKey key;
    key.geometry.kind = r.get_bit() ? GeometryKind::Projective : GeometryKind::EuclideanNoOrigin;
    key.geometry.q = uint32_t(r.get(8));
    key.geometry.m = uint32_t(r.get(8));
    key.block_count = uint32_t(r.get(8));
    uint32_t l = uint32_t(r.get(16));
    if (key.block_count == 0) throw MalformedKey("zero blocks");
    key.pivot = uint32_t(r.get(index_width(key.block_count)));
    if (key.pivot >= key.block_count) throw MalformedKey("pivot index out of range");

    Geometry geo = [&] {
        try {
            return Geometry(key.geometry);
        } catch (const Error& e) {
            throw MalformedKey(std::string("bad geometry in key header: ") + e.what());
        }
    }();
    const uint64_t nc = geo.class_count();
    const uint32_t p = geo.point_count();
    if (key.block_count > nc) throw MalformedKey("more blocks than classes");
    if (l == 0 || (uint64_t(key.block_count) * p) % l != 0) throw MalformedKey("bad permutation block length");

    unsigned wc = index_width(nc), ws = index_width(p);
    key.class_ids.resize(key.block_count);
    std::set<uint32_t> seen;
    for (auto& id : key.class_ids) {
        id = uint32_t(r.get(wc));
        if (id >= nc) throw MalformedKey("class index out of range");
        if (!seen.insert(id).second) throw MalformedKey("repeated class index");
    }
    key.shifts.assign(key.block_count, 0);
    for (uint32_t i = 1; i < key.block_count; ++i) {
        key.shifts[i] = uint32_t(r.get(ws));
        if (key.shifts[i] >= p) throw MalformedKey("shift out of range");
    }
    std::vector<uint32_t> digits(l);
    for (uint32_t i = 0; i < l; ++i) digits[i] = uint32_t(r.get(index_width(l - i)));
    key.perm = lehmer_decode(digits);
    r.get_bytes(key.seed.data(), key.seed.size());
    if (r.bits_left() >= 8) throw MalformedKey("trailing data after key");
    while (r.bits_left() > 0)
        if (r.get_bit()) throw MalformedKey("nonzero padding");

    // the pivot must expand to an invertible block
    const auto& classes = geo.cyclic_classes();
    if (!circ_inverse(Circulant(classes[key.class_ids[key.pivot]].representative)))
        throw MalformedKey("pivot block is singular");
    return key;
}

void write_key_file(const SecretKey& key, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open key file for writing: " + path);
    out.write(kKeyMagic, 4);
    auto bytes = serialize_key(key);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw Error("short write to key file: " + path);
}

SecretKey read_key_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open key file: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kKeyMagic, 4) != 0)
        throw MalformedKey("missing key file magic");
    return deserialize_key({bytes.begin() + 4, bytes.end()});
}

BlockRowParityCheck expand_parity_check(const SecretKey& key, const Geometry& geo) {
    const auto& classes = geo.cyclic_classes();
    BlockRowParityCheck h;
    h.blocks.reserve(key.block_count);
    for (uint32_t i = 0; i < key.block_count; ++i) {
        if (key.class_ids[i] >= classes.size()) throw MalformedKey("class index out of range");
        h.blocks.emplace_back(shift_line(classes[key.class_ids[i]].representative, key.shifts[i]));
    }
    return h;
}

std::vector<uint32_t> expand_permutation(const SecretKey& key, size_t n) {
    const size_t l = key.perm.size();
    if (l == 0 || n % l != 0) throw BadBlockLength("permutation block must divide the vector length");
    std::vector<uint32_t> map(n);
    for (size_t g = 0; g < n / l; ++g)
        for (size_t i = 0; i < l; ++i) map[g * l + i] = uint32_t(g * l) + key.perm.map[i];
    return map;
}

std::vector<uint32_t> expand_permutation_inverse(const SecretKey& key, size_t n) {
    auto fwd = expand_permutation(key, n);
    std::vector<uint32_t> inv(n);
    for (size_t i = 0; i < n; ++i) inv[fwd[i]] = uint32_t(i);
    return inv;
}

}  // namespace fgqc
