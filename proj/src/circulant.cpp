#include "fgqc/circulant.hpp"

#include <cassert>

#include "fgqc/errors.hpp"

namespace fgqc {

Circulant Circulant::identity(size_t p) {
    BitVec row(p);
    row.set(0);
    return Circulant(std::move(row));
}

Circulant operator*(const Circulant& a, const Circulant& b) {
    if (a.dim() != b.dim()) throw SizeMismatch("circulant dimensions differ");
    // XOR of rotations of the denser operand over the sparser support
    const BitVec& sparse = a.weight() <= b.weight() ? a.row_ : b.row_;
    const BitVec& dense = a.weight() <= b.weight() ? b.row_ : a.row_;
    BitVec acc(a.dim());
    for (uint32_t s : sparse.support()) acc ^= dense.rotated(s);
    return Circulant(std::move(acc));
}

Circulant Circulant::transposed() const {
    const size_t p = dim();
    BitVec out(p);
    for (uint32_t s : row_.support()) out.set(s == 0 ? 0 : uint32_t(p) - s);
    return Circulant(std::move(out));
}

BitVec Circulant::apply_row(const BitVec& v) const {
    if (v.size() != dim()) throw SizeMismatch("vector length does not match circulant dimension");
    BitVec acc(dim());
    for (uint32_t s : v.support()) acc ^= row_.rotated(s);
    return acc;
}

BitVec Circulant::apply_col(const BitVec& v) const {
    return transposed().apply_row(v);
}

namespace {

// dense GF(2)[x] polynomial with explicit degree tracking, packed words
struct Poly {
    std::vector<uint64_t> w;
    int deg = -1;  // -1 for the zero polynomial

    explicit Poly(size_t maxdeg) : w(maxdeg / 64 + 1, 0) {}

    bool bit(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    void refresh_deg(int hint) {
        deg = -1;
        for (int i = hint >> 6; i >= 0; --i) {
            if (w[i]) {
                deg = i * 64 + 63 - __builtin_clzll(w[i]);
                return;
            }
        }
    }

    // this ^= other << shift
    void add_shifted(const Poly& o, size_t shift) {
        size_t ws = shift >> 6, bs = shift & 63;
        int nw = (o.deg >> 6) + 1;
        for (int i = 0; i < nw; ++i) {
            uint64_t v = o.w[i];
            if (!v) continue;
            w[i + ws] ^= v << bs;
            if (bs && i + ws + 1 < w.size()) w[i + ws + 1] ^= v >> (64 - bs);
        }
        refresh_deg(std::max<int>(deg, o.deg + int(shift)));
    }
};

}  // namespace

std::optional<Circulant> circ_inverse(const Circulant& a) {
    const size_t p = a.dim();
    if (a.is_zero()) return std::nullopt;

    // extended Euclid on (x^p - 1, a): track only the cofactor of a.
    // invariants: r0 = ... + s0 * a, r1 = ... + s1 * a (mod x^p - 1)
    Poly r0(p + 1), r1(p + 1), s0(p + 1), s1(p + 1);
    r0.flip(p);
    r0.flip(0);  // x^p + 1
    r0.deg = int(p);
    for (uint32_t s : a.first_row().support()) r1.flip(s);
    r1.refresh_deg(int(p));
    s1.flip(0);
    s1.deg = 0;

    while (r1.deg > 0) {
        while (r0.deg >= r1.deg) {
            size_t shift = size_t(r0.deg - r1.deg);
            r0.add_shifted(r1, shift);
            s0.add_shifted(s1, shift);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    if (r1.deg != 0) return std::nullopt;  // gcd has positive degree (r1 became 0, gcd = r0)

    // r1 == 1, so s1 * a == 1 (mod x^p - 1); reduce s1 into the ring
    BitVec inv(p);
    for (int i = 0; i <= s1.deg; ++i)
        if (s1.bit(size_t(i))) inv.flip(size_t(i) % p);
    Circulant out{std::move(inv)};
    if (!((out * a) == Circulant::identity(p))) throw Error("inverse verification failed");
    return out;
}

BitVec BlockRowParityCheck::syndrome(const BitVec& v) const {
    const size_t p = dim();
    if (v.size() != code_length()) throw SizeMismatch("vector length does not match code length");
    BitVec s(p);
    for (size_t i = 0; i < blocks.size(); ++i) s ^= blocks[i].apply_col(v.slice(i * p, p));
    return s;
}

BitVec QcGenerator::encode(const BitVec& m) const {
    if (m.size() != message_length()) throw SizeMismatch("message length mismatch");
    BitVec out(code_length());
    out.paste(0, m);
    BitVec parity(p);
    for (size_t i = 0; i < parity_blocks.size(); ++i)
        parity ^= parity_blocks[i].apply_row(m.slice(i * p, p));
    out.paste(message_length(), parity);
    return out;
}

QcGenerator build_generator(const BlockRowParityCheck& h) {
    if (h.block_count() < 2) throw BadParameter("need at least two blocks for a systematic code");
    const size_t p = h.dim();
    auto pin = circ_inverse(h.blocks.back());
    if (!pin) throw PivotNotInvertible("last (pivot) block is singular");

    QcGenerator g;
    g.p = p;
    g.parity_blocks.reserve(h.block_count() - 1);
    for (size_t i = 0; i + 1 < h.block_count(); ++i) {
        Circulant c = (*pin * h.blocks[i]).transposed();
        // block identity behind H G^T = 0: H_pivot * C_i^T must equal H_i
        if (!(h.blocks.back() * c.transposed() == h.blocks[i]))
            throw Error("generator block identity failed");
        g.parity_blocks.push_back(std::move(c));
    }
    return g;
}

BitVec RightInverse::apply(const BitVec& z) const {
    const size_t p = pivot_inverse.dim();
    if (z.size() != p) throw SizeMismatch("syndrome length mismatch");
    BitVec e(p * block_count);
    e.paste(p * (block_count - 1), pivot_inverse.apply_col(z));
    return e;
}

RightInverse right_inverse(const BlockRowParityCheck& h) {
    auto pin = circ_inverse(h.blocks.back());
    if (!pin) throw PivotNotInvertible("last (pivot) block is singular");
    return RightInverse{h.block_count(), std::move(*pin)};
}

bool check_girth6(const BlockRowParityCheck& h) {
    const size_t p = h.dim();
    // rows r and r+d of the expanded H overlap in as many positions as there
    // are ordered support pairs (s, s') with s - s' == d, summed over blocks;
    // a repeated difference is exactly a 4-cycle.
    std::vector<uint32_t> count(p, 0);
    for (const Circulant& b : h.blocks) {
        auto sup = b.first_row().support();
        for (uint32_t s : sup)
            for (uint32_t t : sup) {
                if (s == t) continue;
                uint32_t d = (s + uint32_t(p) - t) % uint32_t(p);
                if (++count[d] > 1) return false;
            }
    }
    return true;
}

}  // namespace fgqc
