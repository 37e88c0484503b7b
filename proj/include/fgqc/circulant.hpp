#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fgqc/bitvec.hpp"

namespace fgqc {

// p x p binary circulant identified with its first row, i.e. with a
// polynomial in GF(2)[x]/(x^p - 1): row r is the first row rotated right
// by r, and matrix product corresponds to polynomial product.
class Circulant {
  public:
    Circulant() = default;
    explicit Circulant(BitVec first_row) : row_(std::move(first_row)) {}
    static Circulant zero(size_t p) { return Circulant(BitVec(p)); }
    static Circulant identity(size_t p);

    size_t dim() const { return row_.size(); }
    const BitVec& first_row() const { return row_; }
    size_t weight() const { return row_.weight(); }
    bool is_zero() const { return !row_.any(); }

    bool operator==(const Circulant&) const = default;

    // polynomial product mod x^p - 1
    friend Circulant operator*(const Circulant& a, const Circulant& b);
    friend Circulant operator+(const Circulant& a, const Circulant& b) {
        return Circulant(a.row_ ^ b.row_);
    }

    // first row of the transposed matrix: index i -> (p - i) mod p
    Circulant transposed() const;

    // row vector (length p) times this matrix = polynomial product
    BitVec apply_row(const BitVec& v) const;
    // this matrix times column vector: v * transposed
    BitVec apply_col(const BitVec& v) const;

  private:
    BitVec row_;
};

// multiplicative inverse mod x^p - 1 via the extended Euclidean algorithm;
// empty when gcd(a, x^p - 1) != 1 (a singular block is a signal, not an error)
std::optional<Circulant> circ_inverse(const Circulant& a);

// H = [H_0 | H_1 | ... | H_{b-1}], one block row of p x p circulants.
// The designated invertible block (the pivot) sits last after key setup.
struct BlockRowParityCheck {
    std::vector<Circulant> blocks;

    size_t block_count() const { return blocks.size(); }
    size_t dim() const { return blocks.empty() ? 0 : blocks[0].dim(); }
    size_t code_length() const { return block_count() * dim(); }

    // H * v^T for a length-n row vector v, result length p
    BitVec syndrome(const BitVec& v) const;
};

// systematic generator G = [ I_k | C ] with C_i = (H_pivot^-1 H_i)^T for the
// non-pivot blocks in order; stored via the circulant first rows of the C_i.
struct QcGenerator {
    size_t p = 0;
    std::vector<Circulant> parity_blocks;  // one per message block

    size_t message_length() const { return p * parity_blocks.size(); }
    size_t code_length() const { return message_length() + p; }

    // m of length k -> codeword [m | parity] of length n
    BitVec encode(const BitVec& m) const;
};

// builds G from H assuming the last block is the pivot; throws
// PivotNotInvertible if it is singular.  Verifies H * G^T = 0 blockwise.
QcGenerator build_generator(const BlockRowParityCheck& h);

// canonical right inverse H^-1 = [0; ...; 0; H_pivot^-1] (an n x p block
// column); apply maps a length-p vector z to the length-n e with H e^T = z.
struct RightInverse {
    size_t block_count = 0;
    Circulant pivot_inverse;  // H_pivot^-1

    BitVec apply(const BitVec& z) const;
};
RightInverse right_inverse(const BlockRowParityCheck& h);

// no two rows of the expanded H share more than one common set position,
// i.e. the Tanner graph has no 4-cycles.  Works on the circulant difference
// multisets, so cost is O(b * rho^2 + p).
bool check_girth6(const BlockRowParityCheck& h);

}  // namespace fgqc
