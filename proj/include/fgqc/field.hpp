#pragma once

#include <cstdint>
#include <vector>

namespace fgqc {

// GF(p^t) with elements packed as base-p digit vectors: the element with
// coordinates (c0, c1, ..., c_{t-1}) over the polynomial basis is the
// integer sum c_i * p^i, so 0 is the zero element and 1 the unit.
// Multiplication runs on log/antilog tables over a generator of verified
// order p^t - 1.
class Field {
  public:
    using Elem = uint32_t;

    // builds tables; throws NonPrimeCharacteristic / FieldTooLarge.
    // p^t is capped at 2^24.
    Field(uint32_t p, uint32_t t);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return t_; }
    uint32_t order() const { return order_; }  // p^t

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= group_order_) s -= group_order_;
        return exp_[s];
    }
    Elem inv(Elem a) const;  // DivisionByZero on 0
    Elem pow(Elem a, uint64_t e) const;

    Elem alpha() const { return exp_[1 % group_order_]; }
    Elem alpha_pow(uint64_t e) const { return exp_[e % group_order_]; }
    uint32_t log(Elem a) const;  // DivisionByZero on 0

    // multiplicative order of a nonzero element
    uint32_t element_order(Elem a) const;

    // the copy of GF(small_order) inside this field: {0} followed by the
    // powers of beta = alpha^((order-1)/(small_order-1)).  Requires
    // small_order - 1 to divide order - 1; throws NotASubfield otherwise.
    std::vector<Elem> subfield(uint32_t small_order) const;

    // modulus coefficients, degree t monic, low-order first (t+1 entries)
    const std::vector<uint32_t>& modulus() const { return modulus_; }

  private:
    uint32_t p_, t_, order_, group_order_;
    std::vector<uint32_t> modulus_;
    std::vector<Elem> exp_;   // exp_[i] = alpha^i, i in [0, order-1)
    std::vector<uint32_t> log_;  // defined for nonzero elements

    Elem mul_by_alpha(Elem a) const;  // table-free, used to build exp_
};

// true if q = p^s for prime p; outputs p and s
bool prime_power(uint32_t q, uint32_t& p, uint32_t& s);

}  // namespace fgqc
