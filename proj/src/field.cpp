#include "fgqc/field.hpp"

#include <array>
#include <cassert>

#include "fgqc/errors.hpp"

namespace fgqc {

namespace {

struct PrimitivePoly {
    uint32_t p;
    uint32_t t;
    std::array<uint32_t, 25> coeffs;  // low-order first, coeffs[t] == 1
};

// generated: smallest primitive polynomial per (p, t), coeffs low-order first
const PrimitivePoly kPrimitivePolys[] = {
    {2, 1, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 2, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 3, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 4, {1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 5, {1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 14, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 15, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 17, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {2, 18, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {2, 19, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
    {2, 20, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
    {2, 21, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
    {2, 22, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
    {2, 23, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
    {2, 24, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 1, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 2, {2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 3, {1, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 4, {2, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 5, {1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 6, {2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 7, {1, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 8, {2, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 10, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 11, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 12, {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 13, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 14, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 15, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 1, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 2, {2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 3, {2, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 4, {2, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 5, {2, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 6, {2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 7, {2, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 8, {3, 2, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 9, {3, 2, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 10, {3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 1, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 2, {3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 3, {2, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 4, {5, 3, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 5, {4, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 6, {5, 1, 3, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 7, {2, 6, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 8, {3, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 1, {3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 2, {7, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 3, {4, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 4, {2, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 5, {4, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 6, {8, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 1, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 2, {2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 3, {6, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 4, {2, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 5, {2, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 6, {2, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const PrimitivePoly* lookup_poly(uint32_t p, uint32_t t) {
    for (const auto& e : kPrimitivePolys)
        if (e.p == p && e.t == t) return &e;
    return nullptr;
}

}  // namespace

Field::Field(uint32_t p, uint32_t t) : p_(p), t_(t) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (t < 1) throw BadParameter("extension degree must be >= 1");
    uint64_t order = 1;
    for (uint32_t i = 0; i < t; ++i) {
        order *= p;
        if (order > (uint64_t(1) << 24)) throw FieldTooLarge("p^t exceeds 2^24");
    }
    order_ = uint32_t(order);
    group_order_ = order_ - 1;

    if (const PrimitivePoly* e = lookup_poly(p, t)) {
        modulus_.assign(e->coeffs.begin(), e->coeffs.begin() + t + 1);
    } else if (t == 1) {
        // x - g for the smallest primitive root g mod p
        for (uint32_t g = 1; g < p; ++g) {
            uint32_t ord = 1;
            uint64_t v = g;
            while (v != 1) {
                v = v * g % p;
                ++ord;
            }
            if (ord == group_order_) {
                modulus_ = {p - g, 1};
                break;
            }
        }
        if (modulus_.empty()) throw BadParameter("no primitive root found");  // unreachable for prime p
    } else {
        // characteristic outside the built-in table: search for a monic
        // primitive polynomial by trial table construction
        std::vector<uint32_t> cand(t + 1, 0);
        cand[t] = 1;
        for (uint64_t idx = 1; idx < order; ++idx) {
            uint64_t v = idx;
            for (uint32_t i = 0; i < t; ++i) {
                cand[i] = uint32_t(v % p);
                v /= p;
            }
            if (cand[0] == 0) continue;
            modulus_ = cand;
            exp_.assign(group_order_, 0);
            log_.assign(order_, UINT32_MAX);
            Elem e = 1;
            bool ok = true;
            for (uint32_t i = 0; i < group_order_; ++i) {
                if (log_[e] != UINT32_MAX) {
                    ok = false;
                    break;
                }
                exp_[i] = e;
                log_[e] = i;
                e = mul_by_alpha(e);
            }
            if (ok && e == 1) return;  // tables built, generator has full order
        }
        throw BadParameter("no primitive polynomial found");
    }

    // build log/antilog tables and verify the generator's order is p^t - 1
    exp_.assign(group_order_, 0);
    log_.assign(order_, UINT32_MAX);
    Elem e = 1;
    for (uint32_t i = 0; i < group_order_; ++i) {
        if (log_[e] != UINT32_MAX)
            throw BadParameter("generator order below p^t - 1; table polynomial not primitive");
        exp_[i] = e;
        log_[e] = i;
        e = mul_by_alpha(e);
    }
    if (e != 1) throw BadParameter("generator does not cycle back to 1");
}

Field::Elem Field::mul_by_alpha(Elem a) const {
    if (t_ == 1) {
        // alpha is the root g of x - g
        uint64_t g = p_ - modulus_[0];
        return Elem(uint64_t(a) * g % p_);
    }
    // multiply the coordinate polynomial by x, reduce by the monic modulus
    uint64_t shifted = uint64_t(a) * p_;
    uint32_t top = uint32_t(shifted / order_);  // overflow digit = coefficient of x^t
    if (top == 0) return Elem(shifted);
    uint32_t rem = uint32_t(shifted % order_);
    // subtract top * modulus (without its leading term), digit by digit
    uint32_t out = 0, scale = 1;
    for (uint32_t i = 0; i < t_; ++i) {
        uint32_t d = rem % p_;
        rem /= p_;
        uint32_t s = (d + p_ * p_ - top * modulus_[i] % p_) % p_;
        out += s * scale;
        scale *= p_;
    }
    return out;
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0, scale = 1;
    for (uint32_t i = 0; i < t_; ++i) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

Field::Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, scale = 1;
    for (uint32_t i = 0; i < t_; ++i) {
        uint32_t d = a % p_;
        out += (d ? p_ - d : 0) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : group_order_ - l];
}

Field::Elem Field::pow(Elem a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[uint64_t(log_[a]) * (e % group_order_) % group_order_];
}

uint32_t Field::log(Elem a) const {
    if (a == 0) throw DivisionByZero("log of zero");
    return log_[a];
}

uint32_t Field::element_order(Elem a) const {
    if (a == 0) throw DivisionByZero("order of zero");
    uint32_t l = log_[a];
    if (l == 0) return 1;
    // order = group_order / gcd(group_order, l)
    uint32_t x = group_order_, y = l;
    while (y) {
        uint32_t r = x % y;
        x = y;
        y = r;
    }
    return group_order_ / x;
}

std::vector<Field::Elem> Field::subfield(uint32_t small_order) const {
    // GF(p^s) sits inside GF(p^t) exactly when s divides t; the divisibility
    // of the group orders alone would also admit impostors like 5 in GF(9)
    uint32_t sp = 0, ss = 0;
    if (!prime_power(small_order, sp, ss) || sp != p_ || t_ % ss != 0)
        throw NotASubfield("order " + std::to_string(small_order) + " does not embed in GF(" +
                           std::to_string(order_) + ")");
    uint32_t step = group_order_ / (small_order - 1);
    std::vector<Elem> elems;
    elems.reserve(small_order);
    elems.push_back(0);
    for (uint32_t i = 0; i < small_order - 1; ++i) elems.push_back(exp_[uint64_t(step) * i % group_order_]);
    return elems;
}

bool prime_power(uint32_t q, uint32_t& p, uint32_t& s) {
    if (q < 2) return false;
    uint32_t base = q;
    for (uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    // base is the smallest prime factor; q must be a pure power of it
    uint32_t e = 0;
    uint64_t v = 1;
    while (v < q) {
        v *= base;
        ++e;
    }
    if (v != q) return false;
    p = base;
    s = e;
    return true;
}

}  // namespace fgqc
