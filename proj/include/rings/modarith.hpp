#pragma once

/**
 * @file modarith.hpp
 * @brief Machine-word modular arithmetic with division-free reduction.
 *
 * Reduction of a 64-bit value multiplies by a precomputed reciprocal
 * m = ceil(2^(64+s) / p) (with an add-correction when m needs 65 bits).
 * Reduction of a 128-bit product is a 2-by-1 division by the normalized
 * modulus with a precomputed reciprocal (Moller-Granlund).
 */

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"

namespace rings {

using u128 = unsigned __int128;

class MachineModulus {
public:
    explicit MachineModulus(std::uint64_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("modulus must be at least 2");
        unsigned floor_log = 63 - static_cast<unsigned>(std::countl_zero(p));
        if ((p & (p - 1)) == 0) {
            magic_ = 0;
            shift_ = floor_log;
            add_ = false;
        } else {
            u128 num = u128(1) << (64 + floor_log);
            std::uint64_t m = static_cast<std::uint64_t>(num / p);
            std::uint64_t rem = static_cast<std::uint64_t>(num % p);
            if (p - rem < (std::uint64_t(1) << floor_log)) {
                add_ = false;
            } else {
                m += m;
                std::uint64_t twice = rem + rem;
                if (twice >= p || twice < rem) m += 1;
                add_ = true;
            }
            magic_ = m + 1;
            shift_ = floor_log;
        }
        norm_ = static_cast<unsigned>(std::countl_zero(p));
        d_ = p << norm_;
        u128 numer = (u128(~d_) << 64) | ~std::uint64_t(0);
        recip_ = static_cast<std::uint64_t>(numer / d_);
    }

    std::uint64_t value() const noexcept { return p_; }
    std::uint64_t magic() const noexcept { return magic_; }
    unsigned shift() const noexcept { return shift_; }
    bool add_flag() const noexcept { return add_; }

    std::uint64_t quotient(std::uint64_t a) const noexcept {
        if (magic_ == 0) return a >> shift_;
        std::uint64_t q = static_cast<std::uint64_t>((u128(magic_) * a) >> 64);
        if (add_) return (((a - q) >> 1) + q) >> shift_;
        return q >> shift_;
    }

    std::uint64_t reduce(std::uint64_t a) const noexcept { return a - quotient(a) * p_; }

    /// x mod p for any 128-bit x.
    std::uint64_t reduce128(u128 x) const noexcept {
        std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
        if (hi >= p_) hi = reduce(hi);
        return reduce_hi_lt_p(hi, static_cast<std::uint64_t>(x));
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        assert(a < p_ && b < p_);
        u128 x = u128(a) * b;
        return reduce_hi_lt_p(static_cast<std::uint64_t>(x >> 64), static_cast<std::uint64_t>(x));
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        assert(a < p_ && b < p_);
        std::uint64_t s = a + b;
        return (s < a || s >= p_) ? s - p_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        assert(a < p_ && b < p_);
        return a >= b ? a - b : a + (p_ - b);
    }

    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    friend bool operator==(const MachineModulus& a, const MachineModulus& b) { return a.p_ == b.p_; }

private:
    std::uint64_t reduce_hi_lt_p(std::uint64_t hi, std::uint64_t lo) const noexcept {
        std::uint64_t u1 = hi, u0 = lo;
        if (norm_ != 0) {
            u1 = (hi << norm_) | (lo >> (64 - norm_));
            u0 = lo << norm_;
        }
        u128 q = u128(recip_) * u1;
        q += (u128(u1) << 64) | u0;
        std::uint64_t q1 = static_cast<std::uint64_t>(q >> 64) + 1;
        std::uint64_t q0 = static_cast<std::uint64_t>(q);
        std::uint64_t r = u0 - q1 * d_;
        if (r > q0) r += d_;
        if (r >= d_) r -= d_;
        return r >> norm_;
    }

    std::uint64_t p_;
    std::uint64_t magic_ = 0;
    unsigned shift_ = 0;
    bool add_ = false;
    unsigned norm_ = 0;
    std::uint64_t d_ = 0;
    std::uint64_t recip_ = 0;
};

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, const MachineModulus& m) { return m.add(a, b); }
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, const MachineModulus& m) { return m.sub(a, b); }
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, const MachineModulus& m) { return m.mul(a, b); }

inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, const MachineModulus& m) {
    std::uint64_t r = m.reduce(1), b = a;
    while (e) {
        if (e & 1) r = m.mul(r, b);
        b = m.mul(b, b);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_pow(std::uint64_t a, const Integer& e, const MachineModulus& m) {
    if (sgn(e) < 0) throw std::invalid_argument("negative exponent");
    if (fits_u64(e)) return mod_pow(a, to_u64(e), m);
    std::uint64_t r = m.reduce(1);
    for (std::size_t i = bit_length(e); i-- > 0;) {
        r = m.mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = m.mul(r, a);
    }
    return r;
}

/// Inverse of a modulo p; throws NonInvertibleError carrying gcd(a, p).
inline std::uint64_t mod_inverse(std::uint64_t a, const MachineModulus& m) {
    std::uint64_t p = m.value();
    std::uint64_t r0 = p, r1 = a % p;
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r2 = r0 - q * r1;
        __int128 s2 = s0 - static_cast<__int128>(q) * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw NonInvertibleError("element is not invertible", from_u64(r0));
    __int128 r = s0 % static_cast<__int128>(p);
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

struct CrtResult {
    Integer residue;
    Integer modulus;
};

/// x mod m1*m2 with x = r1 (m1), x = r2 (m2).
inline CrtResult crt_pair(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
    if (sgn(m1) <= 0 || sgn(m2) <= 0) throw std::invalid_argument("moduli must be positive");
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0 && m2 != 1)
        throw ArithmeticError("CRT moduli are not coprime");
    if (m2 == 1) inv = 0;
    Integer M = m1 * m2;
    Integer a = mod_floor(r1, m1);
    Integer t = mod_floor((r2 - a) * inv, m2);
    return {a + m1 * t, M};
}

/// Representative of x in [-M/2, M/2].
inline Integer symmetric_lift(const Integer& x, const Integer& M) { return symmetric_mod(x, M); }

/// Extends a residue R mod M by r mod p; minv = M^-1 mod p.
inline Integer crt_extend(const Integer& R, const Integer& M, std::uint64_t r, const MachineModulus& p,
                          std::uint64_t minv) {
    std::uint64_t rp = mod_u64(R, p.value());
    std::uint64_t t = p.mul(p.sub(r, rp), minv);
    return R + M * from_u64(t);
}

}  // namespace rings
