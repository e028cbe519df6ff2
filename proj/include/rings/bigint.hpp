#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integers (GMP) and small helpers around them.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rings {

using Integer = mpz_class;

inline Integer from_u64(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline Integer from_i64(std::int64_t v) {
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    Integer r = from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
    return -r;
}

inline bool fits_u64(const Integer& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

/// Low 64 bits of |v|.
inline std::uint64_t to_u64(const Integer& v) {
    std::uint64_t out = 0;
    if (sgn(v) == 0) return 0;
    std::size_t count = 0;
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
        mpz_export(&out, &count, -1, sizeof(out), 0, 0, v.get_mpz_t());
        return out;
    }
    Integer low = abs(v);
    mpz_fdiv_r_2exp(low.get_mpz_t(), low.get_mpz_t(), 64);
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, low.get_mpz_t());
    return out;
}

/// v mod m in [0, m) for m > 0.
inline std::uint64_t mod_u64(const Integer& v, std::uint64_t m) {
    Integer mm = from_u64(m);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    return to_u64(r);
}

inline Integer mod_floor(const Integer& v, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Representative of v mod m in [-(m-1)/2, m/2].
inline Integer symmetric_mod(const Integer& v, const Integer& m) {
    Integer r = mod_floor(v, m);
    Integer half = m >> 1;
    if (r > half) r -= m;
    return r;
}

inline std::size_t bit_length(const Integer& v) {
    if (sgn(v) == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline std::string to_string(const Integer& v) { return v.get_str(10); }

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divisible(const Integer& a, const Integer& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

}  // namespace rings
