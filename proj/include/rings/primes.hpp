#pragma once

/**
 * @file primes.hpp
 * @brief Primality testing, integer factorization and prime generation.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "modarith.hpp"

namespace rings {

/// Primes <= limit, ascending (odd-only sieve of Eratosthenes).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    out.push_back(2);
    std::uint64_t n = (limit - 1) / 2;  // index i <-> 2i+1, i >= 1
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (composite[i]) continue;
        std::uint64_t p = 2 * i + 1;
        out.push_back(p);
        for (std::uint64_t j = (p * p - 1) / 2; j <= n && p * p <= limit; j += p) composite[j] = true;
    }
    return out;
}

namespace detail {

inline const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> table = primes_up_to(1 << 16);
    return table;
}

inline bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s,
                               const MachineModulus& m) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = mod_pow(a, d, m);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = m.mul(x, x);
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace detail

/// Deterministic for all 64-bit n.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : bases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    MachineModulus m(n);
    for (std::uint64_t a : bases)
        if (!detail::miller_rabin_round(n, a, d, s, m)) return false;
    return true;
}

/// Deterministic below 2^64, Miller-Rabin with `rounds` random bases above.
inline bool is_prime(const Integer& n, unsigned rounds = 40, std::uint64_t seed = 0x5eed) {
    if (sgn(n) <= 0) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    for (std::uint64_t p : detail::small_primes()) {
        if (p > 1000) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer nm1 = n - 1;
    Integer d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    Integer x;
    for (unsigned round = 0; round < rounds; ++round) {
        Integer a = round == 0 ? Integer(2) : Integer(rng.get_z_range(n - 3) + 2);
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == nm1) { witness = false; break; }
            if (x == 1) break;
        }
        if (witness) return false;
    }
    return true;
}

/// Smallest prime strictly greater than n.
inline std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) return 2;
    std::uint64_t c = n + 1;
    if (c > 2 && (c & 1) == 0) ++c;
    while (!is_prime(c)) {
        if (c > UINT64_MAX - 2) throw std::overflow_error("next_prime exceeds 64 bits");
        c += 2;
    }
    return c;
}

inline Integer next_prime(const Integer& n) {
    if (sgn(n) < 0) return 2;
    if (n < Integer("18446744073709551557")) return from_u64(next_prime(to_u64(n)));
    Integer c = n + 1;
    if (mpz_even_p(c.get_mpz_t())) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

/// Largest prime strictly below n (n > 2).
inline std::uint64_t prev_prime(std::uint64_t n) {
    if (n <= 2) throw std::invalid_argument("no prime below 2");
    std::uint64_t c = n - 1;
    if (c > 2 && (c & 1) == 0) --c;
    while (!is_prime(c)) c -= 2;
    return c;
}

namespace detail {

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

/// Brent's cycle detection with batched gcds; returns a nontrivial divisor or 0.
inline std::uint64_t pollard_rho(std::uint64_t n, std::uint64_t c, std::uint64_t y0) {
    MachineModulus m(n);
    c %= n;
    auto f = [&](std::uint64_t x) { return m.add(m.mul(x, x), c); };
    std::uint64_t y = y0 % n, x = y, ys = y, g = 1, q = 1;
    const std::uint64_t batch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
                y = f(y);
                q = m.mul(q, x > y ? x - y : y - x);
            }
            g = gcd_u64(q, n);
        }
        if (r > (std::uint64_t(1) << 26)) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd_u64(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

inline Integer pollard_rho(const Integer& n, const Integer& c, const Integer& y0) {
    auto f = [&](const Integer& x) {
        Integer r = x * x + c;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        return r;
    };
    Integer y = y0 % n, x = y, ys = y, g = 1, q = 1, t;
    const unsigned long batch = 128;
    for (unsigned long r = 1; g == 1; r <<= 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        for (unsigned long k = 0; k < r && g == 1; k += batch) {
            ys = y;
            for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                y = f(y);
                t = abs(x - y);
                q = q * t;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            g = gcd(q, n);
        }
        if (r > (1ul << 22)) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

/// Pollard P-1 with smoothness bound `bound`; returns a nontrivial divisor or 0.
inline Integer pollard_p1(const Integer& n, std::uint64_t bound) {
    Integer a = 2, g;
    for (std::uint64_t p : small_primes()) {
        if (p > bound) break;
        std::uint64_t pk = p;
        while (pk <= bound / p) pk *= p;
        mpz_powm_ui(a.get_mpz_t(), a.get_mpz_t(), pk, n.get_mpz_t());
    }
    g = gcd(a - 1, n);
    if (g == 1 || g == n) return 0;
    return g;
}

inline void factor_into(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = 0;
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; d == 0; ++attempt) {
        std::uint64_t c = rng() | 1, y = rng();
        if (fits_u64(n)) {
            d = from_u64(pollard_rho(to_u64(n), c, y));
        } else {
            d = pollard_rho(n, from_u64(c), from_u64(y));
        }
        if (d == 0 && attempt % 4 == 3) d = pollard_p1(n, std::uint64_t(1) << (16 + std::min(attempt, 8u)));
        if (attempt > 64) throw std::runtime_error("integer factorization failed");
    }
    factor_into(d, out, seed + 1);
    factor_into(n / d, out, seed + 2);
}

}  // namespace detail

/// Prime factorization of n >= 2 as ascending (prime, exponent) pairs.
inline std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n, std::uint64_t seed = 1) {
    if (n < 2) throw std::invalid_argument("factor_integer requires n >= 2");
    std::map<Integer, unsigned> found;
    Integer m = n;
    for (std::uint64_t p : detail::small_primes()) {
        if (m == 1) break;
        if (Integer(from_u64(p)) * from_u64(p) > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++found[from_u64(p)];
        }
    }
    if (m != 1) detail::factor_into(m, found, seed);
    return {found.begin(), found.end()};
}

}  // namespace rings
