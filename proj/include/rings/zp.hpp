#pragma once

/**
 * @file zp.hpp
 * @brief Prime fields: Zp64 (machine residues) and ZpBig (GMP residues).
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "modarith.hpp"
#include "primes.hpp"

namespace rings {

class Zp64 {
public:
    using Elem = std::uint64_t;
    static constexpr bool is_field = true;
    static constexpr bool is_euclidean = true;

    explicit Zp64(std::uint64_t p, bool check_prime = true) : m_(p) {
        if (check_prime && !is_prime(p)) throw std::invalid_argument("composite modulus " + std::to_string(p));
        u128 sq = u128(p - 1) * (p - 1);
        u128 cap = ~u128(0) - p;
        std::uint64_t lim = static_cast<std::uint64_t>(std::min<u128>(cap / (sq ? sq : 1), u128(1) << 30));
        lazy_limit_ = lim == 0 ? 1 : lim;
    }

    const MachineModulus& modulus() const { return m_; }
    std::uint64_t p() const { return m_.value(); }

    bool is_finite() const { return true; }
    Integer characteristic() const { return rings::from_u64(m_.value()); }
    std::optional<Integer> cardinality() const { return characteristic(); }
    Integer order() const { return characteristic(); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        std::uint64_t mag = v >= 0 ? static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(-(v + 1)) + 1;
        Elem r = m_.reduce(mag);
        return v >= 0 ? r : m_.neg(r);
    }
    Elem from_integer(const Integer& v) const { return mod_u64(v, m_.value()); }
    Elem from_u64(std::uint64_t v) const { return m_.reduce(v); }

    Elem add(Elem a, Elem b) const { return m_.add(a, b); }
    Elem sub(Elem a, Elem b) const { return m_.sub(a, b); }
    Elem neg(Elem a) const { return m_.neg(a); }
    Elem mul(Elem a, Elem b) const { return m_.mul(a, b); }
    Elem inv(Elem a) const {
        if (a == 0) throw ArithmeticError("division by zero");
        return mod_inverse(a, m_);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool equal(Elem a, Elem b) const { return a == b; }
    bool is_unit(Elem a) const { return a != 0; }
    bool is_negative(Elem) const { return false; }
    Elem normalizer(Elem a) const { return a == 0 ? 1 : inv(a); }
    Elem gcd(Elem a, Elem b) const { return (a == 0 && b == 0) ? 0 : 1; }
    std::optional<Elem> divide_exact(Elem a, Elem b) const { return div(a, b); }
    std::pair<Elem, Elem> divrem(Elem a, Elem b) const { return {div(a, b), 0}; }
    Elem pth_root(Elem a) const { return a; }

    /// Number of products of residues that fit a 128-bit accumulator.
    std::uint64_t lazy_limit() const { return lazy_limit_; }
    Elem reduce128(u128 x) const { return m_.reduce128(x); }

    Elem random(Rng& rng) const { return m_.reduce(rng()); }
    Elem random_nonzero(Rng& rng) const {
        for (;;) {
            Elem e = random(rng);
            if (e) return e;
        }
    }

    std::string format(Elem a) const { return std::to_string(a); }
    std::string describe() const { return "Zp[" + std::to_string(m_.value()) + "]"; }

    friend bool operator==(const Zp64& a, const Zp64& b) { return a.m_ == b.m_; }

private:
    MachineModulus m_;
    std::uint64_t lazy_limit_;
};

class ZpBig {
public:
    using Elem = Integer;
    static constexpr bool is_field = true;
    static constexpr bool is_euclidean = true;

    explicit ZpBig(Integer p, bool check_prime = true) : p_(std::move(p)) {
        if (p_ < 2) throw std::invalid_argument("modulus must be at least 2");
        if (check_prime && !is_prime(p_)) throw std::invalid_argument("composite modulus " + p_.get_str());
    }

    const Integer& p() const { return p_; }
    bool is_finite() const { return true; }
    Integer characteristic() const { return p_; }
    std::optional<Integer> cardinality() const { return p_; }
    Integer order() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const { return mod_floor(Integer(v), p_); }
    Elem from_integer(const Integer& v) const { return mod_floor(v, p_); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem s = a - b;
        if (sgn(s) < 0) s += p_;
        return s;
    }
    Elem neg(const Elem& a) const { return sgn(a) == 0 ? Elem(0) : Elem(p_ - a); }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r = a * b;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r;
        if (sgn(a) == 0) throw ArithmeticError("division by zero");
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw NonInvertibleError("element is not invertible", rings::gcd(a, p_));
        return r;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return sgn(a) != 0; }
    bool is_negative(const Elem&) const { return false; }
    Elem normalizer(const Elem& a) const { return sgn(a) == 0 ? Elem(1) : inv(a); }
    Elem gcd(const Elem& a, const Elem& b) const { return (sgn(a) == 0 && sgn(b) == 0) ? 0 : 1; }
    std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const { return div(a, b); }
    std::pair<Elem, Elem> divrem(const Elem& a, const Elem& b) const { return {div(a, b), 0}; }
    Elem pth_root(const Elem& a) const { return a; }

    Elem random(Rng& rng) const {
        Integer r = 0;
        for (std::size_t bits = 0; bits < bit_length(p_) + 64; bits += 64) r = (r << 64) + rings::from_u64(rng());
        return mod_floor(r, p_);
    }

    std::string format(const Elem& a) const { return a.get_str(); }
    std::string describe() const { return "Zp[" + p_.get_str() + "]"; }

private:
    Integer p_;
};

}  // namespace rings
