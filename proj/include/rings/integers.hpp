#pragma once

/**
 * @file integers.hpp
 * @brief The ring of integers Z over GMP.
 *
 * divrem truncates toward zero (remainder takes the dividend's sign).
 */

#include <optional>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "domain.hpp"
#include "errors.hpp"

namespace rings {

class IntegerRing {
public:
    using Elem = Integer;
    static constexpr bool is_field = false;
    static constexpr bool is_euclidean = true;

    /// Bound used by random(): elements uniform in [-bound, bound].
    explicit IntegerRing(long random_bound = 1000) : random_bound_(random_bound) {}

    bool is_finite() const { return false; }
    Integer characteristic() const { return 0; }
    std::optional<Integer> cardinality() const { return std::nullopt; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const { return v; }
    Elem from_integer(const Integer& v) const { return v; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    bool is_negative(const Elem& a) const { return sgn(a) < 0; }

    /// Unit u with u*a canonical (non-negative).
    Elem normalizer(const Elem& a) const { return sgn(a) < 0 ? -1 : 1; }

    Elem gcd(const Elem& a, const Elem& b) const { return rings::gcd(a, b); }

    std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const {
        if (sgn(b) == 0) throw ArithmeticError("division by zero");
        if (!divisible(a, b)) return std::nullopt;
        Elem q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }

    std::pair<Elem, Elem> divrem(const Elem& a, const Elem& b) const {
        if (sgn(b) == 0) throw ArithmeticError("division by zero");
        Elem q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {q, r};
    }

    Elem random(Rng& rng) const {
        std::uniform_int_distribution<long> dist(-random_bound_, random_bound_);
        return dist(rng);
    }

    std::string format(const Elem& a) const { return a.get_str(); }
    std::string describe() const { return "Z"; }

private:
    long random_bound_;
};

}  // namespace rings
