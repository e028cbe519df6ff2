#pragma once

/**
 * @file frac.hpp
 * @brief Field of fractions over a GCD domain; Q = Frac<IntegerRing>.
 *
 * Fractions are kept reduced (gcd(num, den) is a unit) with the
 * denominator canonical under the inner ring's normalizer.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "domain.hpp"
#include "errors.hpp"
#include "integers.hpp"

namespace rings {

template <class E>
struct Fraction {
    E num;
    E den;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

template <class D>
class Frac {
public:
    using Inner = D;
    using InnerElem = typename D::Elem;
    using Elem = Fraction<InnerElem>;
    static constexpr bool is_field = true;
    static constexpr bool is_euclidean = true;

    explicit Frac(D ring = D()) : ring_(std::move(ring)) {}

    const D& ring() const { return ring_; }

    bool is_finite() const { return false; }
    Integer characteristic() const { return ring_.characteristic(); }
    std::optional<Integer> cardinality() const { return std::nullopt; }

    Elem make(InnerElem num, InnerElem den) const {
        if (ring_.is_zero(den)) throw ArithmeticError("division by zero");
        if (ring_.is_zero(num)) return {ring_.zero(), ring_.one()};
        InnerElem g = ring_.gcd(num, den);
        if (!ring_.is_one(g)) {
            num = *ring_.divide_exact(num, g);
            den = *ring_.divide_exact(den, g);
        }
        return fix_unit(std::move(num), std::move(den));
    }

    Elem embed(InnerElem v) const { return {std::move(v), ring_.one()}; }

    Elem zero() const { return {ring_.zero(), ring_.one()}; }
    Elem one() const { return {ring_.one(), ring_.one()}; }
    Elem from_int(long v) const { return embed(ring_.from_int(v)); }
    Elem from_integer(const Integer& v) const { return embed(ring_.from_integer(v)); }

    Elem add(const Elem& a, const Elem& b) const {
        if (is_zero(a)) return b;
        if (is_zero(b)) return a;
        if (a.den == b.den) return make(ring_.add(a.num, b.num), a.den);
        return make(ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const { return {ring_.neg(a.num), a.den}; }

    Elem mul(const Elem& a, const Elem& b) const {
        if (is_zero(a) || is_zero(b)) return zero();
        InnerElem g1 = ring_.gcd(a.num, b.den), g2 = ring_.gcd(b.num, a.den);
        InnerElem an = ring_.is_one(g1) ? a.num : *ring_.divide_exact(a.num, g1);
        InnerElem bd = ring_.is_one(g1) ? b.den : *ring_.divide_exact(b.den, g1);
        InnerElem bn = ring_.is_one(g2) ? b.num : *ring_.divide_exact(b.num, g2);
        InnerElem ad = ring_.is_one(g2) ? a.den : *ring_.divide_exact(a.den, g2);
        return fix_unit(ring_.mul(an, bn), ring_.mul(ad, bd));
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw ArithmeticError("division by zero");
        return fix_unit(a.den, a.num);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return ring_.is_zero(a.num); }
    bool is_one(const Elem& a) const { return ring_.is_one(a.num) && ring_.is_one(a.den); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return !is_zero(a); }
    bool is_integral(const Elem& a) const { return ring_.is_one(a.den); }
    bool is_negative(const Elem& a) const {
        if constexpr (requires { ring_.is_negative(a.num); }) return ring_.is_negative(a.num);
        return false;
    }
    Elem normalizer(const Elem& a) const { return is_zero(a) ? one() : inv(a); }
    Elem gcd(const Elem& a, const Elem& b) const { return (is_zero(a) && is_zero(b)) ? zero() : one(); }
    std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const { return div(a, b); }
    std::pair<Elem, Elem> divrem(const Elem& a, const Elem& b) const { return {div(a, b), zero()}; }

    Elem random(Rng& rng) const {
        InnerElem den = ring_.random(rng);
        while (ring_.is_zero(den)) den = ring_.random(rng);
        return make(ring_.random(rng), den);
    }

    std::optional<Elem> symbol(const std::string& name) const {
        if constexpr (requires { ring_.symbol(name); }) {
            auto s = ring_.symbol(name);
            if (s) return embed(*s);
        }
        return std::nullopt;
    }

    std::string format(const Elem& a) const {
        std::string n = ring_.format(a.num);
        if (ring_.is_one(a.den)) return n;
        std::string d = ring_.format(a.den);
        if (needs_parens(n)) n = "(" + n + ")";
        if (needs_parens(d)) d = "(" + d + ")";
        return n + "/" + d;
    }

    std::string describe() const {
        if constexpr (std::is_same_v<D, IntegerRing>) return "Q";
        else return "Frac(" + ring_.describe() + ")";
    }

private:
    Elem fix_unit(InnerElem num, InnerElem den) const {
        if (ring_.is_zero(den)) throw ArithmeticError("division by zero");
        InnerElem u = ring_.normalizer(den);
        if (!ring_.is_one(u)) {
            num = ring_.mul(num, u);
            den = ring_.mul(den, u);
        }
        return {std::move(num), std::move(den)};
    }

    D ring_;
};

using Rationals = Frac<IntegerRing>;
using Rational = Fraction<Integer>;

template <class D>
struct is_frac : std::false_type {};
template <class D>
struct is_frac<Frac<D>> : std::true_type {};

template <class D>
inline constexpr bool is_rationals_v = std::is_same_v<D, Rationals>;

}  // namespace rings
