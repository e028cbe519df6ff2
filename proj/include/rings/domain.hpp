#pragma once

/**
 * @file domain.hpp
 * @brief Concepts shared by all ring domains.
 *
 * A domain is a small immutable object describing a ring; elements are
 * plain values (`D::Elem`) and every operation goes through the domain:
 *
 *     Zp64 f(17);
 *     auto x = f.mul(f.from_int(3), f.from_int(6));   // 1
 *
 * Every domain provides zero/one/from_int/from_integer, add/sub/neg/mul,
 * is_zero/is_one, random, format, and the compile-time flags `is_field`
 * and `is_euclidean`. Fields add inv/div, GCD domains add gcd and
 * divide_exact, Euclidean domains add divrem.
 */

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "bigint.hpp"

namespace rings {

using Rng = std::mt19937_64;

template <class D>
concept RingDomain = requires(const D& d, const typename D::Elem& a, Rng& rng) {
    typename D::Elem;
    { d.zero() } -> std::convertible_to<typename D::Elem>;
    { d.one() } -> std::convertible_to<typename D::Elem>;
    { d.from_int(1L) } -> std::convertible_to<typename D::Elem>;
    { d.from_integer(Integer()) } -> std::convertible_to<typename D::Elem>;
    { d.add(a, a) } -> std::convertible_to<typename D::Elem>;
    { d.sub(a, a) } -> std::convertible_to<typename D::Elem>;
    { d.neg(a) } -> std::convertible_to<typename D::Elem>;
    { d.mul(a, a) } -> std::convertible_to<typename D::Elem>;
    { d.is_zero(a) } -> std::convertible_to<bool>;
    { d.is_one(a) } -> std::convertible_to<bool>;
    { d.random(rng) } -> std::convertible_to<typename D::Elem>;
    { d.format(a) } -> std::convertible_to<std::string>;
    { D::is_field } -> std::convertible_to<bool>;
    { D::is_euclidean } -> std::convertible_to<bool>;
};

template <class D>
concept FieldDomain = RingDomain<D> && D::is_field && requires(const D& d, const typename D::Elem& a) {
    { d.inv(a) } -> std::convertible_to<typename D::Elem>;
    { d.div(a, a) } -> std::convertible_to<typename D::Elem>;
};

template <class D>
concept GcdDomain = RingDomain<D> && requires(const D& d, const typename D::Elem& a) {
    { d.gcd(a, a) } -> std::convertible_to<typename D::Elem>;
    { d.divide_exact(a, a) } -> std::convertible_to<std::optional<typename D::Elem>>;
};

template <class D>
concept EuclideanDomain = GcdDomain<D> && D::is_euclidean && requires(const D& d, const typename D::Elem& a) {
    d.divrem(a, a);
};

/// Finite fields expose their cardinality as an Integer and a p-th root.
template <class D>
concept FiniteFieldDomain = FieldDomain<D> && requires(const D& d, const typename D::Elem& a) {
    { d.order() } -> std::convertible_to<Integer>;
    { d.pth_root(a) } -> std::convertible_to<typename D::Elem>;
};

template <RingDomain D>
typename D::Elem power(const D& d, typename D::Elem base, std::uint64_t e) {
    typename D::Elem r = d.one();
    while (e) {
        if (e & 1) r = d.mul(r, base);
        e >>= 1;
        if (e) base = d.mul(base, base);
    }
    return r;
}

template <RingDomain D>
typename D::Elem power(const D& d, typename D::Elem base, const Integer& e) {
    typename D::Elem r = d.one();
    for (std::size_t i = bit_length(e); i-- > 0;) {
        r = d.mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = d.mul(r, base);
    }
    return r;
}

/// True when a textual rendering needs parentheses to be used as a factor.
inline bool needs_parens(const std::string& s) {
    if (s.empty()) return false;
    bool digits = true, ident = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
        bool digit = c >= '0' && c <= '9';
        if (!digit) digits = false;
        if (!(alpha || (digit && i > 0))) ident = false;
    }
    return !(digits || ident);
}

/// True when a rendering contains a top-level sum, so it needs
/// parentheses as a coefficient in a product.
inline bool has_sum(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if ((c == '+' || c == '-') && depth == 0 && i > 0) return true;
    }
    return !s.empty() && s[0] == '-';
}

/// Deterministic total order on elements, used to sort factor lists.
template <class D>
bool elem_less(const D& d, const typename D::Elem& a, const typename D::Elem& b) {
    if constexpr (requires { a < b; }) return a < b;
    else return d.format(a) < d.format(b);
}

}  // namespace rings
