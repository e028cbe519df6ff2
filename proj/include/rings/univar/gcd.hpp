#pragma once

/**
 * @file gcd.hpp
 * @brief Univariate GCD: Euclid, Half-GCD, extended Euclid, subresultant
 *        PRS and Brown's small-primes algorithm over Z.
 */

#include <algorithm>
#include <array>
#include <type_traits>
#include <utility>

#include "../frac.hpp"
#include "../integers.hpp"
#include "../primes.hpp"
#include "../zp.hpp"
#include "newton.hpp"
#include "unipoly.hpp"

namespace rings {

inline constexpr int kHalfGcdThreshold = 180;

namespace uni {

template <class D>
Poly<D> gcd_euclid(const D& d, Poly<D> a, Poly<D> b) {
    while (!b.is_zero()) {
        Poly<D> r = rem(d, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(d, a);
}

namespace detail {

template <class D>
struct Mat2 {
    Poly<D> m00, m01, m10, m11;
};

template <class D>
Mat2<D> identity(const D& d) {
    return {constant(d, d.one()), Poly<D>{}, Poly<D>{}, constant(d, d.one())};
}

template <class D>
Mat2<D> mat_mul(const D& d, const Mat2<D>& x, const Mat2<D>& y) {
    return {add(d, mul(d, x.m00, y.m00), mul(d, x.m01, y.m10)),
            add(d, mul(d, x.m00, y.m01), mul(d, x.m01, y.m11)),
            add(d, mul(d, x.m10, y.m00), mul(d, x.m11, y.m10)),
            add(d, mul(d, x.m10, y.m01), mul(d, x.m11, y.m11))};
}

template <class D>
std::pair<Poly<D>, Poly<D>> apply(const D& d, const Mat2<D>& m, const Poly<D>& a, const Poly<D>& b) {
    return {add(d, mul(d, m.m00, a), mul(d, m.m01, b)), add(d, mul(d, m.m10, a), mul(d, m.m11, b))};
}

template <class D>
Poly<D> drop_low(const D& d, const Poly<D>& a, std::size_t k) {
    Poly<D> r;
    if (a.c.size() > k) r.c.assign(a.c.begin() + static_cast<std::ptrdiff_t>(k), a.c.end());
    normalize(d, r);
    return r;
}

template <class D>
Mat2<D> hgcd_euclid(const D& d, Poly<D> a, Poly<D> b, int m) {
    Mat2<D> r = identity(d);
    while (!b.is_zero() && b.degree() >= m) {
        auto [q, rem1] = divrem(d, a, b);
        a = std::move(b);
        b = std::move(rem1);
        Poly<D> n10 = sub(d, r.m00, mul(d, q, r.m10));
        Poly<D> n11 = sub(d, r.m01, mul(d, q, r.m11));
        r = {std::move(r.m10), std::move(r.m11), std::move(n10), std::move(n11)};
    }
    return r;
}

/// Matrix M with (a', b') = M (a, b), deg a' >= ceil(deg a / 2) > deg b'.
template <class D>
Mat2<D> hgcd(const D& d, const Poly<D>& a, const Poly<D>& b) {
    int m = (a.degree() + 1) / 2;
    if (b.degree() < m) return identity(d);
    if (a.degree() < 64) return hgcd_euclid(d, a, b, m);
    Mat2<D> r = hgcd(d, drop_low(d, a, m), drop_low(d, b, m));
    auto [a1, b1] = apply(d, r, a, b);
    if (b1.degree() < m) return r;
    auto [q, rem1] = divrem(d, a1, b1);
    Mat2<D> qm{Poly<D>{}, constant(d, d.one()), constant(d, d.one()), neg(d, q)};
    Mat2<D> qr = mat_mul(d, qm, r);
    if (rem1.is_zero()) return qr;
    int k = 2 * m - b1.degree();
    if (k < 0) return qr;
    Mat2<D> s = hgcd(d, drop_low(d, b1, k), drop_low(d, rem1, k));
    return mat_mul(d, s, qr);
}

}  // namespace detail

template <class D>
Poly<D> gcd_half(const D& d, Poly<D> a, Poly<D> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() < kHalfGcdThreshold) return gcd_euclid(d, std::move(a), std::move(b));
        auto m = detail::hgcd(d, a, b);
        std::tie(a, b) = detail::apply(d, m, a, b);
        if (b.is_zero()) break;
        Poly<D> r = rem(d, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(d, a);
}

template <class D>
struct XgcdResult {
    Poly<D> g, s, t;
};

/// g = s a + t b with g monic (fields).
template <class D>
XgcdResult<D> xgcd(const D& d, const Poly<D>& a, const Poly<D>& b) {
    Poly<D> r0 = a, r1 = b;
    Poly<D> s0 = constant(d, d.one()), s1, t0, t1 = constant(d, d.one());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(d, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<D> s2 = sub(d, s0, mul(d, q, s1));
        Poly<D> t2 = sub(d, t0, mul(d, q, t1));
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, constant(d, d.one()), Poly<D>{}};
    auto u = d.inv(r0.lc());
    return {scale(d, r0, u), scale(d, s0, u), scale(d, t0, u)};
}

/// Subresultant PRS over a GCD domain; result carries the content gcd.
template <class D>
Poly<D> gcd_subresultant(const D& d, Poly<D> a, Poly<D> b) {
    if (a.is_zero()) return canonical(d, b);
    if (b.is_zero()) return canonical(d, a);
    if (a.degree() < b.degree()) std::swap(a, b);
    auto ca = content(d, a), cb = content(d, b);
    auto c = d.gcd(ca, cb);
    Poly<D> A = divide_scalar(d, a, ca), B = divide_scalar(d, b, cb);
    auto g = d.one(), h = d.one();
    for (;;) {
        int delta = A.degree() - B.degree();
        Poly<D> R = pseudo_divrem(d, A, B).second;
        if (R.is_zero()) break;
        if (R.degree() == 0) {
            B = constant(d, d.one());
            break;
        }
        A = std::move(B);
        auto denom = d.mul(g, power(d, h, static_cast<std::uint64_t>(delta)));
        B = divide_scalar(d, R, denom);
        g = A.lc();
        if (delta == 0) {
            // h unchanged
        } else {
            auto num = power(d, g, static_cast<std::uint64_t>(delta));
            auto den = power(d, h, static_cast<std::uint64_t>(delta - 1));
            h = *d.divide_exact(num, den);
        }
    }
    Poly<D> p = primitive_part(d, B);
    return canonical(d, scale(d, p, c));
}

template <class D>
Poly<Zp64> reduce_mod(const D&, const Poly<IntegerRing>& a, const Zp64& f) {
    Poly<Zp64> r;
    r.c.reserve(a.c.size());
    for (const auto& v : a.c) r.c.push_back(f.from_integer(v));
    normalize(f, r);
    return r;
}

inline Poly<Zp64> reduce_mod(const Poly<IntegerRing>& a, const Zp64& f) {
    return reduce_mod(IntegerRing(), a, f);
}

inline Integer l2_norm_bound(const Poly<IntegerRing>& a) {
    Integer s = 0;
    for (const auto& v : a.c) s += v * v;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

/// Brown's modular GCD over Z with 62-bit primes.
inline Poly<IntegerRing> gcd_brown(const Poly<IntegerRing>& a, const Poly<IntegerRing>& b) {
    IntegerRing z;
    if (a.is_zero()) return canonical(z, b);
    if (b.is_zero()) return canonical(z, a);
    Integer ca = content(z, a), cb = content(z, b);
    Integer c = gcd(ca, cb);
    Poly<IntegerRing> A = divide_scalar(z, a, ca), B = divide_scalar(z, b, cb);
    if (A.degree() == 0 || B.degree() == 0) return constant(z, c);
    Integer gamma = gcd(A.lc(), B.lc());
    int dmin = std::min(A.degree(), B.degree());
    Integer bound = (Integer(1) << dmin) * std::min(l2_norm_bound(A), l2_norm_bound(B)) * abs(gamma);
    Integer M = 1;
    Poly<IntegerRing> G, prev;
    int gdeg = dmin + 1;
    std::uint64_t p = std::uint64_t(1) << 62;
    for (;;) {
        p = prev_prime(p);
        if (mpz_divisible_ui_p(gamma.get_mpz_t(), p)) continue;
        Zp64 f(p, false);
        auto Ap = reduce_mod(A, f), Bp = reduce_mod(B, f);
        auto gp = gcd_half(f, Ap, Bp);
        if (gp.degree() == 0) return constant(z, c);
        if (gp.degree() > gdeg) continue;
        gp = scale(f, gp, f.from_integer(gamma));
        if (gp.degree() < gdeg) {
            gdeg = gp.degree();
            G.c.assign(gp.c.size(), Integer(0));
            for (std::size_t i = 0; i < gp.c.size(); ++i) G.c[i] = from_u64(gp.c[i]);
            M = from_u64(p);
            prev = Poly<IntegerRing>{};
        } else {
            std::uint64_t minv = mod_inverse(mod_u64(M, p), f.modulus());
            for (std::size_t i = 0; i < gp.c.size(); ++i) G.c[i] = crt_extend(G.c[i], M, gp.c[i], f.modulus(), minv);
            M *= from_u64(p);
        }
        Poly<IntegerRing> H;
        H.c.resize(G.c.size());
        for (std::size_t i = 0; i < G.c.size(); ++i) H.c[i] = symmetric_mod(G.c[i], M);
        normalize(z, H);
        if (H == prev || M > 2 * bound) {
            Poly<IntegerRing> cand = primitive_part(z, H);
            if (divide_exact(z, A, cand) && divide_exact(z, B, cand)) return scale(z, cand, c);
        }
        prev = std::move(H);
    }
}

/// Clears denominators of a polynomial over Q; returns the integer polynomial.
inline Poly<IntegerRing> clear_denominators(const Poly<Rationals>& a) {
    Integer l = 1;
    for (const auto& v : a.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den.get_mpz_t());
    Poly<IntegerRing> r;
    r.c.reserve(a.c.size());
    for (const auto& v : a.c) r.c.push_back(v.num * (l / v.den));
    return r;
}

inline Poly<Rationals> to_rationals(const Poly<IntegerRing>& a) {
    Poly<Rationals> r;
    for (const auto& v : a.c) r.c.push_back(Rational{v, 1});
    return r;
}

/// Canonical gcd: monic over fields, content-including with positive lc over Z.
template <class D>
Poly<D> gcd(const D& d, const Poly<D>& a, const Poly<D>& b) {
    if constexpr (std::is_same_v<D, IntegerRing>) {
        return gcd_brown(a, b);
    } else if constexpr (is_rationals_v<D>) {
        if (a.is_zero() && b.is_zero()) return a;
        auto g = gcd_brown(clear_denominators(a), clear_denominators(b));
        return monic(d, to_rationals(g));
    } else if constexpr (D::is_field) {
        if (std::min(a.degree(), b.degree()) >= kHalfGcdThreshold) return gcd_half(d, a, b);
        return gcd_euclid(d, a, b);
    } else {
        return gcd_subresultant(d, a, b);
    }
}

}  // namespace uni
}  // namespace rings
