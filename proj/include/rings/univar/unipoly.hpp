#pragma once

/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials and their basic arithmetic.
 *
 * A UniPoly stores coefficients in ascending degree order with no trailing
 * zeros; the zero polynomial is the empty vector (degree -1). Arithmetic is
 * provided by free functions in namespace `uni`, each taking the
 * coefficient domain first.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../domain.hpp"
#include "../errors.hpp"
#include "../modarith.hpp"

namespace rings {

template <class E>
struct UniPoly {
    std::vector<E> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<E> v) : c(std::move(v)) {}

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    std::size_t size() const { return c.size(); }
    const E& lc() const { return c.back(); }
    const E& operator[](std::size_t i) const { return c[i]; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

inline constexpr std::size_t kKaratsubaThreshold = 32;

namespace uni {

template <class D>
using Poly = UniPoly<typename D::Elem>;

template <class D>
void normalize(const D& d, Poly<D>& p) {
    while (!p.c.empty() && d.is_zero(p.c.back())) p.c.pop_back();
}

template <class D>
Poly<D> constant(const D& d, typename D::Elem v) {
    Poly<D> p;
    if (!d.is_zero(v)) p.c.push_back(std::move(v));
    return p;
}

template <class D>
Poly<D> monomial(const D& d, typename D::Elem v, std::size_t n) {
    Poly<D> p;
    if (d.is_zero(v)) return p;
    p.c.assign(n + 1, d.zero());
    p.c[n] = std::move(v);
    return p;
}

template <class D>
Poly<D> variable(const D& d) { return monomial(d, d.one(), 1); }

template <class D>
bool is_constant(const Poly<D>& p) { return p.c.size() <= 1; }

template <class D>
bool is_one(const D& d, const Poly<D>& p) { return p.c.size() == 1 && d.is_one(p.c[0]); }

template <class D>
typename D::Elem coeff(const D& d, const Poly<D>& p, std::size_t i) {
    return i < p.c.size() ? p.c[i] : d.zero();
}

template <class D>
Poly<D> add(const D& d, const Poly<D>& a, const Poly<D>& b) {
    const Poly<D>& lo = a.c.size() < b.c.size() ? a : b;
    const Poly<D>& hi = a.c.size() < b.c.size() ? b : a;
    Poly<D> r = hi;
    for (std::size_t i = 0; i < lo.c.size(); ++i) r.c[i] = d.add(r.c[i], lo.c[i]);
    normalize(d, r);
    return r;
}

template <class D>
Poly<D> sub(const D& d, const Poly<D>& a, const Poly<D>& b) {
    Poly<D> r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), d.zero());
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = d.sub(r.c[i], b.c[i]);
    normalize(d, r);
    return r;
}

template <class D>
Poly<D> neg(const D& d, const Poly<D>& a) {
    Poly<D> r = a;
    for (auto& v : r.c) v = d.neg(v);
    return r;
}

template <class D>
Poly<D> scale(const D& d, const Poly<D>& a, const typename D::Elem& s) {
    if (d.is_zero(s)) return {};
    Poly<D> r = a;
    for (auto& v : r.c) v = d.mul(v, s);
    normalize(d, r);
    return r;
}

/// a * x^k
template <class D>
Poly<D> shift(const D& d, const Poly<D>& a, std::size_t k) {
    if (a.is_zero()) return a;
    Poly<D> r;
    r.c.reserve(a.c.size() + k);
    r.c.assign(k, d.zero());
    r.c.insert(r.c.end(), a.c.begin(), a.c.end());
    return r;
}

/// a mod x^k
template <class D>
Poly<D> truncate(const D& d, const Poly<D>& a, std::size_t k) {
    Poly<D> r;
    r.c.assign(a.c.begin(), a.c.begin() + std::min(k, a.c.size()));
    normalize(d, r);
    return r;
}

/// Coefficients of a reversed as a polynomial of formal degree n.
template <class D>
Poly<D> reverse(const D& d, const Poly<D>& a, std::size_t n) {
    Poly<D> r;
    r.c.assign(n + 1, d.zero());
    for (std::size_t i = 0; i < a.c.size() && i <= n; ++i) r.c[n - i] = a.c[i];
    normalize(d, r);
    return r;
}

namespace detail {

template <class D>
std::vector<typename D::Elem> schoolbook(const D& d, const typename D::Elem* a, std::size_t n,
                                         const typename D::Elem* b, std::size_t m) {
    using E = typename D::Elem;
    if (n == 0 || m == 0) return {};
    if constexpr (requires { d.lazy_limit(); d.reduce128(u128(0)); }) {
        std::vector<u128> acc(n + m - 1, 0);
        std::uint64_t limit = d.lazy_limit();
        std::uint64_t pending = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            if (++pending > limit) {
                for (auto& v : acc) v = d.reduce128(v);
                pending = 1;
            }
            u128 ai = a[i];
            u128* row = acc.data() + i;
            for (std::size_t j = 0; j < m; ++j) row[j] += ai * b[j];
        }
        std::vector<E> out(n + m - 1);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = d.reduce128(acc[i]);
        return out;
    } else {
        std::vector<E> out(n + m - 1, d.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (d.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < m; ++j) out[i + j] = d.add(out[i + j], d.mul(a[i], b[j]));
        }
        return out;
    }
}

template <class D>
std::vector<typename D::Elem> karatsuba(const D& d, const typename D::Elem* a, std::size_t n,
                                        const typename D::Elem* b, std::size_t m) {
    using E = typename D::Elem;
    if (n == 0 || m == 0) return {};
    if (n < m) {
        std::swap(a, b);
        std::swap(n, m);
    }
    if (m < kKaratsubaThreshold) return schoolbook(d, a, n, b, m);
    std::size_t k = (n + 1) / 2;
    if (m <= k) {
        std::vector<E> out(n + m - 1, d.zero());
        for (std::size_t off = 0; off < n; off += m) {
            std::size_t len = std::min(m, n - off);
            auto part = karatsuba(d, a + off, len, b, m);
            for (std::size_t i = 0; i < part.size(); ++i) out[off + i] = d.add(out[off + i], part[i]);
        }
        return out;
    }
    auto z0 = karatsuba(d, a, k, b, k);
    auto z2 = karatsuba(d, a + k, n - k, b + k, m - k);
    std::vector<E> as(a, a + k), bs(b, b + k);
    for (std::size_t i = k; i < n; ++i) as[i - k] = d.add(as[i - k], a[i]);
    for (std::size_t i = k; i < m; ++i) bs[i - k] = d.add(bs[i - k], b[i]);
    auto z1 = karatsuba(d, as.data(), k, bs.data(), k);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = d.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = d.sub(z1[i], z2[i]);
    std::vector<E> out(n + m - 1, d.zero());
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * k] = d.add(out[i + 2 * k], z2[i]);
    for (std::size_t i = 0; i < z1.size() && i + k < out.size(); ++i) out[i + k] = d.add(out[i + k], z1[i]);
    return out;
}

}  // namespace detail

template <class D>
Poly<D> mul_schoolbook(const D& d, const Poly<D>& a, const Poly<D>& b) {
    Poly<D> r(detail::schoolbook(d, a.c.data(), a.c.size(), b.c.data(), b.c.size()));
    normalize(d, r);
    return r;
}

template <class D>
Poly<D> mul_karatsuba(const D& d, const Poly<D>& a, const Poly<D>& b) {
    Poly<D> r(detail::karatsuba(d, a.c.data(), a.c.size(), b.c.data(), b.c.size()));
    normalize(d, r);
    return r;
}

template <class D>
Poly<D> mul(const D& d, const Poly<D>& a, const Poly<D>& b) {
    if (std::min(a.c.size(), b.c.size()) < kKaratsubaThreshold) return mul_schoolbook(d, a, b);
    return mul_karatsuba(d, a, b);
}

template <class D>
Poly<D> pow(const D& d, Poly<D> base, std::uint64_t e) {
    Poly<D> r = constant(d, d.one());
    while (e) {
        if (e & 1) r = mul(d, r, base);
        e >>= 1;
        if (e) base = mul(d, base, base);
    }
    return r;
}

template <class D>
typename D::Elem evaluate(const D& d, const Poly<D>& p, const typename D::Elem& x) {
    typename D::Elem r = d.zero();
    for (std::size_t i = p.c.size(); i-- > 0;) r = d.add(d.mul(r, x), p.c[i]);
    return r;
}

template <class D>
Poly<D> derivative(const D& d, const Poly<D>& p) {
    Poly<D> r;
    if (p.c.size() <= 1) return r;
    r.c.resize(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i)
        r.c[i - 1] = d.mul(d.from_integer(Integer(static_cast<unsigned long>(i))), p.c[i]);
    normalize(d, r);
    return r;
}

/// p(q(x))
template <class D>
Poly<D> compose(const D& d, const Poly<D>& p, const Poly<D>& q) {
    Poly<D> r;
    for (std::size_t i = p.c.size(); i-- > 0;) r = add(d, mul(d, r, q), constant(d, p.c[i]));
    return r;
}

template <class D>
typename D::Elem leading_inverse(const D& d, const Poly<D>& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    if constexpr (D::is_field) {
        return d.inv(b.lc());
    } else {
        if (!d.is_unit(b.lc())) throw ArithmeticError("non-invertible leading coefficient");
        auto q = d.divide_exact(d.one(), b.lc());
        return *q;
    }
}

/// Classical long division; the leading coefficient of b must be a unit.
template <class D>
std::pair<Poly<D>, Poly<D>> divrem_classical(const D& d, const Poly<D>& a, const Poly<D>& b) {
    auto inv = leading_inverse(d, b);
    if (a.degree() < b.degree()) return {Poly<D>{}, a};
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
    std::vector<typename D::Elem> r = a.c;
    Poly<D> q;
    q.c.assign(dq + 1, d.zero());
    bool monic = d.is_one(b.lc());
    for (std::size_t i = dq + 1; i-- > 0;) {
        auto& top = r[i + db];
        if (d.is_zero(top)) continue;
        auto coef = monic ? top : d.mul(top, inv);
        for (std::size_t j = 0; j < db; ++j) r[i + j] = d.sub(r[i + j], d.mul(coef, b.c[j]));
        top = d.zero();
        q.c[i] = std::move(coef);
    }
    r.resize(db);
    Poly<D> rem(std::move(r));
    normalize(d, rem);
    normalize(d, q);
    return {std::move(q), std::move(rem)};
}

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class D>
std::pair<Poly<D>, Poly<D>> pseudo_divrem(const D& d, const Poly<D>& a, const Poly<D>& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<D>{}, a};
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
    Poly<D> r = a, q;
    q.c.assign(dq + 1, d.zero());
    const auto& l = b.lc();
    for (std::size_t i = dq + 1; i-- > 0;) {
        auto top = r.c.size() > i + db ? r.c[i + db] : d.zero();
        for (auto& v : q.c) v = d.mul(v, l);
        q.c[i] = top;
        for (auto& v : r.c) v = d.mul(v, l);
        if (!d.is_zero(top))
            for (std::size_t j = 0; j <= db; ++j) r.c[i + j] = d.sub(r.c[i + j], d.mul(top, b.c[j]));
        normalize(d, r);
    }
    normalize(d, q);
    return {q, r};
}

/// a / b when b divides a exactly (over rings with exact coefficient division).
template <class D>
std::optional<Poly<D>> divide_exact(const D& d, const Poly<D>& a, const Poly<D>& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (a.is_zero()) return Poly<D>{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
    std::vector<typename D::Elem> r = a.c;
    Poly<D> q;
    q.c.assign(dq + 1, d.zero());
    for (std::size_t i = dq + 1; i-- > 0;) {
        auto& top = r[i + db];
        if (d.is_zero(top)) continue;
        std::optional<typename D::Elem> coef;
        if constexpr (D::is_field) coef = d.div(top, b.lc());
        else coef = d.divide_exact(top, b.lc());
        if (!coef) return std::nullopt;
        for (std::size_t j = 0; j < db; ++j) r[i + j] = d.sub(r[i + j], d.mul(*coef, b.c[j]));
        top = d.zero();
        q.c[i] = std::move(*coef);
    }
    for (std::size_t j = 0; j < db; ++j)
        if (!d.is_zero(r[j])) return std::nullopt;
    normalize(d, q);
    return q;
}

template <class D>
Poly<D> monic(const D& d, const Poly<D>& a) {
    if (a.is_zero() || d.is_one(a.lc())) return a;
    return scale(d, a, d.inv(a.lc()));
}

/// gcd of the coefficients (GCD domains).
template <class D>
typename D::Elem content(const D& d, const Poly<D>& a) {
    typename D::Elem g = d.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        g = d.gcd(g, a.c[i]);
        if (d.is_one(g)) break;
    }
    return g;
}

template <class D>
Poly<D> divide_scalar(const D& d, const Poly<D>& a, const typename D::Elem& s) {
    Poly<D> r = a;
    for (auto& v : r.c) {
        auto q = d.divide_exact(v, s);
        if (!q) throw ArithmeticError("inexact scalar division");
        v = std::move(*q);
    }
    return r;
}

/// a / content(a), with the sign/unit of the leading coefficient normalized.
template <class D>
Poly<D> primitive_part(const D& d, const Poly<D>& a) {
    if (a.is_zero()) return a;
    auto c = content(d, a);
    Poly<D> r = d.is_one(c) ? a : divide_scalar(d, a, c);
    auto u = d.normalizer(r.lc());
    if (!d.is_one(u)) r = scale(d, r, u);
    return r;
}

/// Unit multiple making a canonical: monic over fields, positive lc otherwise.
template <class D>
Poly<D> canonical(const D& d, const Poly<D>& a) {
    if (a.is_zero()) return a;
    auto u = d.normalizer(a.lc());
    return d.is_one(u) ? a : scale(d, a, u);
}

}  // namespace uni
}  // namespace rings

namespace rings {
namespace uni {

/// Renders a term coefficient * var^exp; returns the text without its sign
/// and reports the sign separately.
template <class D>
std::string format_term(const D& d, const typename D::Elem& c, const std::string& monomial, bool& negative) {
    negative = false;
    typename D::Elem a = c;
    if constexpr (requires { d.is_negative(c); }) {
        if (d.is_negative(c)) {
            negative = true;
            a = d.neg(c);
        }
    }
    if (monomial.empty()) return d.format(a);
    if (d.is_one(a)) return monomial;
    std::string s = d.format(a);
    if (has_sum(s)) s = "(" + s + ")";
    return s + "*" + monomial;
}

/// Ascending-order rendering without spaces, e.g. "15+7*x+x^2".
template <class D>
std::string format(const D& d, const Poly<D>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (d.is_zero(p.c[i])) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        bool neg = false;
        std::string t = format_term(d, p.c[i], mono, neg);
        if (neg) out += "-";
        else if (!out.empty()) out += "+";
        out += t;
    }
    return out;
}

}  // namespace uni
}  // namespace rings
