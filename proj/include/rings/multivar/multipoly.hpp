#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse distributed multivariate polynomials.
 *
 * A MultiPoly is a vector of (degree vector, coefficient) terms sorted in
 * descending monomial order with no zero coefficients. The polynomial
 * carries its variable count and monomial order; coefficient arithmetic
 * goes through the domain passed to every function in namespace `multi`:
 *
 *     Zp64 f(17);
 *     auto x = multi::variable(f, 2, 0), y = multi::variable(f, 2, 1);
 *     auto p = multi::mul(f, multi::add(f, x, y), multi::sub(f, x, y));  // x^2 - y^2
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "../domain.hpp"
#include "../errors.hpp"
#include "../univar/unipoly.hpp"
#include "monomial.hpp"

namespace rings {

template <class E>
struct Term {
    DegreeVector m;
    E c;
    friend bool operator==(const Term&, const Term&) = default;
};

template <class E>
struct MultiPoly {
    std::vector<Term<E>> terms;
    std::uint32_t nvars = 0;
    MonomialOrder order = MonomialOrder::GrevLex;

    MultiPoly() = default;
    MultiPoly(std::size_t n, MonomialOrder o) : nvars(static_cast<std::uint32_t>(n)), order(o) {}

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    const DegreeVector& lm() const { return terms.front().m; }
    const E& lc() const { return terms.front().c; }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].m.is_zero()); }

    int compare(const DegreeVector& a, const DegreeVector& b) const { return order_compare(a, b, order); }
    MultiPoly empty_like() const { return MultiPoly(nvars, order); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }
};

namespace multi {

template <class D>
using Poly = MultiPoly<typename D::Elem>;

template <class E>
void check_compatible(const MultiPoly<E>& a, const MultiPoly<E>& b) {
    if (a.nvars != b.nvars || a.order != b.order) throw std::invalid_argument("polynomials from different rings");
}

/// Sorts terms descending and merges equal monomials, dropping zeros.
template <class D>
void normalize(const D& d, Poly<D>& p) {
    auto& t = p.terms;
    std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) { return p.compare(a.m, b.m) > 0; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i + 1;
        auto c = std::move(t[i].c);
        while (j < t.size() && t[j].m == t[i].m) c = d.add(c, t[j++].c);
        if (!d.is_zero(c)) {
            if (w != i) t[w].m = std::move(t[i].m);
            t[w].c = std::move(c);
            ++w;
        }
        i = j;
    }
    t.resize(w);
}

template <class D>
Poly<D> constant(const D& d, std::size_t n, MonomialOrder o, typename D::Elem c) {
    Poly<D> p(n, o);
    if (!d.is_zero(c)) p.terms.push_back({DegreeVector(n), std::move(c)});
    return p;
}

template <class D>
Poly<D> monomial(const D& d, std::size_t n, MonomialOrder o, typename D::Elem c, DegreeVector m) {
    Poly<D> p(n, o);
    if (!d.is_zero(c)) p.terms.push_back({std::move(m), std::move(c)});
    return p;
}

template <class D>
Poly<D> variable(const D& d, std::size_t n, std::size_t i, MonomialOrder o = MonomialOrder::GrevLex) {
    DegreeVector m(n);
    m.set(i, 1);
    return monomial(d, n, o, d.one(), std::move(m));
}

template <class D>
Poly<D> add(const D& d, const Poly<D>& a, const Poly<D>& b) {
    check_compatible(a, b);
    Poly<D> r = a.empty_like();
    r.terms.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = a.compare(a.terms[i].m, b.terms[j].m);
        if (c > 0) r.terms.push_back(a.terms[i++]);
        else if (c < 0) r.terms.push_back(b.terms[j++]);
        else {
            auto s = d.add(a.terms[i].c, b.terms[j].c);
            if (!d.is_zero(s)) r.terms.push_back({a.terms[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    r.terms.insert(r.terms.end(), a.terms.begin() + static_cast<std::ptrdiff_t>(i), a.terms.end());
    r.terms.insert(r.terms.end(), b.terms.begin() + static_cast<std::ptrdiff_t>(j), b.terms.end());
    return r;
}

template <class D>
Poly<D> neg(const D& d, const Poly<D>& a) {
    Poly<D> r = a;
    for (auto& t : r.terms) t.c = d.neg(t.c);
    return r;
}

template <class D>
Poly<D> sub(const D& d, const Poly<D>& a, const Poly<D>& b) {
    check_compatible(a, b);
    Poly<D> r = a.empty_like();
    r.terms.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = a.compare(a.terms[i].m, b.terms[j].m);
        if (c > 0) r.terms.push_back(a.terms[i++]);
        else if (c < 0) {
            r.terms.push_back({b.terms[j].m, d.neg(b.terms[j].c)});
            ++j;
        } else {
            auto s = d.sub(a.terms[i].c, b.terms[j].c);
            if (!d.is_zero(s)) r.terms.push_back({a.terms[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    r.terms.insert(r.terms.end(), a.terms.begin() + static_cast<std::ptrdiff_t>(i), a.terms.end());
    for (; j < b.size(); ++j) r.terms.push_back({b.terms[j].m, d.neg(b.terms[j].c)});
    return r;
}

template <class D>
Poly<D> scale(const D& d, const Poly<D>& a, const typename D::Elem& s) {
    Poly<D> r = a.empty_like();
    if (d.is_zero(s)) return r;
    r.terms.reserve(a.size());
    for (const auto& t : a.terms) {
        auto c = d.mul(t.c, s);
        if (!d.is_zero(c)) r.terms.push_back({t.m, std::move(c)});
    }
    return r;
}

/// a * c * x^m; the order is preserved since orders are multiplicative.
template <class D>
Poly<D> mul_term(const D& d, const Poly<D>& a, const typename D::Elem& c, const DegreeVector& m) {
    Poly<D> r = a.empty_like();
    r.terms.reserve(a.size());
    for (const auto& t : a.terms) {
        auto v = d.mul(t.c, c);
        if (!d.is_zero(v)) r.terms.push_back({t.m + m, std::move(v)});
    }
    return r;
}

/// Direct pairwise accumulation; the reference path for mul.
template <class D>
Poly<D> mul_naive(const D& d, const Poly<D>& a, const Poly<D>& b) {
    check_compatible(a, b);
    Poly<D> r = a.empty_like();
    if (a.is_zero() || b.is_zero()) return r;
    std::unordered_map<DegreeVector, typename D::Elem, DegreeVectorHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) {
            auto m = s.m + t.m;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), d.mul(s.c, t.c));
            else it->second = d.add(it->second, d.mul(s.c, t.c));
        }
    r.terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!d.is_zero(c)) r.terms.push_back({m, std::move(c)});
    std::sort(r.terms.begin(), r.terms.end(), [&](const auto& x, const auto& y) { return r.compare(x.m, y.m) > 0; });
    return r;
}

template <class E>
std::vector<std::uint32_t> degrees(const MultiPoly<E>& a) {
    std::vector<std::uint32_t> r(a.nvars, 0);
    for (const auto& t : a.terms)
        for (std::size_t i = 0; i < a.nvars; ++i) r[i] = std::max(r[i], t.m[i]);
    return r;
}

template <class E>
int degree(const MultiPoly<E>& a, std::size_t var) {
    if (a.is_zero()) return -1;
    std::uint32_t r = 0;
    for (const auto& t : a.terms) r = std::max(r, t.m[var]);
    return static_cast<int>(r);
}

template <class E>
int total_degree(const MultiPoly<E>& a) {
    int r = -1;
    for (const auto& t : a.terms) r = std::max(r, static_cast<int>(t.m.total()));
    return r;
}

namespace detail {

/// Bit widths for packing products of a and b into 64-bit keys, or empty
/// when they do not fit.
template <class E>
std::vector<unsigned> kronecker_widths(const MultiPoly<E>& a, const MultiPoly<E>& b) {
    auto da = degrees(a), db = degrees(b);
    std::vector<unsigned> w(a.nvars);
    unsigned total = 0;
    for (std::size_t i = 0; i < a.nvars; ++i) {
        w[i] = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(da[i]) + db[i]));
        total += w[i];
    }
    if (total > 64) return {};
    return w;
}

inline std::uint64_t pack(const DegreeVector& m, const std::vector<unsigned>& w) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < w.size(); ++i) k = w[i] ? (k << w[i]) | m[i] : k;
    return k;
}

inline DegreeVector unpack(std::uint64_t k, const std::vector<unsigned>& w) {
    DegreeVector::Storage e(w.size(), 0);
    for (std::size_t i = w.size(); i-- > 0;) {
        if (!w[i]) continue;
        e[i] = static_cast<std::uint32_t>(k & ((std::uint64_t(1) << w[i]) - 1));
        k = w[i] == 64 ? 0 : k >> w[i];
    }
    return DegreeVector(std::move(e));
}

}  // namespace detail

/// Product through Kronecker keys when they fit in 64 bits, else mul_naive.
template <class D>
Poly<D> mul(const D& d, const Poly<D>& a, const Poly<D>& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return a.empty_like();
    if (a.size() == 1) return mul_term(d, b, a.lc(), a.lm());
    if (b.size() == 1) return mul_term(d, a, b.lc(), b.lm());
    auto w = detail::kronecker_widths(a, b);
    if (w.empty()) return mul_naive(d, a, b);
    std::vector<std::uint64_t> ka, kb;
    ka.reserve(a.size());
    kb.reserve(b.size());
    for (const auto& t : a.terms) ka.push_back(detail::pack(t.m, w));
    for (const auto& t : b.terms) kb.push_back(detail::pack(t.m, w));
    std::unordered_map<std::uint64_t, typename D::Elem> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t(1) << 22));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto [it, fresh] = acc.try_emplace(ka[i] + kb[j]);
            if (fresh) it->second = d.mul(a.terms[i].c, b.terms[j].c);
            else it->second = d.add(it->second, d.mul(a.terms[i].c, b.terms[j].c));
        }
    Poly<D> r = a.empty_like();
    r.terms.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (!d.is_zero(c)) r.terms.push_back({detail::unpack(k, w), std::move(c)});
    std::sort(r.terms.begin(), r.terms.end(), [&](const auto& x, const auto& y) { return r.compare(x.m, y.m) > 0; });
    return r;
}

template <class D>
Poly<D> pow(const D& d, Poly<D> base, std::uint64_t e) {
    Poly<D> r = constant(d, base.nvars, base.order, d.one());
    while (e) {
        if (e & 1) r = mul(d, r, base);
        e >>= 1;
        if (e) base = mul(d, base, base);
    }
    return r;
}

/// Same polynomial under another monomial order.
template <class D>
Poly<D> reorder(const D& d, const Poly<D>& a, MonomialOrder o) {
    if (a.order == o) return a;
    Poly<D> r = a;
    r.order = o;
    normalize(d, r);
    return r;
}

template <class D>
Poly<D> derivative(const D& d, const Poly<D>& a, std::size_t var) {
    Poly<D> r = a.empty_like();
    for (const auto& t : a.terms) {
        if (t.m[var] == 0) continue;
        auto c = d.mul(t.c, d.from_int(static_cast<long>(t.m[var])));
        if (d.is_zero(c)) continue;
        DegreeVector m = t.m;
        m.set(var, t.m[var] - 1);
        r.terms.push_back({std::move(m), std::move(c)});
    }
    normalize(d, r);
    return r;
}

/// Coefficient of x_var^k as a polynomial with x_var removed (exponent 0).
template <class D>
Poly<D> coefficient(const D& d, const Poly<D>& a, std::size_t var, std::uint32_t k) {
    (void)d;
    Poly<D> r = a.empty_like();
    for (const auto& t : a.terms)
        if (t.m[var] == k) {
            DegreeVector m = t.m;
            m.set(var, 0);
            r.terms.push_back({std::move(m), t.c});
        }
    return r;
}

/// Dense list of coefficients of a in x_var, each with x_var removed.
template <class D>
std::vector<Poly<D>> as_univariate(const D& d, const Poly<D>& a, std::size_t var) {
    (void)d;
    int deg = degree(a, var);
    std::vector<Poly<D>> r(static_cast<std::size_t>(std::max(deg + 1, 0)), a.empty_like());
    for (const auto& t : a.terms) {
        DegreeVector m = t.m;
        m.set(var, 0);
        r[t.m[var]].terms.push_back({std::move(m), t.c});
    }
    return r;
}

/// Inverse of as_univariate.
template <class D>
Poly<D> from_univariate(const D& d, const std::vector<Poly<D>>& c, std::size_t var, std::size_t n, MonomialOrder o) {
    Poly<D> r(n, o);
    for (std::size_t k = 0; k < c.size(); ++k)
        for (const auto& t : c[k].terms) {
            DegreeVector m = t.m;
            m.set(var, static_cast<std::uint32_t>(k));
            r.terms.push_back({std::move(m), t.c});
        }
    normalize(d, r);
    return r;
}

/// Leading coefficient with respect to x_var.
template <class D>
Poly<D> lc_in(const D& d, const Poly<D>& a, std::size_t var) {
    int k = degree(a, var);
    if (k < 0) return a.empty_like();
    return coefficient(d, a, var, static_cast<std::uint32_t>(k));
}

/// Univariate polynomial in x_var; other variables must be absent.
template <class D>
UniPoly<typename D::Elem> to_dense(const D& d, const Poly<D>& a, std::size_t var) {
    UniPoly<typename D::Elem> r;
    int deg = degree(a, var);
    if (deg < 0) return r;
    r.c.assign(static_cast<std::size_t>(deg) + 1, d.zero());
    for (const auto& t : a.terms) {
        if (t.m.total() != t.m[var]) throw std::invalid_argument("polynomial is not univariate");
        r.c[t.m[var]] = t.c;
    }
    return r;
}

template <class D>
Poly<D> from_dense(const D& d, const UniPoly<typename D::Elem>& u, std::size_t var, std::size_t n, MonomialOrder o) {
    Poly<D> r(n, o);
    for (std::size_t k = u.c.size(); k-- > 0;) {
        if (d.is_zero(u.c[k])) continue;
        DegreeVector m(n);
        m.set(var, static_cast<std::uint32_t>(k));
        r.terms.push_back({std::move(m), u.c[k]});
    }
    normalize(d, r);
    return r;
}

/// Largest monomial dividing every term.
template <class E>
DegreeVector monomial_content(const MultiPoly<E>& a) {
    if (a.is_zero()) return DegreeVector(a.nvars);
    DegreeVector g = a.terms[0].m;
    for (const auto& t : a.terms) g = DegreeVector::gcd(g, t.m);
    return g;
}

/// a / x^m for a monomial dividing every term.
template <class E>
MultiPoly<E> divide_monomial(const MultiPoly<E>& a, const DegreeVector& m) {
    MultiPoly<E> r = a;
    for (auto& t : r.terms) t.m = t.m - m;
    return r;
}

/// gcd of the coefficients (Z), or the leading coefficient (fields).
template <class D>
typename D::Elem coefficient_content(const D& d, const Poly<D>& a) {
    if (a.is_zero()) return d.zero();
    if constexpr (D::is_field) {
        return a.lc();
    } else {
        auto g = d.zero();
        for (const auto& t : a.terms) {
            g = d.gcd(g, t.c);
            if (d.is_one(g)) break;
        }
        if (d.is_negative(a.lc())) g = d.neg(g);
        return g;
    }
}

template <class D>
Poly<D> divide_scalar(const D& d, const Poly<D>& a, const typename D::Elem& s) {
    if (d.is_one(s)) return a;
    Poly<D> r = a;
    for (auto& t : r.terms) {
        auto q = d.divide_exact(t.c, s);
        if (!q) throw ArithmeticError("inexact scalar division");
        t.c = std::move(*q);
    }
    return r;
}

/// Unit multiple of a that is canonical: monic over fields, positive lc over Z.
template <class D>
Poly<D> canonical(const D& d, const Poly<D>& a) {
    if (a.is_zero()) return a;
    auto u = d.normalizer(a.lc());
    return d.is_one(u) ? a : scale(d, a, u);
}

template <class D>
Poly<D> primitive_part(const D& d, const Poly<D>& a) {
    if (a.is_zero()) return a;
    return divide_scalar(d, a, coefficient_content(d, a));
}

namespace detail {

template <class E>
struct HeapEntry {
    DegreeVector m;
    std::size_t i, j;
};

}  // namespace detail

/// Single-divisor division by a heap of quotient-divisor products.
/// With `exact`, returns nullopt as soon as a remainder term appears.
template <class D>
std::optional<std::pair<Poly<D>, Poly<D>>> divrem_heap(const D& d, const Poly<D>& a, const Poly<D>& b, bool exact) {
    check_compatible(a, b);
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    Poly<D> q = a.empty_like(), r = a.empty_like();
    if (a.is_zero()) return std::pair{q, r};
    if (exact) {
        auto da = degrees(a), db = degrees(b);
        for (std::size_t i = 0; i < da.size(); ++i)
            if (db[i] > da[i]) return std::nullopt;
    }
    using Entry = detail::HeapEntry<typename D::Elem>;
    auto less = [&](const Entry& x, const Entry& y) { return a.compare(x.m, y.m) < 0; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
    const auto& blm = b.lm();
    const auto& blc = b.lc();
    std::size_t ai = 0;
    for (;;) {
        const DegreeVector* top = nullptr;
        if (ai < a.size()) top = &a.terms[ai].m;
        if (!heap.empty() && (!top || a.compare(heap.top().m, *top) > 0)) top = &heap.top().m;
        if (!top) break;
        DegreeVector cur = *top;
        auto c = d.zero();
        if (ai < a.size() && a.terms[ai].m == cur) c = a.terms[ai++].c;
        while (!heap.empty() && heap.top().m == cur) {
            Entry e = heap.top();
            heap.pop();
            c = d.sub(c, d.mul(q.terms[e.i].c, b.terms[e.j].c));
            if (e.j + 1 < b.size()) heap.push({q.terms[e.i].m + b.terms[e.j + 1].m, e.i, e.j + 1});
        }
        if (d.is_zero(c)) continue;
        std::optional<typename D::Elem> qc;
        if (blm.divides(cur)) {
            if constexpr (D::is_field) qc = d.div(c, blc);
            else qc = d.divide_exact(c, blc);
        }
        if (!qc) {
            if (exact) return std::nullopt;
            r.terms.push_back({std::move(cur), std::move(c)});
            continue;
        }
        q.terms.push_back({cur - blm, std::move(*qc)});
        if (b.size() > 1) heap.push({q.terms.back().m + b.terms[1].m, q.size() - 1, 1});
    }
    return std::pair{std::move(q), std::move(r)};
}

template <class D>
std::optional<Poly<D>> divide_exact(const D& d, const Poly<D>& a, const Poly<D>& b) {
    auto r = divrem_heap(d, a, b, true);
    if (!r) return std::nullopt;
    return std::move(r->first);
}

template <class D>
bool divides(const D& d, const Poly<D>& b, const Poly<D>& a) {
    return divrem_heap(d, a, b, true).has_value();
}

/// Division by an ordered list of divisors: the first divisor whose
/// leading monomial divides the current leading term is used.
template <class D>
std::pair<std::vector<Poly<D>>, Poly<D>> divrem(const D& d, const Poly<D>& a, const std::vector<Poly<D>>& divs) {
    for (const auto& g : divs) {
        check_compatible(a, g);
        if (g.is_zero()) throw ArithmeticError("division by zero polynomial");
    }
    std::vector<Poly<D>> q(divs.size(), a.empty_like());
    Poly<D> r = a.empty_like();
    auto cmp = [&](const DegreeVector& x, const DegreeVector& y) { return a.compare(x, y) > 0; };
    std::map<DegreeVector, typename D::Elem, decltype(cmp)> work(cmp);
    for (const auto& t : a.terms) work.emplace(t.m, t.c);
    while (!work.empty()) {
        auto it = work.begin();
        DegreeVector m = it->first;
        auto c = std::move(it->second);
        work.erase(it);
        bool reduced = false;
        for (std::size_t k = 0; k < divs.size() && !reduced; ++k) {
            const auto& g = divs[k];
            if (!g.lm().divides(m)) continue;
            std::optional<typename D::Elem> qc;
            if constexpr (D::is_field) qc = d.div(c, g.lc());
            else qc = d.divide_exact(c, g.lc());
            if (!qc) continue;
            DegreeVector s = m - g.lm();
            for (std::size_t j = 1; j < g.size(); ++j) {
                auto v = d.neg(d.mul(*qc, g.terms[j].c));
                auto [pos, fresh] = work.try_emplace(g.terms[j].m + s, v);
                if (!fresh) {
                    pos->second = d.add(pos->second, v);
                    if (d.is_zero(pos->second)) work.erase(pos);
                }
            }
            q[k].terms.push_back({std::move(s), std::move(*qc)});
            reduced = true;
        }
        if (!reduced) r.terms.push_back({std::move(m), std::move(c)});
    }
    return {std::move(q), std::move(r)};
}

/// Renders c*x^a*y^b with descending terms joined by " + " / " - ".
template <class D>
std::string format(const D& d, const Poly<D>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms) {
        std::string mono;
        for (std::size_t i = 0; i < p.nvars; ++i) {
            if (t.m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
        }
        bool negative = false;
        std::string s = uni::format_term(d, t.c, mono, negative);
        if (out.empty()) out = negative ? "-" + s : s;
        else out += (negative ? " - " : " + ") + s;
    }
    return out;
}

}  // namespace multi
}  // namespace rings
