#pragma once

/**
 * @file squarefree.hpp
 * @brief Square-free decomposition: Yun in characteristic zero, Musser with
 *        p-th root descent over finite fields.
 */

#include <stdexcept>
#include <utility>

#include "../factors.hpp"
#include "gcd.hpp"

namespace rings {

template <class D>
using UniFactors = FactorDecomposition<UniPoly<typename D::Elem>, typename D::Elem>;

namespace uni {

namespace detail {

template <class D>
Poly<D> exact_quotient(const D& d, const Poly<D>& a, const Poly<D>& b) {
    auto q = divide_exact(d, a, b);
    if (!q) throw AlgorithmFailure("inexact polynomial division");
    return std::move(*q);
}

/// Yun's algorithm on a canonical (monic or primitive) f.
template <class D>
void yun(const D& d, const Poly<D>& f, UniFactors<D>& out) {
    Poly<D> df = derivative(d, f);
    Poly<D> a = gcd(d, f, df);
    Poly<D> b = exact_quotient(d, f, a);
    Poly<D> c = exact_quotient(d, df, a);
    unsigned i = 1;
    while (b.degree() > 0) {
        Poly<D> dd = sub(d, c, derivative(d, b));
        Poly<D> g = dd.is_zero() ? canonical(d, b) : gcd(d, b, dd);
        if (g.degree() > 0) out.add(g, i);
        b = exact_quotient(d, b, g);
        c = dd.is_zero() ? dd : exact_quotient(d, dd, g);
        ++i;
    }
}

template <class D>
Poly<D> pth_root_poly(const D& d, const Poly<D>& f, unsigned long p) {
    Poly<D> r;
    for (std::size_t i = 0; i < f.c.size(); i += p) r.c.push_back(d.pth_root(f.c[i]));
    normalize(d, r);
    return r;
}

/// Musser's algorithm for a monic f over a finite field.
template <class D>
void musser(const D& d, const Poly<D>& f, unsigned mult, UniFactors<D>& out) {
    unsigned long p = mpz_get_ui(d.characteristic().get_mpz_t());
    Poly<D> c = gcd(d, f, derivative(d, f));
    Poly<D> w = exact_quotient(d, f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly<D> y = gcd(d, w, c);
        Poly<D> z = exact_quotient(d, w, y);
        if (z.degree() > 0) out.add(z, i * mult);
        ++i;
        w = std::move(y);
        c = exact_quotient(d, c, w);
    }
    if (c.degree() > 0) musser(d, pth_root_poly(d, c, p), mult * static_cast<unsigned>(p), out);
}

template <class D>
void sort_by_exponent(UniFactors<D>& r) {
    r.sort([](const Poly<D>& a, unsigned ea, const Poly<D>& b, unsigned eb) {
        return ea != eb ? ea < eb : a.degree() < b.degree();
    });
}

}  // namespace detail

/// Square-free decomposition: unit * prod f_i^i with pairwise coprime,
/// square-free canonical parts, sorted by multiplicity.
template <class D>
UniFactors<D> squarefree(const D& d, const Poly<D>& f) {
    if (f.is_zero()) throw ArithmeticError("square-free decomposition of zero");
    UniFactors<D> out;
    Poly<D> g;
    if constexpr (D::is_field) {
        out.unit = f.lc();
        g = monic(d, f);
    } else {
        auto c = content(d, f);
        g = divide_scalar(d, f, c);
        auto u = d.normalizer(g.lc());
        out.unit = d.is_one(u) ? c : *d.divide_exact(c, u);
        g = scale(d, g, u);
    }
    if (g.degree() <= 0) return out;
    if constexpr (FiniteFieldDomain<D>) {
        detail::musser(d, g, 1, out);
    } else {
        detail::yun(d, g, out);
    }
    detail::sort_by_exponent<D>(out);
    return out;
}

template <class D>
bool is_squarefree(const D& d, const Poly<D>& f) {
    if (f.degree() <= 0) return true;
    return gcd(d, f, derivative(d, f)).degree() == 0;
}

}  // namespace uni
}  // namespace rings
