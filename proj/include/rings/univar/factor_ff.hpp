#pragma once

/**
 * @file factor_ff.hpp
 * @brief Factorization over finite fields: square-free, distinct-degree and
 *        Cantor-Zassenhaus equal-degree splitting.
 */

#include <algorithm>
#include <utility>
#include <vector>

#include "newton.hpp"
#include "squarefree.hpp"

namespace rings {
namespace uni {

/// a^e mod the divider of inv.
template <class D>
Poly<D> powmod(const D& d, Poly<D> a, const Integer& e, const InverseModMonomial<D>& inv) {
    Poly<D> r = constant(d, d.one());
    a = inv.rem(a);
    for (std::size_t i = bit_length(e); i-- > 0;) {
        r = inv.rem(mul(d, r, r));
        if (mpz_tstbit(e.get_mpz_t(), i)) r = inv.rem(mul(d, r, a));
    }
    return r;
}

template <class D>
Poly<D> random_below(const D& d, int n, Rng& rng) {
    Poly<D> p;
    for (int i = 0; i < n; ++i) p.c.push_back(d.random(rng));
    normalize(d, p);
    return p;
}

/// Distinct-degree factorization of a monic square-free f: pairs (product
/// of all irreducible factors of degree k, k).
template <class D>
std::vector<std::pair<Poly<D>, int>> distinct_degree(const D& d, Poly<D> f) {
    std::vector<std::pair<Poly<D>, int>> out;
    const Integer q = d.order();
    Poly<D> x = monomial(d, d.one(), 1);
    InverseModMonomial<D> inv(d, f);
    Poly<D> h = inv.rem(x);
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = powmod(d, h, q, inv);
        Poly<D> g = gcd(d, f, sub(d, h, x));
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = *divide_exact(d, f, g);
            inv = InverseModMonomial<D>(d, f);
            h = inv.rem(h);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

/// Splits a monic product of irreducibles of equal degree k.
template <class D>
void equal_degree(const D& d, const Poly<D>& f, int k, Rng& rng, std::vector<Poly<D>>& out) {
    int n = f.degree();
    if (n == k) {
        out.push_back(f);
        return;
    }
    const Integer q = d.order();
    const bool even = mpz_even_p(q.get_mpz_t());
    Integer qk = pow_ui(q, static_cast<unsigned long>(k));
    Integer e = (qk - 1) / 2;
    std::size_t trace_len = even ? bit_length(qk) - 1 : 0;
    InverseModMonomial<D> inv(d, f);
    for (;;) {
        Poly<D> a = random_below(d, n, rng);
        if (a.degree() <= 0) continue;
        Poly<D> g = gcd(d, f, a);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(d, g, k, rng, out);
            equal_degree(d, *divide_exact(d, f, g), k, rng, out);
            return;
        }
        Poly<D> b;
        if (even) {
            Poly<D> t = a;
            b = a;
            for (std::size_t j = 1; j < trace_len; ++j) {
                t = inv.rem(mul(d, t, t));
                b = add(d, b, t);
            }
        } else {
            b = sub(d, powmod(d, a, e, inv), constant(d, d.one()));
        }
        g = gcd(d, f, b);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(d, g, k, rng, out);
            equal_degree(d, *divide_exact(d, f, g), k, rng, out);
            return;
        }
    }
}

/// True when f has no factor of degree <= deg f / 2.
template <class D>
bool is_irreducible(const D& d, const Poly<D>& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    Poly<D> m = monic(d, f);
    const Integer q = d.order();
    Poly<D> x = monomial(d, d.one(), 1);
    InverseModMonomial<D> inv(d, m);
    Poly<D> h = inv.rem(x);
    for (int i = 1; 2 * i <= m.degree(); ++i) {
        h = powmod(d, h, q, inv);
        if (gcd(d, m, sub(d, h, x)).degree() > 0) return false;
    }
    return true;
}

/// Full factorization over a finite field: lc * prod f_i^e_i, f_i monic
/// irreducible, ordered by (degree, exponent).
template <class D>
UniFactors<D> factor_ff(const D& d, const Poly<D>& f, std::uint64_t seed = 0x5eed) {
    Rng rng(seed);
    UniFactors<D> sqf = squarefree(d, f);
    UniFactors<D> out;
    out.unit = sqf.unit;
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        for (auto& [g, k] : distinct_degree(d, sqf.factors[i])) {
            std::vector<Poly<D>> parts;
            equal_degree(d, g, k, rng, parts);
            for (auto& p : parts) out.add(std::move(p), sqf.exponents[i]);
        }
    }
    out.sort([&](const Poly<D>& a, unsigned ea, const Poly<D>& b, unsigned eb) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (ea != eb) return ea < eb;
        return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end(),
                                            [&](const auto& x, const auto& y) { return elem_less(d, x, y); });
    });
    return out;
}

}  // namespace uni
}  // namespace rings
