#pragma once

/**
 * @file squarefree.hpp
 * @brief Square-free decomposition of multivariate polynomials through gcds
 *        with partial derivatives, with p-th roots in positive characteristic.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "../errors.hpp"
#include "../factors.hpp"
#include "gcd.hpp"

namespace rings {

template <class D>
using MultiFactors = FactorDecomposition<MultiPoly<typename D::Elem>, typename D::Elem>;

namespace multi {

namespace detail {

template <class D>
Poly<D> exact_quotient(const D& d, const Poly<D>& a, const Poly<D>& b) {
    auto q = divide_exact(d, a, b);
    if (!q) throw AlgorithmFailure("inexact multivariate division");
    return std::move(*q);
}

/// g with g^p = a, for a whose exponents are all multiples of p.
template <class D>
Poly<D> pth_root(const D& d, const Poly<D>& a, std::uint64_t p) {
    Poly<D> r = a.empty_like();
    r.terms.reserve(a.size());
    for (const auto& t : a.terms) {
        DegreeVector m(a.nvars);
        for (std::size_t i = 0; i < a.nvars; ++i) m.set(i, static_cast<std::uint32_t>(t.m[i] / p));
        r.terms.push_back({std::move(m), d.pth_root(t.c)});
    }
    normalize(d, r);
    return r;
}

/// Musser's loop in one variable with a nonzero derivative; whatever is
/// left (factors free of that variable, p-th powers) is decomposed again.
template <class D>
void squarefree_rec(const D& d, const Poly<D>& f, unsigned mult, std::vector<std::pair<Poly<D>, unsigned>>& out) {
    if (f.is_constant()) return;
    Poly<D> df;
    bool found = false;
    for (auto v : present_vars(f)) {
        df = derivative(d, f, v);
        if (!df.is_zero()) {
            found = true;
            break;
        }
    }
    if (!found) {
        if constexpr (FiniteFieldDomain<D>) {
            std::uint64_t p = d.characteristic().get_ui();
            squarefree_rec(d, pth_root(d, f, p), mult * static_cast<unsigned>(p), out);
            return;
        } else {
            throw AlgorithmFailure("all partial derivatives vanish in characteristic zero");
        }
    }
    Poly<D> c = gcd(d, f, df);
    Poly<D> w = exact_quotient(d, f, c);
    for (unsigned k = 1; !w.is_constant(); ++k) {
        Poly<D> y = gcd(d, w, c);
        Poly<D> z = exact_quotient(d, w, y);
        if (!z.is_constant()) out.emplace_back(std::move(z), mult * k);
        c = exact_quotient(d, c, y);
        w = std::move(y);
    }
    squarefree_rec(d, c, mult, out);
}

/// unit with f = unit * prod factors^e, from the leading coefficients.
template <class D>
typename D::Elem unit_of(const D& d, const Poly<D>& f, const std::vector<Poly<D>>& factors,
                         const std::vector<unsigned>& exps) {
    auto lc = d.one();
    for (std::size_t i = 0; i < factors.size(); ++i) lc = d.mul(lc, power(d, factors[i].lc(), exps[i]));
    if constexpr (D::is_field) {
        return d.div(f.lc(), lc);
    } else {
        auto u = d.divide_exact(f.lc(), lc);
        if (!u) throw AlgorithmFailure("factor product does not match the input");
        return *u;
    }
}

}  // namespace detail

/// f = unit * prod g_i^e_i with g_i canonical, square-free, pairwise
/// coprime and ordered by multiplicity; monomial factors x_i^e are merged
/// into the part of multiplicity e.
template <class D>
MultiFactors<D> squarefree(const D& d, const Poly<D>& f) {
    if (f.is_zero()) throw ArithmeticError("square-free decomposition of zero");
    Poly<D> g = divide_scalar(d, f, coefficient_content(d, f));
    DegreeVector mc = monomial_content(g);
    g = divide_monomial(g, mc);
    std::vector<std::pair<Poly<D>, unsigned>> parts;
    for (std::size_t i = 0; i < f.nvars; ++i)
        if (mc[i]) parts.emplace_back(variable(d, f.nvars, i, f.order), mc[i]);
    detail::squarefree_rec(d, g, 1, parts);
    std::map<unsigned, Poly<D>> by;
    for (auto& [p, e] : parts) {
        auto it = by.find(e);
        if (it == by.end())
            by.emplace(e, std::move(p));
        else
            it->second = mul(d, it->second, p);
    }
    MultiFactors<D> r;
    for (auto& [e, p] : by) r.add(canonical(d, p), e);
    r.unit = detail::unit_of(d, f, r.factors, r.exponents);
    return r;
}

/// True when no nonconstant square divides f.
template <class D>
bool is_squarefree(const D& d, const Poly<D>& f) {
    auto s = squarefree(d, f);
    for (unsigned e : s.exponents)
        if (e > 1) return false;
    return true;
}

}  // namespace multi
}  // namespace rings
