#pragma once

/**
 * @file evaluate.hpp
 * @brief Evaluation of multivariate polynomials: direct, partial, sparse
 *        recursive Horner, and univariate images.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multipoly.hpp"

namespace rings {

/// Powers v^0..v^n of a single value, cached for repeated evaluation.
template <class D>
std::vector<typename D::Elem> power_table(const D& d, const typename D::Elem& v, std::uint32_t n) {
    std::vector<typename D::Elem> r;
    r.reserve(n + 1);
    r.push_back(d.one());
    for (std::uint32_t i = 1; i <= n; ++i) r.push_back(d.mul(r.back(), v));
    return r;
}

/// Nested univariate view: level k holds the distinct exponents of x_k
/// (descending) with their children at level k+1; leaves hold coefficients.
template <class E>
struct SparseRecursive {
    std::size_t var = 0;
    std::vector<std::pair<std::uint32_t, SparseRecursive>> children;
    E leaf{};
};

namespace multi {

namespace detail {

template <class E>
SparseRecursive<E> build_recursive(const std::vector<const Term<E>*>& terms, std::size_t var, std::size_t n) {
    SparseRecursive<E> node;
    node.var = var;
    if (var == n) {
        node.leaf = terms.front()->c;
        return node;
    }
    std::map<std::uint32_t, std::vector<const Term<E>*>, std::greater<>> groups;
    for (auto* t : terms) groups[t->m[var]].push_back(t);
    for (auto& [e, g] : groups) node.children.emplace_back(e, build_recursive(g, var + 1, n));
    return node;
}

template <class D>
typename D::Elem horner(const D& d, const SparseRecursive<typename D::Elem>& node,
                        const std::vector<typename D::Elem>& x, std::size_t n) {
    if (node.var == n) return node.leaf;
    const auto& v = x[node.var];
    auto acc = d.zero();
    std::uint32_t prev = 0;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        const auto& [e, child] = node.children[i];
        if (i > 0) acc = d.mul(acc, power(d, v, static_cast<std::uint64_t>(prev - e)));
        acc = d.add(acc, horner(d, child, x, n));
        prev = e;
    }
    return d.mul(acc, power(d, v, static_cast<std::uint64_t>(prev)));
}

template <class E>
void flatten(const SparseRecursive<E>& node, DegreeVector& m, std::vector<Term<E>>& out, std::size_t n) {
    if (node.var == n) {
        out.push_back({m, node.leaf});
        return;
    }
    for (const auto& [e, child] : node.children) {
        m.set(node.var, e);
        flatten(child, m, out, n);
    }
    m.set(node.var, 0);
}

}  // namespace detail

template <class D>
SparseRecursive<typename D::Elem> to_recursive(const D& d, const Poly<D>& a) {
    std::vector<const Term<typename D::Elem>*> ptrs;
    for (const auto& t : a.terms) ptrs.push_back(&t);
    if (ptrs.empty()) {
        SparseRecursive<typename D::Elem> z;
        z.var = a.nvars;
        z.leaf = d.zero();
        return z;
    }
    return detail::build_recursive(ptrs, 0, a.nvars);
}

/// Flattens a recursive view back into a polynomial of n variables.
template <class D>
Poly<D> from_recursive(const D& d, const SparseRecursive<typename D::Elem>& r, std::size_t n, MonomialOrder o) {
    Poly<D> p(n, o);
    if (r.var == n && r.children.empty() && d.is_zero(r.leaf)) return p;
    DegreeVector m(n);
    detail::flatten(r, m, p.terms, n);
    normalize(d, p);
    return p;
}

/// Horner evaluation of a precomputed recursive form.
template <class D>
typename D::Elem evaluate(const D& d, const SparseRecursive<typename D::Elem>& r, const std::vector<typename D::Elem>& x) {
    std::size_t n = x.size();
    if (r.var == n && r.children.empty()) return r.leaf;
    return detail::horner(d, r, x, n);
}

/// Term-by-term evaluation at a full point.
template <class D>
typename D::Elem evaluate_direct(const D& d, const Poly<D>& a, const std::vector<typename D::Elem>& x) {
    if (x.size() != a.nvars) throw std::invalid_argument("evaluation point has wrong length");
    auto acc = d.zero();
    for (const auto& t : a.terms) {
        auto v = t.c;
        for (std::size_t i = 0; i < a.nvars; ++i)
            if (t.m[i]) v = d.mul(v, power(d, x[i], static_cast<std::uint64_t>(t.m[i])));
        acc = d.add(acc, v);
    }
    return acc;
}

template <class D>
typename D::Elem evaluate(const D& d, const Poly<D>& a, const std::vector<typename D::Elem>& x) {
    if (x.size() != a.nvars) throw std::invalid_argument("evaluation point has wrong length");
    return evaluate(d, to_recursive(d, a), x);
}

/// Substitutes x_var = v; the result keeps the variable count with x_var absent.
template <class D>
Poly<D> evaluate_at(const D& d, const Poly<D>& a, std::size_t var, const typename D::Elem& v) {
    if (var >= a.nvars) throw std::invalid_argument("unknown variable");
    auto pw = power_table(d, v, static_cast<std::uint32_t>(std::max(degree(a, var), 0)));
    Poly<D> r = a.empty_like();
    r.terms.reserve(a.size());
    for (const auto& t : a.terms) {
        DegreeVector m = t.m;
        m.set(var, 0);
        r.terms.push_back({std::move(m), d.mul(t.c, pw[t.m[var]])});
    }
    normalize(d, r);
    return r;
}

/// Several substitutions at once: vars[k] = vals[k].
template <class D>
Poly<D> evaluate_at(const D& d, const Poly<D>& a, const std::vector<std::size_t>& vars,
                    const std::vector<typename D::Elem>& vals) {
    auto degs = degrees(a);
    std::vector<std::vector<typename D::Elem>> pw;
    for (std::size_t k = 0; k < vars.size(); ++k) pw.push_back(power_table(d, vals[k], degs[vars[k]]));
    Poly<D> r = a.empty_like();
    r.terms.reserve(a.size());
    for (const auto& t : a.terms) {
        DegreeVector m = t.m;
        auto c = t.c;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            c = d.mul(c, pw[k][t.m[vars[k]]]);
            m.set(vars[k], 0);
        }
        r.terms.push_back({std::move(m), std::move(c)});
    }
    normalize(d, r);
    return r;
}

/// Univariate image in x_keep with every other x_i replaced by pw[i][1]
/// through precomputed power tables pw[i] (pw[keep] unused).
template <class D>
UniPoly<typename D::Elem> univariate_image(const D& d, const Poly<D>& a, std::size_t keep,
                                           const std::vector<std::vector<typename D::Elem>>& pw) {
    UniPoly<typename D::Elem> r;
    int deg = degree(a, keep);
    if (deg < 0) return r;
    r.c.assign(static_cast<std::size_t>(deg) + 1, d.zero());
    for (const auto& t : a.terms) {
        auto c = t.c;
        for (std::size_t i = 0; i < a.nvars; ++i)
            if (i != keep && t.m[i]) c = d.mul(c, pw[i][t.m[i]]);
        auto& slot = r.c[t.m[keep]];
        slot = d.add(slot, c);
    }
    uni::normalize(d, r);
    return r;
}

/// Power tables for a point, sized by the degrees of the given polynomials.
template <class D>
std::vector<std::vector<typename D::Elem>> point_powers(const D& d, const std::vector<typename D::Elem>& x,
                                                        const std::vector<std::uint32_t>& maxdeg) {
    std::vector<std::vector<typename D::Elem>> pw(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) pw[i] = power_table(d, x[i], maxdeg[i]);
    return pw;
}

}  // namespace multi
}  // namespace rings
