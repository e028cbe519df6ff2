#pragma once

/**
 * @file gcd.hpp
 * @brief Multivariate GCD: degree bounds, Zippel sparse interpolation with
 *        a dense Newton fallback over finite fields, and modular lifting
 *        over Z and Q.
 *
 * Over a field the gcd G of a and b (primitive in the main variable x) is
 * recovered from H = gamma/lc_x(G) * G with gamma = gcd(lc_x(a), lc_x(b)):
 * every univariate image of H is gamma(point) times the monic gcd of the
 * images, so H can be interpolated from images alone. G is then the
 * primitive part of H in x.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "../deadline.hpp"
#include "../frac.hpp"
#include "../integers.hpp"
#include "../primes.hpp"
#include "../univar/gcd.hpp"
#include "../zp.hpp"
#include "evaluate.hpp"
#include "multipoly.hpp"
#include "vandermonde.hpp"

namespace rings {
namespace multi {

template <class D>
Poly<D> gcd(const D& d, const Poly<D>& a, const Poly<D>& b);

inline constexpr int kZippelRetries = 16;

namespace detail {

inline constexpr int kPointRetries = 32;

template <class E>
std::vector<std::size_t> present_vars(const MultiPoly<E>& a) {
    auto dg = degrees(a);
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < dg.size(); ++i)
        if (dg[i]) r.push_back(i);
    return r;
}

template <class D>
typename D::Elem random_multiplier(const D& d, Rng& rng) {
    if constexpr (D::is_field) {
        for (;;) {
            auto v = d.random(rng);
            if (!d.is_zero(v)) return v;
        }
    } else {
        return d.from_int(static_cast<long>(1 + rng() % 97));
    }
}

/// Degree-0 gcd over the coefficient ring: 1 over fields, the content gcd over Z.
template <class D>
Poly<D> constant_gcd(const D& d, const std::vector<const Poly<D>*>& ps, std::size_t n, MonomialOrder o) {
    if constexpr (D::is_field) {
        return constant(d, n, o, d.one());
    } else {
        auto g = d.zero();
        for (auto* p : ps) g = d.gcd(g, coefficient_content(d, *p));
        return constant(d, n, o, d.is_zero(g) ? d.one() : d.mul(g, d.normalizer(g)));
    }
}

}  // namespace detail

/// gcd of several polynomials: the first against a random combination of
/// the rest, verified by divisibility and folded pairwise on failure.
template <class D>
Poly<D> gcd_many(const D& d, std::vector<Poly<D>> ps, std::uint64_t seed = 7) {
    std::erase_if(ps, [](const Poly<D>& p) { return p.is_zero(); });
    if (ps.empty()) return {};
    std::sort(ps.begin(), ps.end(), [](const Poly<D>& x, const Poly<D>& y) { return x.size() < y.size(); });
    if (ps.size() == 1) return canonical(d, ps[0]);
    std::vector<const Poly<D>*> all;
    for (auto& p : ps) all.push_back(&p);
    const std::size_t n = ps[0].nvars;
    const auto o = ps[0].order;
    for (auto& p : ps)
        if (p.is_constant()) return detail::constant_gcd(d, all, n, o);
    Rng rng(seed);
    Poly<D> comb = ps[0].empty_like();
    for (std::size_t j = 1; j < ps.size(); ++j) comb = add(d, comb, scale(d, ps[j], detail::random_multiplier(d, rng)));
    Poly<D> g = gcd(d, ps[0], comb.is_zero() ? ps[1] : comb);
    for (std::size_t j = 1; j < ps.size(); ++j) {
        if (g.is_constant()) return detail::constant_gcd(d, all, n, o);
        if (!divides(d, g, ps[j])) g = gcd(d, g, ps[j]);
    }
    if (g.is_constant()) return detail::constant_gcd(d, all, n, o);
    return g;
}

/// Content of f in R[other vars][x_var] and the primitive part.
template <class D>
std::pair<Poly<D>, Poly<D>> content_primitive(const D& d, const Poly<D>& f, std::size_t var) {
    if (f.is_zero()) return {f, f};
    auto cs = as_univariate(d, f, var);
    Poly<D> c = gcd_many(d, cs);
    return {c, *divide_exact(d, f, c)};
}

namespace detail {

/// Coefficients of a with respect to the monomials in the variables `vars`.
template <class D>
std::vector<Poly<D>> coefficients_in(const D& d, const Poly<D>& a, const std::vector<std::size_t>& vars) {
    std::map<std::vector<std::uint32_t>, Poly<D>> groups;
    for (const auto& t : a.terms) {
        std::vector<std::uint32_t> key;
        DegreeVector m = t.m;
        for (auto v : vars) {
            key.push_back(t.m[v]);
            m.set(v, 0);
        }
        auto [it, fresh] = groups.try_emplace(key, a.empty_like());
        it->second.terms.push_back({std::move(m), t.c});
    }
    std::vector<Poly<D>> r;
    for (auto& [k, p] : groups) {
        normalize(d, p);
        r.push_back(std::move(p));
    }
    return r;
}

/// Upper bounds of deg_i gcd(a, b) from univariate images over a finite field.
template <class F>
std::vector<int> degree_bounds_field(const F& f, const Poly<F>& a, const Poly<F>& b, Rng& rng) {
    const std::size_t n = a.nvars;
    auto da = degrees(a), db = degrees(b);
    std::vector<std::uint32_t> mx(n);
    std::vector<int> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        mx[i] = std::max(da[i], db[i]);
        bound[i] = (da[i] && db[i]) ? static_cast<int>(std::min(da[i], db[i])) : 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (bound[i] == 0) continue;
        for (int attempt = 0; attempt < kPointRetries; ++attempt) {
            std::vector<typename F::Elem> x(n);
            for (auto& v : x) v = f.random(rng);
            auto pw = point_powers(f, x, mx);
            auto A = univariate_image(f, a, i, pw), B = univariate_image(f, b, i, pw);
            if (A.degree() != static_cast<int>(da[i]) || B.degree() != static_cast<int>(db[i])) continue;
            bound[i] = std::min(bound[i], uni::gcd(f, A, B).degree());
            break;
        }
    }
    return bound;
}

enum class Probe { Ok, Unlucky, LowerDegree };

/// Interpolation problem for H over a finite field.
template <class F>
struct ScaledGcd {
    const F& f;
    const Poly<F>& a;
    const Poly<F>& b;
    const Poly<F>& gamma;
    std::size_t main;
    std::vector<std::size_t> vars;   // interpolated variables
    std::vector<int> degh;           // degree bounds of H per variable
    int bound;                       // degree of H in the main variable
    std::vector<std::uint32_t> mx;   // max degrees for power tables
    int da, db;

    ScaledGcd(const F& f_, const Poly<F>& a_, const Poly<F>& b_, const Poly<F>& g_, std::size_t main_,
              std::vector<std::size_t> vars_, std::vector<int> degh_, int bound_)
        : f(f_), a(a_), b(b_), gamma(g_), main(main_), vars(std::move(vars_)), degh(std::move(degh_)),
          bound(bound_) {
        auto x = degrees(a), y = degrees(b), z = degrees(gamma);
        mx.resize(a.nvars);
        for (std::size_t i = 0; i < a.nvars; ++i) mx[i] = std::max({x[i], y[i], z[i]});
        da = static_cast<int>(x[main]);
        db = static_cast<int>(y[main]);
    }

    /// Image of H at a point (main coordinate ignored).
    Probe probe(const std::vector<typename F::Elem>& x, std::vector<typename F::Elem>& out) {
        check_deadline();
        auto pw = point_powers(f, x, mx);
        auto A = univariate_image(f, a, main, pw);
        if (A.degree() != da) return Probe::Unlucky;
        auto B = univariate_image(f, b, main, pw);
        if (B.degree() != db) return Probe::Unlucky;
        auto g = uni::gcd(f, A, B);
        if (g.degree() > bound) return Probe::Unlucky;
        if (g.degree() < bound) {
            bound = g.degree();
            return Probe::LowerDegree;
        }
        auto s = gamma_at(pw);
        if (f.is_zero(s)) return Probe::Unlucky;
        out.assign(static_cast<std::size_t>(bound) + 1, f.zero());
        for (std::size_t i = 0; i < g.c.size(); ++i) out[i] = f.mul(g.c[i], s);
        return Probe::Ok;
    }

    typename F::Elem gamma_at(const std::vector<std::vector<typename F::Elem>>& pw) const {
        auto acc = f.zero();
        for (const auto& t : gamma.terms) {
            auto c = t.c;
            for (std::size_t i = 0; i < gamma.nvars; ++i)
                if (t.m[i]) c = f.mul(c, pw[i][t.m[i]]);
            acc = f.add(acc, c);
        }
        return acc;
    }

    std::vector<Poly<F>> constants(const std::vector<typename F::Elem>& v) const {
        std::vector<Poly<F>> r;
        for (const auto& c : v) r.push_back(constant(f, a.nvars, a.order, c));
        return r;
    }

    typename F::Elem fresh_value(const std::vector<typename F::Elem>& used, Rng& rng) const {
        for (;;) {
            auto v = f.random(rng);
            bool dup = false;
            for (const auto& u : used) dup = dup || f.equal(u, v);
            if (!dup) return v;
        }
    }

    /// Newton step: H += (r - H(alpha)) / q(alpha) * q, then q *= (x_var - alpha).
    void newton_update(std::vector<Poly<F>>& h, Poly<F>& q, std::size_t var, const typename F::Elem& alpha,
                       const std::vector<Poly<F>>& r) const {
        auto qa = f.inv(evaluate_univariate(q, var, alpha));
        for (std::size_t k = 0; k < h.size(); ++k) {
            auto diff = sub(f, r[k], evaluate_at(f, h[k], var, alpha));
            if (!diff.is_zero()) h[k] = add(f, h[k], mul(f, scale(f, diff, qa), q));
        }
        auto lin = sub(f, variable(f, a.nvars, var, a.order), constant(f, a.nvars, a.order, alpha));
        q = mul(f, q, lin);
    }

    typename F::Elem evaluate_univariate(const Poly<F>& q, std::size_t var, const typename F::Elem& v) const {
        auto acc = f.zero();
        for (const auto& t : q.terms) acc = f.add(acc, f.mul(t.c, power(f, v, static_cast<std::uint64_t>(t.m[var]))));
        return acc;
    }

    /// Dense recursive interpolation in vars[0..j] with the rest fixed in x.
    std::optional<std::vector<Poly<F>>> dense(int j, std::vector<typename F::Elem>& x, Rng& rng, Probe& st) {
        if (j < 0) {
            std::vector<typename F::Elem> v;
            st = probe(x, v);
            if (st != Probe::Ok) return std::nullopt;
            return constants(v);
        }
        std::size_t var = vars[static_cast<std::size_t>(j)];
        int D = degh[var];
        std::vector<Poly<F>> h;
        Poly<F> q = constant(f, a.nvars, a.order, f.one());
        std::vector<typename F::Elem> nodes;
        int fails = 0;
        while (static_cast<int>(nodes.size()) <= D) {
            auto alpha = fresh_value(nodes, rng);
            x[var] = alpha;
            auto r = dense(j - 1, x, rng, st);
            if (!r) {
                if (st == Probe::Unlucky && ++fails < kPointRetries) continue;
                return std::nullopt;
            }
            if (nodes.empty()) {
                h = std::move(*r);
                auto lin = sub(f, variable(f, a.nvars, var, a.order), constant(f, a.nvars, a.order, alpha));
                q = lin;
            } else {
                newton_update(h, q, var, alpha, *r);
            }
            nodes.push_back(alpha);
        }
        st = Probe::Ok;
        return h;
    }

    /// Values of the skeleton monomials of p at beta (interpolated vars only).
    std::vector<typename F::Elem> monomial_values(const Poly<F>& p, const std::vector<typename F::Elem>& beta,
                                                  std::size_t j) const {
        std::vector<typename F::Elem> z;
        for (const auto& t : p.terms) {
            auto v = f.one();
            for (std::size_t l = 0; l < j; ++l)
                if (t.m[vars[l]]) v = f.mul(v, power(f, beta[l], static_cast<std::uint64_t>(t.m[vars[l]])));
            z.push_back(v);
        }
        return z;
    }

    /// Variable-by-variable sparse interpolation (Zippel).
    std::optional<std::vector<Poly<F>>> zippel(Rng& rng, Probe& st) {
        std::vector<typename F::Elem> s(a.nvars, f.one());
        for (auto v : vars) s[v] = f.random(rng);
        auto x = s;
        auto h = dense(0, x, rng, st);
        if (!h) return std::nullopt;
        for (std::size_t j = 1; j < vars.size(); ++j) {
            std::size_t var = vars[j];
            int D = degh[var];
            std::size_t T = 0;
            for (const auto& p : *h) T = std::max(T, p.size());
            std::vector<Poly<F>> hn = *h;
            auto lin0 = sub(f, variable(f, a.nvars, var, a.order), constant(f, a.nvars, a.order, s[var]));
            Poly<F> q = lin0;
            std::vector<typename F::Elem> nodes{s[var]};
            int fails = 0;
            while (static_cast<int>(nodes.size()) <= D) {
                auto alpha = fresh_value(nodes, rng);
                std::vector<Poly<F>> img;
                bool done = false;
                while (!done) {
                    if (++fails > kPointRetries * 4) {
                        st = Probe::Unlucky;
                        return std::nullopt;
                    }
                    std::vector<typename F::Elem> beta(j);
                    for (auto& v : beta) v = f.random(rng);
                    std::vector<std::vector<typename F::Elem>> z;
                    bool distinct = true;
                    for (const auto& p : *h) {
                        z.push_back(monomial_values(p, beta, j));
                        const auto& zs = z.back();
                        for (std::size_t u = 0; u < zs.size() && distinct; ++u)
                            for (std::size_t w = u + 1; w < zs.size() && distinct; ++w)
                                if (f.equal(zs[u], zs[w])) distinct = false;
                    }
                    if (!distinct) continue;
                    std::vector<std::vector<typename F::Elem>> vals(h->size());
                    std::vector<typename F::Elem> y = s, bp(j, f.one()), out;
                    y[var] = alpha;
                    bool unlucky = false;
                    for (std::size_t i = 0; i <= T && !unlucky; ++i) {
                        for (std::size_t l = 0; l < j; ++l) y[vars[l]] = bp[l];
                        st = probe(y, out);
                        if (st == Probe::LowerDegree) return std::nullopt;
                        if (st == Probe::Unlucky) unlucky = true;
                        else
                            for (std::size_t k = 0; k < out.size(); ++k) vals[k].push_back(out[k]);
                        for (std::size_t l = 0; l < j; ++l) bp[l] = f.mul(bp[l], beta[l]);
                    }
                    if (unlucky) continue;
                    img.clear();
                    for (std::size_t k = 0; k < h->size(); ++k) {
                        const auto& sk = (*h)[k];
                        auto c = solve_vandermonde(f, z[k], vals[k]);
                        if (!c) {
                            st = Probe::Unlucky;
                            return std::nullopt;
                        }
                        // the remaining probes must agree with the skeleton
                        for (std::size_t i = sk.size(); i <= T; ++i) {
                            auto acc = f.zero();
                            for (std::size_t u = 0; u < sk.size(); ++u)
                                acc = f.add(acc, f.mul((*c)[u], power(f, z[k][u], static_cast<std::uint64_t>(i))));
                            if (!f.equal(acc, vals[k][i])) {
                                st = Probe::Unlucky;
                                return std::nullopt;
                            }
                        }
                        Poly<F> p = sk.empty_like();
                        for (std::size_t u = 0; u < sk.size(); ++u)
                            if (!f.is_zero((*c)[u])) p.terms.push_back({sk.terms[u].m, (*c)[u]});
                        img.push_back(std::move(p));
                    }
                    done = true;
                }
                newton_update(hn, q, var, alpha, img);
                nodes.push_back(alpha);
            }
            h = std::move(hn);
        }
        st = Probe::Ok;
        return h;
    }

    Poly<F> assemble(const std::vector<Poly<F>>& h) const { return from_univariate(f, h, main, a.nvars, a.order); }
};

/// Variables ordered for interpolation, and per-variable degree bounds of H.
template <class F>
std::pair<std::vector<std::size_t>, std::vector<int>> interpolation_plan(const Poly<F>& a, const Poly<F>& b,
                                                                         const Poly<F>& gamma, std::size_t main,
                                                                         const std::vector<int>& bounds) {
    auto dg = degrees(gamma), da = degrees(a), db = degrees(b);
    std::vector<std::size_t> vars;
    std::vector<int> degh(a.nvars, 0);
    for (std::size_t i = 0; i < a.nvars; ++i) {
        if (i == main) continue;
        degh[i] = std::min<int>(bounds[i] + static_cast<int>(dg[i]), static_cast<int>(std::min(da[i], db[i])));
        if (da[i] || db[i]) vars.push_back(i);
    }
    return {vars, degh};
}

/// H for primitive a, b over a finite field, or nullopt when every attempt failed.
/// `bound` is the expected degree in the main variable and may be lowered.
template <class F>
std::optional<Poly<F>> scaled_gcd(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& gamma,
                                  std::size_t main, const std::vector<int>& bounds, int& bound, Rng& rng,
                                  bool zippel_first = true) {
    auto [vars, degh] = interpolation_plan<F>(a, b, gamma, main, bounds);
    const int attempts = zippel_first ? kZippelRetries + 4 : 4;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        bool use_zippel = zippel_first && attempt < kZippelRetries;
        ScaledGcd<F> P(f, a, b, gamma, main, vars, degh, bound);
        Probe st = Probe::Ok;
        std::optional<std::vector<Poly<F>>> h;
        if (vars.empty()) {
            std::vector<typename F::Elem> x(a.nvars, f.one()), v;
            st = P.probe(x, v);
            if (st == Probe::Ok) h = P.constants(v);
        } else if (use_zippel) {
            h = P.zippel(rng, st);
        } else {
            std::vector<typename F::Elem> x(a.nvars, f.one());
            h = P.dense(static_cast<int>(vars.size()) - 1, x, rng, st);
        }
        if (st == Probe::LowerDegree) {
            bound = P.bound;
            if (bound == 0) return constant(f, a.nvars, a.order, f.one());
            continue;
        }
        if (!h) continue;
        auto H = P.assemble(*h);
        if (H.is_zero()) continue;
        return H;
    }
    return std::nullopt;
}

/// gcd over a finite field of a, b primitive in the main variable.
template <class F>
Poly<F> gcd_primitive_field(const F& f, const Poly<F>& a, const Poly<F>& b, std::size_t main,
                            const std::vector<int>& bounds, Rng& rng, bool zippel_first = true) {
    Poly<F> gamma = gcd(f, lc_in(f, a, main), lc_in(f, b, main));
    int bound = bounds[main];
    for (int round = 0; round < 4; ++round) {
        auto H = scaled_gcd(f, a, b, gamma, main, bounds, bound, rng, zippel_first && round < 2);
        if (!H) continue;
        if (H->is_constant()) return constant(f, a.nvars, a.order, f.one());
        auto G = canonical(f, content_primitive(f, *H, main).second);
        if (divides(f, G, a) && divides(f, G, b)) return G;
    }
    throw AlgorithmFailure("multivariate gcd: interpolation did not converge");
}

/// Reduction of an integer polynomial modulo a machine prime.
template <class E>
MultiPoly<std::uint64_t> reduce_mod(const MultiPoly<E>& a, const Zp64& f) {
    MultiPoly<std::uint64_t> r(a.nvars, a.order);
    r.terms.reserve(a.size());
    for (const auto& t : a.terms) {
        auto c = f.from_integer(t.c);
        if (c) r.terms.push_back({t.m, c});
    }
    return r;
}

/// Shared driver for inputs without monomial or integer content: trivial
/// and univariate cases, zero-bound elimination, content in the main
/// variable. `core` handles primitive inputs with all bounds positive.
template <class D, class Bounds, class Core>
Poly<D> gcd_generic(const D& d, const Poly<D>& a, const Poly<D>& b, Bounds bounds_of, Core core) {
    const std::size_t n = a.nvars;
    const auto o = a.order;
    auto one = constant(d, n, o, d.one());
    if (a.is_constant() || b.is_constant()) return one;
    auto va = present_vars(a), vb = present_vars(b);
    std::vector<std::size_t> both;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(both));
    if (both.empty()) return one;
    if (va.size() == 1 && vb.size() == 1) {
        std::size_t v = va[0];
        return canonical(d, from_dense(d, uni::gcd(d, to_dense(d, a, v), to_dense(d, b, v)), v, n, o));
    }
    std::vector<int> bounds = bounds_of(a, b);
    std::vector<std::size_t> zero_vars;
    std::size_t main = n;
    for (std::size_t i = 0; i < n; ++i) {
        bool in = std::binary_search(va.begin(), va.end(), i) || std::binary_search(vb.begin(), vb.end(), i);
        if (!in) continue;
        if (bounds[i] == 0) zero_vars.push_back(i);
        else if (main == n || bounds[i] > bounds[main]) main = i;
    }
    if (main == n) return one;
    if (!zero_vars.empty()) {
        auto cs = coefficients_in(d, a, zero_vars);
        auto cb = coefficients_in(d, b, zero_vars);
        cs.insert(cs.end(), std::make_move_iterator(cb.begin()), std::make_move_iterator(cb.end()));
        return canonical(d, gcd_many(d, std::move(cs)));
    }
    auto [ca, pa] = content_primitive(d, a, main);
    auto [cb, pb] = content_primitive(d, b, main);
    Poly<D> c = gcd(d, ca, cb);
    return canonical(d, mul(d, c, core(pa, pb, main, bounds)));
}

/// Prime p large enough for images, chosen from a fixed descending sequence.
inline std::uint64_t bounds_prime(Rng& rng) {
    return prev_prime((std::uint64_t(1) << 62) - (rng() >> 24));
}

inline std::vector<int> degree_bounds_z(const MultiPoly<Integer>& a, const MultiPoly<Integer>& b, Rng& rng) {
    Zp64 f(bounds_prime(rng), false);
    auto ap = reduce_mod(a, f), bp = reduce_mod(b, f);
    auto da = degrees(a), db = degrees(b);
    auto bd = degree_bounds_field(f, ap, bp, rng);
    auto ea = degrees(ap), eb = degrees(bp);
    for (std::size_t i = 0; i < bd.size(); ++i)
        if (ea[i] != da[i] || eb[i] != db[i]) bd[i] = static_cast<int>(std::min(da[i], db[i]));
    return bd;
}

/// Modular gcd over Z of a, b primitive in the main variable.
inline Poly<IntegerRing> gcd_primitive_z(const Poly<IntegerRing>& a, const Poly<IntegerRing>& b, std::size_t main,
                                         const std::vector<int>& bounds, Rng& rng) {
    IntegerRing z;
    Poly<IntegerRing> gamma = gcd(z, lc_in(z, a, main), lc_in(z, b, main));
    int bound = bounds[main];
    const int da = degree(a, main), db = degree(b, main);
    Poly<IntegerRing> acc(a.nvars, a.order), prev(a.nvars, a.order);
    Integer M = 0;
    std::uint64_t p = std::uint64_t(1) << 62;
    int failures = 0;
    for (int primes = 0;; ++primes) {
        check_deadline();
        if (primes > 256) throw AlgorithmFailure("multivariate gcd over Z: reconstruction did not stabilize");
        p = prev_prime(p);
        Zp64 f(p, false);
        auto ap = reduce_mod(a, f), bp = reduce_mod(b, f), gp = reduce_mod(gamma, f);
        if (gp.is_zero() || degree(ap, main) != da || degree(bp, main) != db) continue;
        int pb = bound;
        auto H = scaled_gcd(f, ap, bp, gp, main, bounds, pb, rng);
        if (!H) {
            if (++failures > kZippelRetries) throw AlgorithmFailure("multivariate gcd over Z: no usable prime");
            continue;
        }
        if (pb < bound || M == 0) {
            bound = pb;
            if (bound == 0) return constant(z, a.nvars, a.order, Integer(1));
            acc = Poly<IntegerRing>(a.nvars, a.order);
            for (const auto& t : H->terms) acc.terms.push_back({t.m, from_u64(t.c)});
            M = from_u64(p);
            prev = Poly<IntegerRing>(a.nvars, a.order);
        } else {
            // merge residues term by term; absent terms are zero
            std::uint64_t minv = mod_inverse(mod_u64(M, p), f.modulus());
            Poly<IntegerRing> merged(a.nvars, a.order);
            std::size_t i = 0, j = 0;
            while (i < acc.size() || j < H->size()) {
                int c = i == acc.size() ? -1 : j == H->size() ? 1 : acc.compare(acc.terms[i].m, H->terms[j].m);
                if (c > 0) {
                    merged.terms.push_back({acc.terms[i].m, crt_extend(acc.terms[i].c, M, 0, f.modulus(), minv)});
                    ++i;
                } else if (c < 0) {
                    merged.terms.push_back({H->terms[j].m, crt_extend(Integer(0), M, H->terms[j].c, f.modulus(), minv)});
                    ++j;
                } else {
                    merged.terms.push_back({acc.terms[i].m, crt_extend(acc.terms[i].c, M, H->terms[j].c, f.modulus(), minv)});
                    ++i, ++j;
                }
            }
            acc = std::move(merged);
            M *= from_u64(p);
        }
        Poly<IntegerRing> lifted(a.nvars, a.order);
        for (const auto& t : acc.terms) {
            auto v = symmetric_mod(t.c, M);
            if (sgn(v) != 0) lifted.terms.push_back({t.m, std::move(v)});
        }
        if (lifted == prev && !lifted.is_zero()) {
            auto G = canonical(z, content_primitive(z, lifted, main).second);
            if (divides(z, G, a) && divides(z, G, b)) return G;
        }
        prev = std::move(lifted);
    }
}

/// Zero inputs, constants and the common monomial factor; `rest` gets
/// the inputs with their monomial contents removed.
template <class D, class Rest>
Poly<D> gcd_strip_monomials(const D& d, const Poly<D>& a, const Poly<D>& b, Rest rest) {
    check_compatible(a, b);
    if (a.is_zero()) return canonical(d, b);
    if (b.is_zero()) return canonical(d, a);
    if (a == b) return canonical(d, a);
    if (a.is_constant() || b.is_constant()) return constant_gcd(d, {&a, &b}, a.nvars, a.order);
    auto ma = monomial_content(a), mb = monomial_content(b);
    auto gm = DegreeVector::gcd(ma, mb);
    auto g = rest(divide_monomial(a, ma), divide_monomial(b, mb));
    return gm.is_zero() ? g : mul_term(d, g, d.one(), gm);
}

template <class F>
Poly<F> gcd_field(const F& f, const Poly<F>& a, const Poly<F>& b, bool zippel_first = true) {
    Rng rng(0x2545f4914f6cdd1dULL);
    return gcd_strip_monomials(f, a, b, [&](const Poly<F>& x, const Poly<F>& y) {
        return gcd_generic(
            f, x, y, [&](const Poly<F>& u, const Poly<F>& v) { return degree_bounds_field(f, u, v, rng); },
            [&](const Poly<F>& u, const Poly<F>& v, std::size_t main, const std::vector<int>& bounds) {
                return gcd_primitive_field(f, u, v, main, bounds, rng, zippel_first);
            });
    });
}

inline Poly<IntegerRing> gcd_integer(const Poly<IntegerRing>& a, const Poly<IntegerRing>& b) {
    IntegerRing z;
    Rng rng(0x9e3779b97f4a7c15ULL);
    return gcd_strip_monomials(z, a, b, [&](const Poly<IntegerRing>& x, const Poly<IntegerRing>& y) {
        auto cx = coefficient_content(z, x), cy = coefficient_content(z, y);
        Integer ci = gcd(cx, cy);
        auto g = gcd_generic(
            z, divide_scalar(z, x, cx), divide_scalar(z, y, cy),
            [&](const Poly<IntegerRing>& u, const Poly<IntegerRing>& v) { return degree_bounds_z(u, v, rng); },
            [&](const Poly<IntegerRing>& u, const Poly<IntegerRing>& v, std::size_t main,
                const std::vector<int>& bounds) { return gcd_primitive_z(u, v, main, bounds, rng); });
        return canonical(z, scale(z, g, ci));
    });
}

inline Poly<IntegerRing> clear_denominators(const Poly<Rationals>& a) {
    Integer l = 1;
    for (const auto& t : a.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.den.get_mpz_t());
    Poly<IntegerRing> r(a.nvars, a.order);
    for (const auto& t : a.terms) r.terms.push_back({t.m, t.c.num * (l / t.c.den)});
    return r;
}

inline Poly<Rationals> to_rationals(const Poly<IntegerRing>& a) {
    Poly<Rationals> r(a.nvars, a.order);
    for (const auto& t : a.terms) r.terms.push_back({t.m, Rational{t.c, 1}});
    return r;
}

}  // namespace detail

/// Degree bounds of gcd(a, b) per variable from univariate images.
template <class D>
std::vector<int> gcd_degree_bounds(const D& d, const Poly<D>& a, const Poly<D>& b, std::uint64_t seed = 1) {
    Rng rng(seed);
    if constexpr (std::is_same_v<D, IntegerRing>) return detail::degree_bounds_z(a, b, rng);
    else if constexpr (is_rationals_v<D>)
        return detail::degree_bounds_z(detail::clear_denominators(a), detail::clear_denominators(b), rng);
    else if constexpr (FiniteFieldDomain<D>) return detail::degree_bounds_field(d, a, b, rng);
    else throw UnsupportedRingError("gcd degree bounds need Z, Q or a finite field");
}

/// Canonical gcd: monic over fields, positive leading coefficient over Z.
template <class D>
Poly<D> gcd(const D& d, const Poly<D>& a, const Poly<D>& b) {
    if constexpr (std::is_same_v<D, IntegerRing>) {
        return detail::gcd_integer(a, b);
    } else if constexpr (is_rationals_v<D>) {
        if (a.is_zero() && b.is_zero()) return a;
        auto g = detail::gcd_integer(detail::clear_denominators(a), detail::clear_denominators(b));
        return canonical(d, detail::to_rationals(g));
    } else if constexpr (FiniteFieldDomain<D>) {
        return detail::gcd_field(d, a, b);
    } else {
        throw UnsupportedRingError("multivariate gcd needs Z, Q or a finite field");
    }
}

/// Dense Newton interpolation only; the reference path for Zippel.
template <class F>
Poly<F> gcd_dense(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return detail::gcd_field(f, a, b, false);
}

}  // namespace multi
}  // namespace rings
