#pragma once

/**
 * @file hensel.hpp
 * @brief Multifactor Hensel lifting over a factor tree.
 *
 * The lifting ring is described by a context with `at(k)`, returning the
 * coefficient domain at precision k (Z/p^k or D[t]/t^k). Elements of a
 * lower precision are valid elements at any higher precision.
 */

#include <functional>
#include <utility>
#include <vector>

#include "../bigint.hpp"
#include "gcd.hpp"

namespace rings {

/// Z/M for an arbitrary modulus M; elements are residues in [0, M).
class IntegersMod {
public:
    using Elem = Integer;
    static constexpr bool is_field = false;
    static constexpr bool is_euclidean = false;

    explicit IntegersMod(Integer m) : m_(std::move(m)) {}

    const Integer& modulus() const { return m_; }
    bool is_finite() const { return true; }
    Integer characteristic() const { return m_; }

    Elem zero() const { return 0; }
    Elem one() const { return m_ == 1 ? Elem(0) : Elem(1); }
    Elem from_int(long v) const { return mod_floor(Integer(v), m_); }
    Elem from_integer(const Integer& v) const { return mod_floor(v, m_); }
    Elem reduce(const Elem& v) const { return mod_floor(v, m_); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        if (s >= m_) s -= m_;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem s = a - b;
        if (sgn(s) < 0) s += m_;
        return s;
    }
    Elem neg(const Elem& a) const { return sgn(a) == 0 ? Elem(0) : Elem(m_ - a); }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r = a * b;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m_.get_mpz_t());
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m_.get_mpz_t()) == 0)
            throw NonInvertibleError("element is not invertible", rings::gcd(a, m_));
        return r;
    }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return rings::gcd(a, m_) == 1; }
    std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const {
        if (!is_unit(b)) return std::nullopt;
        return mul(a, inv(b));
    }
    Elem random(Rng& rng) const { return mod_floor(from_u64(rng()), m_); }
    std::string format(const Elem& a) const { return a.get_str(); }
    std::string describe() const { return "Z/" + m_.get_str(); }

private:
    Integer m_;
};

/// Lifting context for Z/p^k.
struct PadicContext {
    Integer p;
    IntegersMod at(unsigned k) const { return IntegersMod(pow_ui(p, k)); }
};

/// Precision schedule: double while more than 4 linear steps remain.
inline std::vector<unsigned> hensel_schedule(unsigned target) {
    std::vector<unsigned> s;
    unsigned cur = 1;
    while (cur < target) {
        cur = (target - cur > 4) ? std::min(2 * cur, target) : cur + 1;
        s.push_back(cur);
    }
    return s;
}

namespace uni {

namespace detail {

template <class R>
struct HenselNode {
    UniPoly<typename R::Elem> g, s, t;
    int left = -1, right = -1;
};

template <class R>
UniPoly<typename R::Elem> reduce_poly(const R& r, const UniPoly<typename R::Elem>& a) {
    UniPoly<typename R::Elem> out;
    out.c.reserve(a.c.size());
    for (const auto& v : a.c) out.c.push_back(r.reduce(v));
    normalize(r, out);
    return out;
}

template <class R>
void hensel_step(const R& r, std::vector<HenselNode<R>>& nodes, int v, const UniPoly<typename R::Elem>& f) {
    using P = UniPoly<typename R::Elem>;
    auto& node = nodes[v];
    if (node.left < 0) {
        node.g = f;
        return;
    }
    P g = reduce_poly(r, nodes[node.left].g), h = reduce_poly(r, nodes[node.right].g);
    P s = reduce_poly(r, node.s), t = reduce_poly(r, node.t);
    P e = sub(r, f, mul(r, g, h));
    auto [q, rem1] = divrem_classical(r, mul(r, s, e), h);
    P g1 = add(r, g, add(r, mul(r, t, e), mul(r, q, g)));
    P h1 = add(r, h, rem1);
    P b = sub(r, add(r, mul(r, s, g1), mul(r, t, h1)), constant(r, r.one()));
    auto [c, dd] = divrem_classical(r, mul(r, s, b), h1);
    node.s = sub(r, s, dd);
    node.t = sub(r, t, add(r, mul(r, t, b), mul(r, c, g1)));
    node.g = f;
    int left = node.left, right = node.right;
    hensel_step(r, nodes, left, g1);
    hensel_step(r, nodes, right, h1);
}

}  // namespace detail

/**
 * Lifts a factorization of monic f over the residue field to precision
 * `target`. `factors` are pairwise coprime monic polynomials over F whose
 * product is f mod the maximal ideal; `embed` maps F elements into the
 * lifting representation; `root(R)` returns monic f at the precision of R.
 */
template <class Ctx, class F, class Embed, class Root>
auto hensel_lift(const Ctx& ctx, const F& field, const std::vector<UniPoly<typename F::Elem>>& factors,
                 unsigned target, Embed embed, Root root) {
    using R = decltype(ctx.at(1));
    using P = UniPoly<typename R::Elem>;
    auto lift_poly = [&](const UniPoly<typename F::Elem>& a) {
        P out;
        for (const auto& v : a.c) out.c.push_back(embed(v));
        return out;
    };
    std::vector<detail::HenselNode<R>> nodes;
    std::vector<UniPoly<typename F::Elem>> fpoly;
    std::function<int(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) -> int {
        if (hi - lo == 1) {
            nodes.push_back({lift_poly(factors[lo]), P{}, P{}, -1, -1});
            fpoly.push_back(factors[lo]);
            return static_cast<int>(nodes.size() - 1);
        }
        std::size_t mid = (lo + hi) / 2;
        int l = build(lo, mid), rr = build(mid, hi);
        auto gl = fpoly[l], gr = fpoly[rr];
        auto x = xgcd(field, gl, gr);
        if (x.g.degree() != 0) throw AlgorithmFailure("Hensel lifting needs coprime factors");
        auto prod = mul(field, gl, gr);
        nodes.push_back({lift_poly(prod), lift_poly(x.s), lift_poly(x.t), l, rr});
        fpoly.push_back(prod);
        return static_cast<int>(nodes.size() - 1);
    };
    int top = build(0, factors.size());
    for (unsigned k : hensel_schedule(target)) {
        R r = ctx.at(k);
        detail::hensel_step(r, nodes, top, root(r));
    }
    std::vector<P> out;
    for (auto& n : nodes)
        if (n.left < 0) out.push_back(n.g);
    return out;
}

}  // namespace uni
}  // namespace rings
