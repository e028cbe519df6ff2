#pragma once

/**
 * @file factor_z.hpp
 * @brief Factorization over Z and Q: modular image, Hensel lifting above the
 *        Mignotte bound and naive subset recombination.
 */

#include <stdexcept>
#include <type_traits>
#include <vector>

#include "factor_ff.hpp"
#include "hensel.hpp"

namespace rings {
namespace uni {

/// 2^deg * ||f||_2 * |lc(f)|
inline Integer mignotte_bound(const Poly<IntegerRing>& f) {
    return (Integer(1) << f.degree()) * l2_norm_bound(f) * abs(f.lc());
}

/// Calls visit(indices) for each k-subset of {0..n-1} in lexicographic
/// order until visit returns true; returns whether it did.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit visit) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

namespace detail {

inline Poly<IntegerRing> symmetric_poly(const Poly<IntegerRing>& a, const Integer& m) {
    Poly<IntegerRing> r;
    for (const auto& v : a.c) r.c.push_back(symmetric_mod(v, m));
    normalize(IntegerRing(), r);
    return r;
}

/// Recombines lifted monic factors of f modulo m into irreducibles over Z.
inline std::vector<Poly<IntegerRing>> recombine(Poly<IntegerRing> f, std::vector<Poly<IntegerRing>> lifted,
                                                const Integer& m) {
    IntegerRing z;
    IntegersMod r(m);
    std::vector<Poly<IntegerRing>> out;
    for (std::size_t s = 1; 2 * s <= lifted.size(); ++s) {
        for (;;) {
            std::vector<std::size_t> found;
            Poly<IntegerRing> found_q, found_f;
            for_each_subset(lifted.size(), s, [&](const std::vector<std::size_t>& idx) {
                Poly<IntegerRing> prod = constant(r, r.from_integer(f.lc()));
                for (auto i : idx) prod = mul(r, prod, lifted[i]);
                Poly<IntegerRing> cand = primitive_part(z, symmetric_poly(prod, m));
                if (sgn(cand.c[0]) != 0 && !divisible(f.c[0], cand.c[0])) return false;
                auto q = divide_exact(z, f, cand);
                if (!q) return false;
                found = idx;
                found_q = std::move(*q);
                found_f = std::move(cand);
                return true;
            });
            if (found.empty()) break;
            out.push_back(std::move(found_f));
            f = std::move(found_q);
            std::vector<Poly<IntegerRing>> rest;
            for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
                if (j < found.size() && found[j] == i) ++j;
                else rest.push_back(std::move(lifted[i]));
            }
            lifted = std::move(rest);
            if (2 * s > lifted.size()) break;
        }
    }
    if (f.degree() > 0) out.push_back(primitive_part(z, f));
    return out;
}

}  // namespace detail

/// Smallest prime >= 2^30 keeping f square-free and of full degree.
inline std::uint64_t choose_factor_prime(const Poly<IntegerRing>& f) {
    std::uint64_t p = std::uint64_t(1) << 30;
    for (;;) {
        p = next_prime(p);
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
        Zp64 fp(p, false);
        if (is_squarefree(fp, reduce_mod(f, fp))) return p;
    }
}

/// Irreducible factors of a primitive square-free f with positive lc.
inline std::vector<Poly<IntegerRing>> factor_squarefree_z(const Poly<IntegerRing>& f) {
    if (f.degree() <= 1) return {f};
    std::uint64_t p = choose_factor_prime(f);
    Zp64 fp(p, false);
    auto image = factor_ff(fp, reduce_mod(f, fp));
    if (image.size() == 1) return {f};
    Integer bound = 2 * mignotte_bound(f) + 1;
    Integer P = from_u64(p);
    unsigned k = 1;
    for (Integer pk = P; pk <= bound; pk *= P) ++k;
    PadicContext ctx{P};
    auto lifted = hensel_lift(
        ctx, fp, image.factors, k, [](std::uint64_t v) { return from_u64(v); },
        [&](const IntegersMod& r) {
            Poly<IntegerRing> g;
            for (const auto& v : f.c) g.c.push_back(r.reduce(v));
            return scale(r, g, r.inv(r.reduce(f.lc())));
        });
    return detail::recombine(f, std::move(lifted), pow_ui(P, k));
}

/// Factorization over Z: content * prod f_i^e_i, f_i primitive with
/// positive lc, ordered by (degree, exponent).
inline UniFactors<IntegerRing> factor_z(const Poly<IntegerRing>& f) {
    IntegerRing z;
    UniFactors<IntegerRing> sqf = squarefree(z, f);
    UniFactors<IntegerRing> out;
    out.unit = sqf.unit;
    for (std::size_t i = 0; i < sqf.size(); ++i)
        for (auto& g : factor_squarefree_z(sqf.factors[i])) out.add(std::move(g), sqf.exponents[i]);
    out.sort([](const Poly<IntegerRing>& a, unsigned ea, const Poly<IntegerRing>& b, unsigned eb) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (ea != eb) return ea < eb;
        return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
    });
    return out;
}

/// Factorization over Q with monic factors.
inline UniFactors<Rationals> factor_q(const Poly<Rationals>& f) {
    Rationals q;
    if (f.is_zero()) throw ArithmeticError("factorization of zero");
    auto zf = factor_z(clear_denominators(f));
    UniFactors<Rationals> out;
    out.unit = f.lc();
    for (std::size_t i = 0; i < zf.size(); ++i) out.add(monic(q, to_rationals(zf.factors[i])), zf.exponents[i]);
    return out;
}

/// Factorization over Z, Q or a finite field.
template <class D>
UniFactors<D> factor(const D& d, const Poly<D>& f) {
    if (f.is_zero()) throw ArithmeticError("factorization of zero");
    if constexpr (std::is_same_v<D, IntegerRing>) {
        return factor_z(f);
    } else if constexpr (is_rationals_v<D>) {
        return factor_q(f);
    } else if constexpr (FiniteFieldDomain<D>) {
        return factor_ff(d, f);
    } else {
        throw UnsupportedRingError("univariate factorization over " + d.describe());
    }
}

}  // namespace uni
}  // namespace rings
