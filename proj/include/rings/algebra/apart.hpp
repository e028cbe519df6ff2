#pragma once

/**
 * @file apart.hpp
 * @brief Partial fraction decomposition over Q and over Frac(F[x]).
 *
 * The denominator is factored into prime powers q_i, the cofactors d/q_i
 * are combined by solve_diophantine, and each n*x_i/(q_i*g) is split into
 * its integral and proper parts. Proper parts are sorted by the text of
 * their denominators; the summed integral part comes last when nonzero.
 */

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "../euclid.hpp"
#include "../frac.hpp"
#include "../primes.hpp"
#include "../univar/ring.hpp"

namespace rings {

namespace detail {

inline std::vector<Integer> prime_powers(const IntegerRing&, const Integer& n) {
    std::vector<Integer> out;
    if (n <= 1) return out;
    for (auto& [p, e] : factor_integer(n)) out.push_back(pow_ui(p, e));
    return out;
}

template <class F>
std::vector<UniPoly<typename F::Elem>> prime_powers(const UniPolyRing<F>& r, const UniPoly<typename F::Elem>& n) {
    std::vector<UniPoly<typename F::Elem>> out;
    if (n.degree() <= 0) return out;
    auto f = r.factor(n);
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(uni::pow(r.coef(), f.factors[i], f.exponents[i]));
    return out;
}

}  // namespace detail

/// Partial fractions of a reduced fraction over a Euclidean ring R (Z or F[x]).
template <class R>
std::vector<Fraction<typename R::Elem>> apart(const Frac<R>& q, const Fraction<typename R::Elem>& frac) {
    static_assert(R::is_euclidean, "apart needs a Euclidean ring");
    using E = typename R::Elem;
    const R& r = q.ring();
    if (r.is_zero(frac.den)) throw ArithmeticError("zero denominator");
    auto facs = detail::prime_powers(r, frac.den);
    if (facs.empty()) return {frac};
    std::vector<std::pair<std::string, std::size_t>> order;
    std::vector<E> cof;
    for (std::size_t i = 0; i < facs.size(); ++i) cof.push_back(*r.divide_exact(frac.den, facs[i]));
    for (std::size_t i = 0; i < facs.size(); ++i) order.emplace_back(r.format(cof[i]), i);
    std::sort(order.begin(), order.end());
    std::vector<E> sorted_facs, sorted_cof;
    for (auto& [key, i] : order) {
        sorted_facs.push_back(facs[i]);
        sorted_cof.push_back(cof[i]);
    }
    auto sol = solve_diophantine(r, sorted_cof);
    std::vector<Fraction<E>> rats;
    E integral = r.zero();
    for (std::size_t i = 0; i < sorted_facs.size(); ++i) {
        auto part = q.make(r.mul(frac.num, sol.x[i]), r.mul(sorted_facs[i], sol.gcd));
        auto [quo, rem] = r.divrem(part.num, part.den);
        integral = r.add(integral, quo);
        if (!r.is_zero(rem)) rats.push_back(q.make(rem, part.den));
    }
    std::stable_sort(rats.begin(), rats.end(), [&](const Fraction<E>& a, const Fraction<E>& b) {
        return r.format(a.den) < r.format(b.den);
    });
    if (!r.is_zero(integral) || rats.empty()) rats.push_back(q.embed(integral));
    return rats;
}

}  // namespace rings
