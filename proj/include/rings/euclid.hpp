#pragma once

/**
 * @file euclid.hpp
 * @brief Extended Euclid and multi-argument Diophantine solving over any
 *        Euclidean domain.
 */

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "domain.hpp"
#include "errors.hpp"

namespace rings {

template <class E>
struct ExtendedGcd {
    E g, s, t;
};

/// g = s a + t b with g = gcd(a, b) in canonical form.
template <class D>
ExtendedGcd<typename D::Elem> extended_gcd(const D& d, const typename D::Elem& a, const typename D::Elem& b) {
    static_assert(D::is_euclidean, "extended gcd needs a Euclidean domain");
    using E = typename D::Elem;
    E old_r = a, r = b;
    E old_s = d.one(), s = d.zero();
    E old_t = d.zero(), t = d.one();
    while (!d.is_zero(r)) {
        E q = d.divrem(old_r, r).first;
        E nr = d.sub(old_r, d.mul(q, r));
        old_r = std::exchange(r, std::move(nr));
        E ns = d.sub(old_s, d.mul(q, s));
        old_s = std::exchange(s, std::move(ns));
        E nt = d.sub(old_t, d.mul(q, t));
        old_t = std::exchange(t, std::move(nt));
    }
    E u = d.normalizer(old_r);
    if (!d.is_one(u)) {
        old_r = d.mul(old_r, u);
        old_s = d.mul(old_s, u);
        old_t = d.mul(old_t, u);
    }
    return {old_r, old_s, old_t};
}

template <class E>
struct DiophantineSolution {
    E gcd;
    std::vector<E> x;
};

/// sum f_i x_i = gcd(f_1..f_n), by a left fold of extended_gcd.
template <class D>
DiophantineSolution<typename D::Elem> solve_diophantine(const D& d, const std::vector<typename D::Elem>& f) {
    if (f.empty()) throw std::invalid_argument("empty Diophantine system");
    DiophantineSolution<typename D::Elem> r{d.zero(), {}};
    for (const auto& fi : f) {
        auto x = extended_gcd(d, r.gcd, fi);
        for (auto& v : r.x) v = d.mul(v, x.s);
        r.x.push_back(x.t);
        r.gcd = std::move(x.g);
    }
    return r;
}

}  // namespace rings
