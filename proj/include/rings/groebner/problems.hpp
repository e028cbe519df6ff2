#pragma once

/**
 * @file problems.hpp
 * @brief Katsura-n and cyclic-n benchmark systems.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "../multivar/multipoly.hpp"

namespace rings::gb {

inline std::vector<std::string> indexed_names(const std::string& base, std::size_t n) {
    std::vector<std::string> r;
    for (std::size_t i = 0; i < n; ++i) r.push_back(base + std::to_string(i));
    return r;
}

/// katsura-n in u0..un: u0 + 2(u1 + .. + un) - 1 and, for m < n,
/// sum_{l=-n..n} u_|l| u_|m-l| - u_m (u_k = 0 for k > n).
template <class D>
std::vector<multi::Poly<D>> katsura(const D& d, std::size_t n, MonomialOrder o = MonomialOrder::GrevLex) {
    const std::size_t nv = n + 1;
    auto u = [&](long k) { return multi::variable(d, nv, static_cast<std::size_t>(k), o); };
    std::vector<multi::Poly<D>> r;
    auto lin = multi::constant(d, nv, o, d.from_int(-1));
    lin = multi::add(d, lin, u(0));
    for (std::size_t i = 1; i <= n; ++i) lin = multi::add(d, lin, multi::scale(d, u(static_cast<long>(i)), d.from_int(2)));
    r.push_back(lin);
    const long ln = static_cast<long>(n);
    for (long m = 0; m < ln; ++m) {
        multi::Poly<D> p(nv, o);
        for (long l = -ln; l <= ln; ++l) {
            long a = l < 0 ? -l : l, b = m - l < 0 ? l - m : m - l;
            if (b > ln) continue;
            p = multi::add(d, p, multi::mul(d, u(a), u(b)));
        }
        r.push_back(multi::sub(d, p, u(m)));
    }
    return r;
}

/// cyclic-n in x0..x(n-1): the elementary cyclic sums of lengths 1..n-1
/// and x0*..*x(n-1) - 1.
template <class D>
std::vector<multi::Poly<D>> cyclic(const D& d, std::size_t n, MonomialOrder o = MonomialOrder::GrevLex) {
    std::vector<multi::Poly<D>> r;
    for (std::size_t len = 1; len < n; ++len) {
        multi::Poly<D> p(n, o);
        for (std::size_t i = 0; i < n; ++i) {
            DegreeVector m(n);
            for (std::size_t k = 0; k < len; ++k) m.set((i + k) % n, 1);
            p = multi::add(d, p, multi::monomial(d, n, o, d.one(), m));
        }
        r.push_back(p);
    }
    DegreeVector all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i, 1);
    r.push_back(multi::sub(d, multi::monomial(d, n, o, d.one(), all), multi::constant(d, n, o, d.one())));
    return r;
}

}  // namespace rings::gb
