#pragma once

/**
 * @file vandermonde.hpp
 * @brief Transposed Vandermonde solve used by sparse interpolation.
 */

#include <cstddef>
#include <optional>
#include <vector>

namespace rings {

/// Solves sum_k c_k z_k^i = v_i for i = 0..n-1 in O(n^2) through the
/// master polynomial prod (x - z_k); nullopt when two nodes coincide.
template <class F>
std::optional<std::vector<typename F::Elem>> solve_vandermonde(const F& f, const std::vector<typename F::Elem>& z,
                                                               const std::vector<typename F::Elem>& v) {
    std::size_t n = z.size();
    // ascending coefficients of the master polynomial
    std::vector<typename F::Elem> m(n + 1, f.zero());
    m[0] = f.one();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = k + 1; i > 0; --i) m[i] = f.sub(m[i - 1], f.mul(z[k], m[i]));
        m[0] = f.neg(f.mul(z[k], m[0]));
    }
    std::vector<typename F::Elem> c(n);
    std::vector<typename F::Elem> qk(n);
    for (std::size_t k = 0; k < n; ++k) {
        // q_k = m / (x - z_k) by synthetic division from the top
        qk[n - 1] = m[n];
        for (std::size_t i = n - 1; i > 0; --i) qk[i - 1] = f.add(m[i], f.mul(z[k], qk[i]));
        auto num = f.zero(), den = f.zero();
        for (std::size_t i = n; i-- > 0;) {
            num = f.add(num, f.mul(qk[i], v[i]));
            den = f.add(f.mul(den, z[k]), qk[i]);
        }
        if (f.is_zero(den)) return std::nullopt;
        c[k] = f.div(num, den);
    }
    return c;
}

}  // namespace rings
