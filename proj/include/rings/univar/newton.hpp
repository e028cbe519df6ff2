#pragma once

/**
 * @file newton.hpp
 * @brief Division through a precomputed inverse of the reversed divider.
 *
 * For a divider b of degree m, the quotient of a (degree n) is the reversal
 * of rev(a) * rev(b)^-1 mod x^(n-m+1). The inverse is built by Newton
 * iteration g <- g(2 - rev(b) g) and cached at precisions 2^k, so repeated
 * divisions by the same b cost two multiplications each.
 *
 * Cache extension is guarded by a mutex, so one instance may be shared
 * between threads.
 */

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "unipoly.hpp"

namespace rings {

template <class D>
class InverseModMonomial {
public:
    using Poly = UniPoly<typename D::Elem>;

    InverseModMonomial(const D& d, Poly divider)
        : d_(d), b_(std::move(divider)), mutex_(std::make_shared<std::mutex>()) {
        if (b_.is_zero()) throw ArithmeticError("division by zero polynomial");
        rev_ = uni::reverse(d_, b_, static_cast<std::size_t>(b_.degree()));
        cache_.push_back(uni::constant(d_, d_.inv(b_.lc())));
    }

    const Poly& divider() const { return b_; }

    /// rev(b)^-1 mod x^(2^k) for the smallest 2^k >= n.
    Poly inverse(std::size_t n) const {
        std::lock_guard<std::mutex> lock(*mutex_);
        std::size_t k = 0;
        while ((std::size_t(1) << k) < n) ++k;
        while (cache_.size() <= k) {
            std::size_t prec = std::size_t(1) << cache_.size();
            Poly g = cache_.back();
            Poly fg = uni::truncate(d_, uni::mul(d_, uni::truncate(d_, rev_, prec), g), prec);
            Poly two = uni::constant(d_, d_.from_int(2));
            Poly next = uni::truncate(d_, uni::mul(d_, g, uni::sub(d_, two, fg)), prec);
            cache_.push_back(std::move(next));
        }
        return cache_[k];
    }

    /// Number of cached precisions.
    std::size_t cached() const {
        std::lock_guard<std::mutex> lock(*mutex_);
        return cache_.size();
    }

    std::pair<Poly, Poly> divrem(const Poly& a) const {
        int n = a.degree(), m = b_.degree();
        if (n < m) return {Poly{}, a};
        std::size_t k = static_cast<std::size_t>(n - m + 1);
        Poly g = uni::truncate(d_, inverse(k), k);
        Poly ra = uni::truncate(d_, uni::reverse(d_, a, static_cast<std::size_t>(n)), k);
        Poly qrev = uni::truncate(d_, uni::mul(d_, ra, g), k);
        Poly q = uni::reverse(d_, qrev, k - 1);
        if (m == 0) return {q, Poly{}};
        Poly r = uni::truncate(d_, uni::sub(d_, a, uni::mul(d_, q, b_)), static_cast<std::size_t>(m));
        return {std::move(q), std::move(r)};
    }

    Poly rem(const Poly& a) const {
        if (a.degree() < b_.degree()) return a;
        return divrem(a).second;
    }

private:
    D d_;
    Poly b_;
    Poly rev_;
    mutable std::vector<Poly> cache_;
    std::shared_ptr<std::mutex> mutex_;
};

namespace uni {

template <class D>
InverseModMonomial<D> precompute_inverse(const D& d, const Poly<D>& divider) {
    return InverseModMonomial<D>(d, divider);
}

template <class D>
std::pair<Poly<D>, Poly<D>> divrem_fast(const D&, const Poly<D>& a, const InverseModMonomial<D>& inv) {
    return inv.divrem(a);
}

inline constexpr int kNewtonDivisionThreshold = 48;

/// Division with remainder; Newton path over fields for large operands.
template <class D>
std::pair<Poly<D>, Poly<D>> divrem(const D& d, const Poly<D>& a, const Poly<D>& b) {
    if constexpr (D::is_field) {
        if (b.degree() >= kNewtonDivisionThreshold && a.degree() - b.degree() >= kNewtonDivisionThreshold) {
            InverseModMonomial<D> inv(d, b);
            return inv.divrem(a);
        }
    }
    return divrem_classical(d, a, b);
}

template <class D>
Poly<D> rem(const D& d, const Poly<D>& a, const Poly<D>& b) {
    if (a.degree() < b.degree()) return a;
    return divrem(d, a, b).second;
}

}  // namespace uni
}  // namespace rings
