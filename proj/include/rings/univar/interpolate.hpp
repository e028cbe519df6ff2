#pragma once

/**
 * @file interpolate.hpp
 * @brief Lagrange interpolation over a field (Newton divided differences).
 */

#include <stdexcept>
#include <vector>

#include "unipoly.hpp"

namespace rings {
namespace uni {

/// The unique polynomial of degree < n through (points[i], values[i]).
template <class D>
Poly<D> interpolate(const D& d, const std::vector<typename D::Elem>& points,
                    const std::vector<typename D::Elem>& values) {
    static_assert(D::is_field, "interpolation needs a coefficient field");
    if (points.size() != values.size()) throw std::invalid_argument("points and values differ in length");
    std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d.equal(points[i], points[j])) throw std::invalid_argument("duplicate interpolation point");
    std::vector<typename D::Elem> coef = values;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i)
            coef[i] = d.div(d.sub(coef[i], coef[i - 1]), d.sub(points[i], points[i - k]));
    Poly<D> r;
    for (std::size_t i = n; i-- > 0;) {
        Poly<D> lin{{d.neg(points[i]), d.one()}};
        r = add(d, mul(d, r, lin), constant(d, coef[i]));
    }
    return r;
}

}  // namespace uni
}  // namespace rings
