#pragma once

/**
 * @file factors.hpp
 * @brief Factor decomposition container shared by the factorization routines.
 */

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace rings {

/// unit * prod factors[i]^exponents[i]
template <class P, class U>
struct FactorDecomposition {
    U unit;
    std::vector<P> factors;
    std::vector<unsigned> exponents;

    std::size_t size() const { return factors.size(); }

    void add(P f, unsigned e) {
        factors.push_back(std::move(f));
        exponents.push_back(e);
    }

    /// Total number of factors counted with multiplicity.
    unsigned count_with_multiplicity() const {
        unsigned n = 0;
        for (unsigned e : exponents) n += e;
        return n;
    }

    /// Stable sort with less(f_a, e_a, f_b, e_b).
    template <class Less>
    void sort(Less less) {
        std::vector<std::size_t> idx(factors.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return less(factors[a], exponents[a], factors[b], exponents[b]);
        });
        std::vector<P> f;
        std::vector<unsigned> e;
        for (auto i : idx) {
            f.push_back(std::move(factors[i]));
            e.push_back(exponents[i]);
        }
        factors = std::move(f);
        exponents = std::move(e);
    }
};

}  // namespace rings
