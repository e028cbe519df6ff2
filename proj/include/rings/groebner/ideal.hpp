#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of a multivariate polynomial ring over a field, stored by
 *        their reduced Groebner basis.
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../multivar/ring.hpp"
#include "buchberger.hpp"

namespace rings {

template <class D>
class Ideal {
public:
    using Poly = multi::Poly<D>;

    /// Basis for the order of `ring` (GREVLEX unless the ring says otherwise).
    Ideal(const MultiPolyRing<D>& ring, std::vector<Poly> generators)
        : Ideal(ring, std::move(generators), ring.order()) {}

    Ideal(const MultiPolyRing<D>& ring, std::vector<Poly> generators, MonomialOrder order)
        : ring_(ring.with_order(order)), gens_(std::move(generators)) {
        for (const auto& g : gens_)
            if (g.nvars != ring_.nvars()) throw std::invalid_argument("generator from a different ring");
        basis_ = gb::groebner_basis(ring_.coef(), gens_, order);
    }

    const MultiPolyRing<D>& ring() const { return ring_; }
    MonomialOrder order() const { return ring_.order(); }
    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<Poly>& basis() const { return basis_; }

    /// Normal form of f; f must use this ideal's variables and order.
    Poly reduce(const Poly& f) const {
        if (f.nvars != ring_.nvars() || f.order != order())
            throw std::invalid_argument("polynomial ring or order differs from the ideal's");
        return gb::normal_form(ring_.coef(), f, basis_);
    }

    bool contains(const Poly& f) const { return reduce(f).is_zero(); }
    bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant(); }

    std::string format() const {
        std::string s = "<";
        for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + ring_.format(basis_[i]);
        return s + ">";
    }

private:
    MultiPolyRing<D> ring_;
    std::vector<Poly> gens_;
    std::vector<Poly> basis_;
};

}  // namespace rings
