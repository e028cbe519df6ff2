#pragma once

/**
 * @file ring.hpp
 * @brief R[x1..xn] as a domain: variable names, monomial order, and the
 *        element operations routed to namespace `multi`.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "gcd.hpp"
#include "multipoly.hpp"

namespace rings {

template <class D>
class MultiPolyRing {
public:
    using Coef = D;
    using Elem = MultiPoly<typename D::Elem>;
    static constexpr bool is_field = false;
    static constexpr bool is_euclidean = false;

    MultiPolyRing(D coef, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::GrevLex)
        : d_(std::move(coef)), vars_(std::move(vars)), order_(order) {
        if (vars_.empty()) throw std::invalid_argument("polynomial ring needs at least one variable");
    }

    const D& coef() const { return d_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    MonomialOrder order() const { return order_; }

    /// Same variables under another order.
    MultiPolyRing with_order(MonomialOrder o) const { return MultiPolyRing(d_, vars_, o); }

    bool is_finite() const { return false; }
    Integer characteristic() const { return d_.characteristic(); }
    std::optional<Integer> cardinality() const { return std::nullopt; }

    Elem zero() const { return Elem(nvars(), order_); }
    Elem one() const { return from_coef(d_.one()); }
    Elem from_int(long v) const { return from_coef(d_.from_int(v)); }
    Elem from_integer(const Integer& v) const { return from_coef(d_.from_integer(v)); }
    Elem from_coef(typename D::Elem c) const { return multi::constant(d_, nvars(), order_, std::move(c)); }
    Elem variable(std::size_t i) const { return multi::variable(d_, nvars(), i, order_); }
    Elem monomial(typename D::Elem c, DegreeVector m) const {
        return multi::monomial(d_, nvars(), order_, std::move(c), std::move(m));
    }

    Elem add(const Elem& a, const Elem& b) const { return multi::add(d_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return multi::sub(d_, a, b); }
    Elem neg(const Elem& a) const { return multi::neg(d_, a); }
    Elem mul(const Elem& a, const Elem& b) const { return multi::mul(d_, a, b); }
    Elem scale(const Elem& a, const typename D::Elem& c) const { return multi::scale(d_, a, c); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_constant() && !a.is_zero() && d_.is_one(a.lc()); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a.is_constant() && !a.is_zero() && d_.is_unit(a.lc()); }
    bool is_negative(const Elem& a) const {
        if (a.is_zero()) return false;
        if constexpr (requires { d_.is_negative(a.lc()); }) return d_.is_negative(a.lc());
        return false;
    }
    Elem normalizer(const Elem& a) const { return a.is_zero() ? one() : from_coef(d_.normalizer(a.lc())); }

    Elem gcd(const Elem& a, const Elem& b) const { return multi::gcd(d_, a, b); }
    std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const {
        if (b.is_zero()) throw ArithmeticError("division by zero");
        return multi::divide_exact(d_, a, b);
    }
    MultiFactors<D> factor(const Elem& a) const { return multi::factor(d_, a); }
    MultiFactors<D> squarefree(const Elem& a) const { return multi::squarefree(d_, a); }

    Elem inv(const Elem& a) const {
        if (!is_unit(a)) throw ArithmeticError("polynomial is not invertible");
        return from_coef(*d_.divide_exact(d_.one(), a.lc()));
    }

    /// Small random element: up to 4 terms with exponents below 3.
    Elem random(Rng& rng) const {
        Elem r = zero();
        std::size_t terms = 1 + rng() % 4;
        for (std::size_t k = 0; k < terms; ++k) {
            DegreeVector m(nvars());
            for (std::size_t i = 0; i < nvars(); ++i) m.set(i, static_cast<std::uint32_t>(rng() % 3));
            r.terms.push_back({std::move(m), d_.random(rng)});
        }
        multi::normalize(d_, r);
        return r;
    }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    std::optional<Elem> symbol(const std::string& name) const {
        if (auto i = index_of(name)) return variable(*i);
        if constexpr (requires { d_.symbol(name); }) {
            auto s = d_.symbol(name);
            if (s) return from_coef(*s);
        }
        return std::nullopt;
    }

    std::string format(const Elem& a) const { return multi::format(d_, a, vars_); }
    std::string describe() const {
        std::string v;
        for (const auto& s : vars_) v += (v.empty() ? "" : ",") + s;
        return d_.describe() + "[" + v + "]";
    }

private:
    D d_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

}  // namespace rings
