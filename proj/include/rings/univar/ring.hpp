#pragma once

/**
 * @file ring.hpp
 * @brief R[x] as a domain, so univariate polynomials can serve as
 *        coefficients, fraction components or Euclidean ring elements.
 */

#include <optional>
#include <string>
#include <utility>

#include "factor_z.hpp"
#include "gcd.hpp"
#include "newton.hpp"
#include "unipoly.hpp"

namespace rings {

template <class D>
class UniPolyRing {
public:
    using Coef = D;
    using Elem = UniPoly<typename D::Elem>;
    static constexpr bool is_field = false;
    static constexpr bool is_euclidean = D::is_field;

    explicit UniPolyRing(D coef, std::string var = "x", int random_degree = 5)
        : d_(std::move(coef)), var_(std::move(var)), random_degree_(random_degree) {}

    const D& coef() const { return d_; }
    const std::string& variable_name() const { return var_; }

    bool is_finite() const { return false; }
    Integer characteristic() const { return d_.characteristic(); }
    std::optional<Integer> cardinality() const { return std::nullopt; }

    Elem zero() const { return {}; }
    Elem one() const { return uni::constant(d_, d_.one()); }
    Elem variable() const { return uni::monomial(d_, d_.one(), 1); }
    Elem from_int(long v) const { return uni::constant(d_, d_.from_int(v)); }
    Elem from_integer(const Integer& v) const { return uni::constant(d_, d_.from_integer(v)); }
    Elem from_coef(typename D::Elem v) const { return uni::constant(d_, std::move(v)); }

    Elem add(const Elem& a, const Elem& b) const { return uni::add(d_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return uni::sub(d_, a, b); }
    Elem neg(const Elem& a) const { return uni::neg(d_, a); }
    Elem mul(const Elem& a, const Elem& b) const { return uni::mul(d_, a, b); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.c.size() == 1 && d_.is_one(a.c[0]); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const {
        if (a.degree() != 0) return false;
        if constexpr (D::is_field) return true;
        else return d_.is_unit(a.c[0]);
    }
    bool is_negative(const Elem& a) const {
        if (a.is_zero()) return false;
        if constexpr (requires { d_.is_negative(a.lc()); }) return d_.is_negative(a.lc());
        return false;
    }
    Elem normalizer(const Elem& a) const {
        if (a.is_zero()) return one();
        return uni::constant(d_, d_.normalizer(a.lc()));
    }

    Elem gcd(const Elem& a, const Elem& b) const {
        if (a.is_zero() && b.is_zero()) return {};
        return uni::gcd(d_, a, b);
    }
    std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const { return uni::divide_exact(d_, a, b); }
    std::pair<Elem, Elem> divrem(const Elem& a, const Elem& b) const { return uni::divrem(d_, a, b); }
    Elem inv(const Elem& a) const {
        if (!is_unit(a)) throw ArithmeticError("polynomial is not invertible");
        return uni::constant(d_, *d_.divide_exact(d_.one(), a.c[0]));
    }

    Elem random(Rng& rng) const {
        Elem r;
        int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(random_degree_ + 1));
        for (int i = 0; i <= deg; ++i) r.c.push_back(d_.random(rng));
        uni::normalize(d_, r);
        return r;
    }

    std::optional<Elem> symbol(const std::string& name) const {
        if (name == var_) return variable();
        if constexpr (requires { d_.symbol(name); }) {
            auto s = d_.symbol(name);
            if (s) return from_coef(*s);
        }
        return std::nullopt;
    }

    std::string format(const Elem& a) const { return uni::format(d_, a, var_); }
    std::string describe() const { return d_.describe() + "[" + var_ + "]"; }

    /// Factorization in R[x] (Z, Q and finite fields).
    FactorDecomposition<Elem, Elem> factor(const Elem& a) const {
        auto f = uni::factor(d_, a);
        FactorDecomposition<Elem, Elem> out;
        out.unit = from_coef(f.unit);
        out.factors = std::move(f.factors);
        out.exponents = std::move(f.exponents);
        return out;
    }

private:
    D d_;
    std::string var_;
    int random_degree_;
};

}  // namespace rings
