#pragma once

/**
 * @file galois.hpp
 * @brief GF(p^k) as Zp[t] modulo a random irreducible polynomial of degree k.
 *
 *     GaloisField f(17, 3, "t");
 *     auto t = f.generator();
 *     f.format(f.add(f.one(), f.mul(t, t)));   // "1+t^2"
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "univar/factor_ff.hpp"
#include "univar/gcd.hpp"
#include "univar/newton.hpp"
#include "zp.hpp"

namespace rings {

/// Random monic irreducible polynomial of degree k over Zp.
inline UniPoly<std::uint64_t> gf_minimal_polynomial(std::uint64_t p, int k, std::uint64_t seed = 1) {
    if (k < 1) throw std::invalid_argument("extension degree must be positive");
    Zp64 f(p);
    Rng rng(seed);
    for (;;) {
        UniPoly<std::uint64_t> m;
        for (int i = 0; i < k; ++i) m.c.push_back(f.random(rng));
        m.c.push_back(1);
        if (uni::is_irreducible(f, m)) return m;
    }
}

class GaloisField {
public:
    using Elem = UniPoly<std::uint64_t>;
    static constexpr bool is_field = true;
    static constexpr bool is_euclidean = true;

    GaloisField(std::uint64_t p, int k, std::string name = "t", std::uint64_t seed = 1)
        : GaloisField(Zp64(p), gf_minimal_polynomial(p, k, seed), std::move(name)) {}

    GaloisField(Zp64 base, Elem minimal, std::string name)
        : base_(std::move(base)), min_(std::move(minimal)), name_(std::move(name)) {
        if (min_.degree() < 1) throw std::invalid_argument("minimal polynomial must have positive degree");
        min_ = uni::monic(base_, min_);
        if (!uni::is_irreducible(base_, min_)) throw std::invalid_argument("minimal polynomial is reducible");
        if (min_.degree() >= uni::kNewtonDivisionThreshold) {
            inv_ = std::make_shared<InverseModMonomial<Zp64>>(base_, min_);
            inv_->inverse(static_cast<std::size_t>(min_.degree()));
        }
        order_ = pow_ui(rings::from_u64(base_.p()), static_cast<unsigned long>(min_.degree()));
    }

    const Zp64& base() const { return base_; }
    const Elem& minimal_polynomial() const { return min_; }
    const std::string& name() const { return name_; }
    int degree() const { return min_.degree(); }

    bool is_finite() const { return true; }
    Integer characteristic() const { return base_.characteristic(); }
    std::optional<Integer> cardinality() const { return order_; }
    Integer order() const { return order_; }

    Elem zero() const { return {}; }
    Elem one() const { return uni::constant(base_, base_.one()); }
    Elem generator() const { return reduce(uni::monomial(base_, base_.one(), 1)); }
    Elem from_int(long v) const { return uni::constant(base_, base_.from_int(v)); }
    Elem from_integer(const Integer& v) const { return uni::constant(base_, base_.from_integer(v)); }
    Elem from_base(std::uint64_t v) const { return uni::constant(base_, base_.from_u64(v)); }

    Elem add(const Elem& a, const Elem& b) const { return uni::add(base_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return uni::sub(base_, a, b); }
    Elem neg(const Elem& a) const { return uni::neg(base_, a); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(uni::mul(base_, a, b)); }
    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw ArithmeticError("division by zero");
        auto x = uni::xgcd(base_, a, min_);
        return x.s;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.c.size() == 1 && a.c[0] == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return !a.is_zero(); }
    bool is_negative(const Elem&) const { return false; }
    Elem normalizer(const Elem& a) const { return a.is_zero() ? one() : inv(a); }
    Elem gcd(const Elem& a, const Elem& b) const { return (a.is_zero() && b.is_zero()) ? zero() : one(); }
    std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const { return div(a, b); }
    std::pair<Elem, Elem> divrem(const Elem& a, const Elem& b) const { return {div(a, b), zero()}; }

    /// a^(p^(k-1)), the inverse of the Frobenius map.
    Elem pth_root(const Elem& a) const {
        Elem r = a;
        for (int i = 1; i < degree(); ++i) r = power(*this, r, base_.p());
        return r;
    }

    Elem reduce(const Elem& a) const {
        if (a.degree() < min_.degree()) return a;
        if (inv_) return inv_->rem(a);
        return uni::divrem_classical(base_, a, min_).second;
    }

    Elem random(Rng& rng) const {
        Elem r;
        for (int i = 0; i < degree(); ++i) r.c.push_back(base_.random(rng));
        uni::normalize(base_, r);
        return r;
    }

    std::optional<Elem> symbol(const std::string& s) const {
        if (s == name_) return generator();
        return std::nullopt;
    }

    std::string format(const Elem& a) const { return uni::format(base_, a, name_); }
    std::string describe() const {
        return "GF(" + std::to_string(base_.p()) + "," + std::to_string(degree()) + "," + name_ + ")";
    }

private:
    Zp64 base_;
    Elem min_;
    std::string name_;
    Integer order_;
    std::shared_ptr<InverseModMonomial<Zp64>> inv_;
};

}  // namespace rings
