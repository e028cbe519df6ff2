#include <gtest/gtest.h>

#include <chrono>

#include "rings/galois.hpp"
#include "rings/multivar/factor.hpp"
#include "rings/multivar/squarefree.hpp"

using namespace rings;

namespace {

template <class D>
multi::Poly<D> random_poly(const D& d, std::size_t nvars, std::size_t terms, std::uint32_t maxdeg, Rng& rng) {
    multi::Poly<D> p(nvars, MonomialOrder::GrevLex);
    for (std::size_t k = 0; k < terms; ++k) {
        DegreeVector m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m.set(i, static_cast<std::uint32_t>(rng() % (maxdeg + 1)));
        auto c = d.random(rng);
        if (d.is_zero(c)) c = d.one();
        p.terms.push_back({std::move(m), c});
    }
    p.terms.push_back({DegreeVector(nvars), d.one()});
    multi::normalize(d, p);
    return p;
}

template <class D>
multi::Poly<D> var(const D& d, std::size_t n, std::size_t i) {
    return multi::variable(d, n, i);
}

template <class D>
multi::Poly<D> cst(const D& d, std::size_t n, long v) {
    return multi::constant(d, n, MonomialOrder::GrevLex, d.from_int(v));
}

template <class D>
multi::Poly<D> expand(const D& d, const MultiFactors<D>& f, std::size_t n) {
    auto r = multi::constant(d, n, MonomialOrder::GrevLex, f.unit);
    for (std::size_t i = 0; i < f.size(); ++i) r = multi::mul(d, r, multi::pow(d, f.factors[i], f.exponents[i]));
    return r;
}

template <class D>
void expect_valid(const D& d, const multi::Poly<D>& f, const MultiFactors<D>& fs) {
    EXPECT_EQ(expand(d, fs, f.nvars), f);
    for (const auto& g : fs.factors) {
        EXPECT_FALSE(g.is_constant());
        EXPECT_EQ(multi::canonical(d, g), g);
    }
}

}  // namespace

TEST(MultiFactor, DifferenceOfSquares) {
    IntegerRing z;
    auto x = var(z, 2, 0), y = var(z, 2, 1);
    auto f = multi::sub(z, multi::mul(z, x, x), multi::mul(z, y, y));
    auto fs = multi::factor(z, f);
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs.unit, 1);
    expect_valid(z, f, fs);
    for (const auto& g : fs.factors) {
        EXPECT_TRUE(g == multi::sub(z, x, y) || g == multi::add(z, x, y));
    }
}

TEST(MultiFactor, IntegerProductOfThree) {
    IntegerRing z;
    Rng rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        auto a = random_poly(z, 3, 5, 3, rng), b = random_poly(z, 3, 5, 3, rng), c = random_poly(z, 3, 5, 3, rng);
        auto f = multi::mul(z, multi::mul(z, a, b), c);
        auto fs = multi::factor(z, f);
        EXPECT_GE(fs.count_with_multiplicity(), 3u);
        expect_valid(z, f, fs);
    }
}

TEST(MultiFactor, PrimeFieldProductOfThreeFourVariables) {
    Zp64 f(524287);
    Rng rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        auto a = random_poly(f, 4, 6, 3, rng), b = random_poly(f, 4, 6, 3, rng), c = random_poly(f, 4, 6, 3, rng);
        auto p = multi::mul(f, multi::mul(f, a, b), c);
        auto fs = multi::factor(f, p);
        EXPECT_GE(fs.count_with_multiplicity(), 3u);
        expect_valid(f, p, fs);
    }
}

TEST(MultiFactor, ProductPlusOneIsIrreducible) {
    IntegerRing z;
    Zp64 f(524287);
    Rng rng(17);
    auto a = random_poly(z, 3, 5, 3, rng), b = random_poly(z, 3, 5, 3, rng);
    auto g = multi::add(z, multi::mul(z, a, b), cst(z, 3, 1));
    EXPECT_EQ(multi::factor(z, g).count_with_multiplicity(), 1u);
    auto ap = random_poly(f, 3, 5, 3, rng), bp = random_poly(f, 3, 5, 3, rng);
    auto gp = multi::add(f, multi::mul(f, ap, bp), cst(f, 3, 1));
    EXPECT_EQ(multi::factor(f, gp).count_with_multiplicity(), 1u);
    EXPECT_TRUE(multi::is_irreducible(f, gp));
}

TEST(MultiFactor, NonMonicLeadingCoefficients) {
    IntegerRing z;
    auto x = var(z, 3, 0), y = var(z, 3, 1), w = var(z, 3, 2);
    auto one = cst(z, 3, 1);
    // monomial leading coefficient x y^3 z spread over the factors
    auto a = multi::add(z, multi::mul(z, x, y), one);
    auto b = multi::add(z, multi::mul(z, x, multi::mul(z, y, y)), w);
    auto c = multi::add(z, multi::add(z, multi::mul(z, multi::mul(z, x, x), w), y), one);
    auto f = multi::mul(z, multi::mul(z, a, b), c);
    auto fs = multi::factor(z, f);
    EXPECT_EQ(fs.size(), 3u);
    expect_valid(z, f, fs);
    // leading coefficients that are not monomials
    auto d1 = multi::add(z, multi::mul(z, x, multi::add(z, y, w)), one);
    auto d2 = multi::add(z, multi::mul(z, x, multi::sub(z, y, w)), cst(z, 3, 2));
    auto g = multi::mul(z, d1, d2);
    auto gs = multi::factor(z, g);
    EXPECT_EQ(gs.size(), 2u);
    expect_valid(z, g, gs);
    Zp64 p(1000003);
    auto gp = multi::detail::reduce_mod(g, p);
    auto gps = multi::factor(p, gp);
    EXPECT_EQ(gps.size(), 2u);
    expect_valid(p, gp, gps);
}

TEST(MultiFactor, Multiplicities) {
    IntegerRing z;
    auto x = var(z, 3, 0), y = var(z, 3, 1), w = var(z, 3, 2);
    auto a = multi::add(z, multi::mul(z, x, y), multi::add(z, w, cst(z, 3, 3)));
    auto b = multi::sub(z, multi::mul(z, x, x), multi::mul(z, y, w));
    auto f = multi::scale(z, multi::mul(z, multi::mul(z, multi::pow(z, a, 2), multi::pow(z, b, 3)), x), Integer(-6));
    auto fs = multi::factor(z, f);
    expect_valid(z, f, fs);
    EXPECT_EQ(fs.unit, -6);
    EXPECT_EQ(fs.count_with_multiplicity(), 6u);
    auto sq = multi::squarefree(z, f);
    EXPECT_EQ(expand(z, sq, 3), f);
    for (std::size_t i = 0; i < sq.size(); ++i)
        for (std::size_t j = i + 1; j < sq.size(); ++j)
            EXPECT_TRUE(multi::gcd(z, sq.factors[i], sq.factors[j]).is_constant());
}

TEST(MultiFactor, Rationals) {
    Rationals q;
    IntegerRing z;
    auto x = var(z, 2, 0), y = var(z, 2, 1);
    auto a = multi::add(z, x, multi::scale(z, y, Integer(2)));
    auto b = multi::sub(z, multi::scale(z, x, Integer(3)), y);
    auto f = multi::scale(q, multi::detail::to_rationals(multi::mul(z, a, b)), Rational{1, 5});
    auto fs = multi::factor(q, f);
    ASSERT_EQ(fs.size(), 2u);
    expect_valid(q, f, fs);
    for (const auto& g : fs.factors) EXPECT_TRUE(q.is_one(g.lc()));
}

TEST(MultiFactor, GaloisField) {
    GaloisField gf(17, 3);
    Rng rng(3);
    auto a = random_poly(gf, 3, 4, 2, rng), b = random_poly(gf, 3, 4, 2, rng);
    auto f = multi::mul(gf, a, b);
    auto fs = multi::factor(gf, f);
    EXPECT_GE(fs.size(), 2u);
    expect_valid(gf, f, fs);
}

TEST(MultiFactor, PositiveCharacteristic) {
    Zp64 f(5);
    auto x = var(f, 2, 0), y = var(f, 2, 1);
    auto s = multi::add(f, x, y);
    auto p5 = multi::pow(f, s, 5);
    auto fs = multi::factor(f, p5);
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs.exponents[0], 5u);
    EXPECT_EQ(fs.factors[0], s);
    auto g = multi::mul(f, multi::add(f, multi::pow(f, x, 5), y),
                        multi::pow(f, multi::add(f, multi::mul(f, x, y), cst(f, 2, 1)), 2));
    auto gs = multi::factor(f, g);
    expect_valid(f, g, gs);
    EXPECT_EQ(gs.count_with_multiplicity(), 3u);
}

TEST(MultiFactor, ZeroAndConstants) {
    IntegerRing z;
    EXPECT_THROW(multi::factor(z, multi::Poly<IntegerRing>(2, MonomialOrder::GrevLex)), ArithmeticError);
    auto c = multi::factor(z, cst(z, 2, -4));
    EXPECT_EQ(c.size(), 0u);
    EXPECT_EQ(c.unit, -4);
}
