#include <gtest/gtest.h>

#include "rings/univar/gcd.hpp"

using namespace rings;
using namespace rings::uni;

template <class D>
Poly<D> random_poly(const D& d, int deg, Rng& rng) {
    Poly<D> p;
    for (int i = 0; i <= deg; ++i) p.c.push_back(d.random(rng));
    if (d.is_zero(p.c.back())) p.c.back() = d.one();
    return p;
}

template <class D>
Poly<D> from_ints(const D& d, std::initializer_list<long> v) {
    Poly<D> p;
    for (long x : v) p.c.push_back(d.from_int(x));
    normalize(d, p);
    return p;
}

TEST(UniPoly, KaratsubaMatchesSchoolbook) {
    Zp64 f(17);
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        auto a = random_poly(f, 300, rng), b = random_poly(f, 100 + t * 20, rng);
        ASSERT_EQ(mul_karatsuba(f, a, b), mul_schoolbook(f, a, b));
    }
    IntegerRing z;
    for (int t = 0; t < 5; ++t) {
        auto a = random_poly(z, 200, rng), b = random_poly(z, 77, rng);
        ASSERT_EQ(mul_karatsuba(z, a, b), mul_schoolbook(z, a, b));
    }
}

TEST(UniPoly, LazySchoolbookLargePrime) {
    Zp64 f(18446744073709551557ull);
    ZpBig g(Integer("18446744073709551557"));
    Rng rng(2);
    auto a = random_poly(f, 40, rng), b = random_poly(f, 40, rng);
    Poly<ZpBig> A, B;
    for (auto v : a.c) A.c.push_back(from_u64(v));
    for (auto v : b.c) B.c.push_back(from_u64(v));
    auto c = mul_schoolbook(f, a, b);
    auto C = mul_schoolbook(g, A, B);
    ASSERT_EQ(c.c.size(), C.c.size());
    for (std::size_t i = 0; i < c.c.size(); ++i) EXPECT_EQ(from_u64(c.c[i]), C.c[i]);
}

TEST(UniPoly, NewtonMatchesClassical) {
    Zp64 f(1000003);
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        auto a = random_poly(f, 500, rng), b = random_poly(f, 200, rng);
        auto [q1, r1] = divrem_classical(f, a, b);
        InverseModMonomial<Zp64> inv(f, b);
        auto [q2, r2] = inv.divrem(a);
        ASSERT_EQ(q1, q2);
        ASSERT_EQ(r1, r2);
        ASSERT_EQ(add(f, mul(f, q1, b), r1), a);
        ASSERT_LT(r1.degree(), b.degree());
    }
}

TEST(UniPoly, NewtonCacheReused) {
    Zp64 f(17);
    Rng rng(4);
    auto b = random_poly(f, 60, rng);
    auto inv = precompute_inverse(f, b);
    auto a = random_poly(f, 400, rng);
    inv.divrem(a);
    std::size_t n = inv.cached();
    inv.divrem(random_poly(f, 300, rng));
    EXPECT_EQ(inv.cached(), n);
    EXPECT_EQ(inv.rem(a), divrem_classical(f, a, b).second);
}

TEST(UniPoly, EvaluateDerivativeCompose) {
    IntegerRing z;
    auto p = from_ints(z, {1, 2, 3});
    EXPECT_EQ(evaluate(z, p, Integer(2)), 17);
    EXPECT_EQ(derivative(z, p), from_ints(z, {2, 6}));
    EXPECT_EQ(compose(z, p, from_ints(z, {1, 1})), from_ints(z, {6, 8, 3}));
    EXPECT_EQ(pow(z, from_ints(z, {1, 1}), 3), from_ints(z, {1, 3, 3, 1}));
}

TEST(UniPoly, PseudoDivision) {
    IntegerRing z;
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        auto a = random_poly(z, 12, rng), b = random_poly(z, 5, rng);
        auto [q, r] = pseudo_divrem(z, a, b);
        Integer l = pow_ui(b.lc(), static_cast<unsigned long>(a.degree() - b.degree() + 1));
        ASSERT_EQ(add(z, mul(z, q, b), r), scale(z, a, l));
        ASSERT_LT(r.degree(), b.degree());
    }
}

TEST(UniGcd, HalfGcdMatchesEuclid) {
    Zp64 f(1000003);
    Rng rng(6);
    for (int t = 0; t < 200; ++t) {
        int dg = static_cast<int>(rng() % 300);
        auto g = random_poly(f, dg, rng);
        int da = static_cast<int>(rng() % (2000 - dg)), db = static_cast<int>(rng() % (2000 - dg));
        if (t % 4 == 0) {
            da = 1900 - dg;
            db = 1800 - dg;
        }
        auto a = mul(f, g, random_poly(f, da, rng)), b = mul(f, g, random_poly(f, db, rng));
        ASSERT_EQ(gcd_half(f, a, b), gcd_euclid(f, a, b)) << t;
    }
}

TEST(UniGcd, XgcdBezout) {
    Zp64 f(17);
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        auto g = random_poly(f, 3, rng);
        auto a = mul(f, g, random_poly(f, 10, rng)), b = mul(f, g, random_poly(f, 7, rng));
        auto r = xgcd(f, a, b);
        ASSERT_EQ(add(f, mul(f, r.s, a), mul(f, r.t, b)), r.g);
        ASSERT_EQ(r.g, gcd_euclid(f, a, b));
    }
}

template <class D>
bool divides(const D& d, const Poly<D>& a, const Poly<D>& b) {
    return b.is_zero() || divide_exact(d, b, a).has_value();
}

TEST(UniGcd, BrownOverIntegers) {
    IntegerRing z;
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        auto g = random_poly(z, static_cast<int>(rng() % 15), rng);
        auto a = mul(z, g, random_poly(z, static_cast<int>(rng() % 20), rng));
        auto b = mul(z, g, random_poly(z, static_cast<int>(rng() % 20), rng));
        auto h = gcd(z, a, b);
        ASSERT_TRUE(divides(z, h, a));
        ASSERT_TRUE(divides(z, h, b));
        ASSERT_TRUE(divides(z, primitive_part(z, g), h));
        ASSERT_EQ(h, gcd_subresultant(z, a, b));
        ASSERT_GT(sgn(h.lc()), 0);
        // cofactors are coprime over Q: the gcd of the cofactors is 1
        auto ca = *divide_exact(z, a, h), cb = *divide_exact(z, b, h);
        ASSERT_EQ(gcd(z, ca, cb).degree(), 0);
    }
}

TEST(UniGcd, ContentIncluded) {
    IntegerRing z;
    auto a = from_ints(z, {6, 6}), b = from_ints(z, {-4, 0, 4});
    EXPECT_EQ(gcd(z, a, b), from_ints(z, {2, 2}));
    EXPECT_EQ(gcd(z, from_ints(z, {6}), from_ints(z, {-4, 8})), from_ints(z, {2}));
    EXPECT_EQ(gcd(z, Poly<IntegerRing>{}, from_ints(z, {-3, -6})), from_ints(z, {3, 6}));
}

TEST(UniGcd, Rationals) {
    Rationals q;
    Poly<Rationals> a{{q.make(1, 2), q.make(1, 2)}}, b{{q.make(-1, 3), q.zero(), q.make(1, 3)}};
    Poly<Rationals> expect{{q.one(), q.one()}};
    EXPECT_EQ(gcd(q, a, b), expect);
}

TEST(UniGcd, SubresultantOverZp) {
    Zp64 f(101);
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        auto g = random_poly(f, 4, rng);
        auto a = mul(f, g, random_poly(f, 9, rng)), b = mul(f, g, random_poly(f, 6, rng));
        ASSERT_EQ(monic(f, gcd_subresultant(f, a, b)), gcd_euclid(f, a, b));
    }
}
