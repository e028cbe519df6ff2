#include <gtest/gtest.h>

#include <rings/frac.hpp>
#include <rings/frontend/bench.hpp>
#include <rings/frontend/expr.hpp>
#include <rings/frontend/format.hpp>
#include <rings/frontend/ring_spec.hpp>
#include <rings/galois.hpp>
#include <rings/integers.hpp>
#include <rings/multivar/ring.hpp>
#include <rings/univar/ring.hpp>
#include <rings/zp.hpp>

using namespace rings;

namespace {

template <class R>
void round_trip(const R& r, int n = 1000) {
    Rng rng(1234);
    for (int i = 0; i < n; ++i) {
        auto a = r.random(rng);
        auto text = r.format(a);
        auto b = r.zero();
        ASSERT_NO_THROW(b = parse(r, text)) << r.describe() << ": " << text;
        ASSERT_TRUE(r.is_zero(r.sub(a, b))) << r.describe() << ": " << text << " -> " << r.format(b);
    }
}

std::size_t error_position(auto&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.position;
    }
    return 0;
}

}  // namespace

TEST(Expr, RoundTripEveryRing) {
    round_trip(IntegerRing{});
    round_trip(Rationals{});
    round_trip(Zp64(17));
    round_trip(Zp64(1000003));
    round_trip(ZpBig(Integer("340282366920938463463374607431768211507")));
    round_trip(GaloisField(17, 3));
    round_trip(GaloisField(2, 8, "a"));
    round_trip(UniPolyRing<Zp64>(Zp64(7), "x"));
    round_trip(UniPolyRing<Rationals>(Rationals{}, "x"));
    round_trip(UniPolyRing<GaloisField>(GaloisField(5, 2), "x"));
    round_trip(MultiPolyRing<IntegerRing>(IntegerRing{}, {"x", "y", "z"}));
    round_trip(MultiPolyRing<Rationals>(Rationals{}, {"x", "y"}, MonomialOrder::Lex));
    round_trip(MultiPolyRing<GaloisField>(GaloisField(3, 2, "w"), {"x", "y"}));
    round_trip(Frac<UniPolyRing<Rationals>>(UniPolyRing<Rationals>(Rationals{}, "x")), 200);
    round_trip(Frac<MultiPolyRing<Zp64>>(MultiPolyRing<Zp64>(Zp64(101), {"x", "y"})), 200);
}

TEST(Expr, Precedence) {
    MultiPolyRing<IntegerRing> r(IntegerRing{}, {"x", "y"});
    EXPECT_EQ(r.format(parse(r, "-x^2")), "-x^2");
    EXPECT_EQ(r.format(parse(r, "(-x)^2")), "x^2");
    EXPECT_EQ(r.format(parse(r, "2*x - 3*y + 1")), "2*x - 3*y + 1");
    EXPECT_EQ(r.format(parse(r, "x - y - x")), "-y");
    EXPECT_EQ(r.format(parse(r, "y + x")), "x + y");
    EXPECT_EQ(r.format(parse(r, "(x + y)^0")), "1");
    EXPECT_EQ(r.format(parse(r, "4*x/-1")), "-4*x");
    MultiPolyRing<Rationals> rq(Rationals{}, {"x"});
    EXPECT_EQ(rq.format(parse(rq, "4*x/2")), "2*x");
    Rationals q;
    EXPECT_EQ(q.format(parse(q, "1/2 + 1/3")), "5/6");
    EXPECT_EQ(q.format(parse(q, "2/4/2")), "1/4");
}

TEST(Expr, ErrorsCarryPositions) {
    MultiPolyRing<IntegerRing> r(IntegerRing{}, {"x", "y"});
    EXPECT_EQ(error_position([&] { parse(r, "x y"); }), 3u);
    EXPECT_EQ(error_position([&] { parse(r, "2x"); }), 2u);
    EXPECT_EQ(error_position([&] { parse(r, ""); }), 1u);
    EXPECT_EQ(error_position([&] { parse(r, "x +"); }), 4u);
    EXPECT_EQ(error_position([&] { parse(r, "(x + y"); }), 7u);
    EXPECT_EQ(error_position([&] { parse(r, "x ^ y"); }), 5u);
    EXPECT_EQ(error_position([&] { parse(r, "x^-1"); }), 3u);
    EXPECT_EQ(error_position([&] { parse(r, "x^2^3"); }), 4u);
    EXPECT_EQ(error_position([&] { parse(r, "x + z"); }), 5u);
    EXPECT_EQ(error_position([&] { parse(r, "x $ y"); }), 3u);
    EXPECT_EQ(error_position([&] { parse(r, "x / y"); }), 3u);
    EXPECT_EQ(error_position([&] { parse(r, "x / 0"); }), 3u);
    EXPECT_EQ(error_position([&] { parse(IntegerRing{}, "7 / 2"); }), 3u);
    EXPECT_EQ(error_position([&] { parse(Zp64(5), "1/(5)"); }), 2u);
    EXPECT_EQ(IntegerRing{}.format(parse(IntegerRing{}, "6 / -1")), "-6");
}

TEST(Expr, GaloisFieldGenerator) {
    GaloisField f(2, 4);
    auto a = parse(f, "1 + t^2");
    EXPECT_EQ(f.format(a), "1+t^2");
    EXPECT_TRUE(f.is_one(parse(f, "t^15")));
    EXPECT_TRUE(f.is_one(parse(f, "t / t")));
    UniPolyRing<GaloisField> r(f, "x");
    auto p = parse(r, "t*x + 1");
    EXPECT_EQ(p.degree(), 1);
}

TEST(RingSpec, ParsesEveryForm) {
    EXPECT_EQ(parse_ring_spec("Z").kind, RingSpec::Kind::Z);
    EXPECT_EQ(parse_ring_spec(" Q ").kind, RingSpec::Kind::Q);
    EXPECT_EQ(parse_ring_spec("Frac(Z)").kind, RingSpec::Kind::Q);
    EXPECT_EQ(parse_ring_spec("Frac(Zp[7])").kind, RingSpec::Kind::Zp);
    auto gf = parse_ring_spec("GF[17,3]");
    EXPECT_EQ(gf.name, "t");
    EXPECT_EQ(gf.text(), "GF[17,3,t]");
    auto p = parse_ring_spec("Poly(Zp[101]; x, y, z; LEX)");
    EXPECT_EQ(p.vars.size(), 3u);
    EXPECT_EQ(p.order, MonomialOrder::Lex);
    EXPECT_EQ(parse_ring_spec("Poly(Q; x)").order, MonomialOrder::GrevLex);
    auto f = parse_ring_spec("Frac(Frac(Poly(Q; x)))");
    EXPECT_EQ(f.kind, RingSpec::Kind::Frac);
    EXPECT_EQ(f.inner->kind, RingSpec::Kind::Poly);
}

TEST(RingSpec, Rejections) {
    EXPECT_THROW(parse_ring_spec("Zp[15]"), ParseError);
    EXPECT_THROW(parse_ring_spec("GF[4,2]"), ParseError);
    EXPECT_THROW(parse_ring_spec("GF[5,0]"), ParseError);
    EXPECT_THROW(parse_ring_spec("GF[5,65]"), ParseError);
    EXPECT_THROW(parse_ring_spec("Poly(Z; x, x)"), ParseError);
    EXPECT_THROW(parse_ring_spec("Poly(GF[5,2]; t)"), ParseError);
    EXPECT_THROW(parse_ring_spec("Poly(Z; x; DEGLEX)"), ParseError);
    EXPECT_THROW(parse_ring_spec("R"), ParseError);
    EXPECT_THROW(parse_ring_spec("Z Z"), ParseError);
    EXPECT_EQ(error_position([] { parse_ring_spec("Poly(Z x)"); }), 8u);
    auto nested = parse_ring_spec("Poly(Poly(Z; x); y)");
    EXPECT_THROW(with_ring(nested, [](auto) { return 0; }), UnsupportedRingError);
}

TEST(RingSpec, Dispatch) {
    auto describe = [](const std::string& s, bool multi = false) {
        return with_ring(parse_ring_spec(s), [](const auto& r) { return r.describe(); }, multi);
    };
    EXPECT_EQ(describe("Z"), IntegerRing{}.describe());
    EXPECT_EQ(describe("Q"), "Q");
    EXPECT_EQ(describe("Zp[18446744073709551557]"), Zp64(18446744073709551557ULL).describe());
    EXPECT_EQ(describe("Zp[340282366920938463463374607431768211507]"),
              ZpBig(Integer("340282366920938463463374607431768211507")).describe());
    EXPECT_EQ(describe("GF[17,3,a]"), "GF(17,3,a)");
    EXPECT_EQ(describe("Poly(Q; x)"), UniPolyRing<Rationals>(Rationals{}, "x").describe());
    EXPECT_EQ(describe("Poly(Q; x)", true), MultiPolyRing<Rationals>(Rationals{}, {"x"}).describe());
    auto text = with_ring(parse_ring_spec("Poly(Z; x, y)"), [](const auto& r) -> std::string {
        if constexpr (requires { r.variable(0); }) return r.format(parse(r, "y + x"));
        return "";
    });
    EXPECT_EQ(text, "x + y");
}

TEST(Format, Products) {
    EXPECT_EQ(format_product("1", {{"x", 1}, {"x + y", 2}}), "x*(x + y)^2");
    EXPECT_EQ(format_product("-1", {{"x", 3}}), "-x^3");
    EXPECT_EQ(format_product("6", {{"x^2 + 1", 1}}), "6*(x^2 + 1)");
    EXPECT_EQ(format_product("-1/2", {{"x", 1}}), "-1/2*x");
    EXPECT_EQ(format_product("1+t", {{"x", 1}}), "(1+t)*x");
    EXPECT_EQ(format_product("5", {}), "5");
    MultiPolyRing<IntegerRing> r(IntegerRing{}, {"x", "y"});
    auto f = r.factor(parse(r, "-2*x^3 + 2*x*y^2"));
    auto text = format_factors(f, [&](const auto& p) { return r.format(p); },
                               [](const Integer& u) { return u.get_str(); });
    EXPECT_EQ(r.format(parse(r, text)), "-2*x^3 + 2*x*y^2");
}

TEST(Bench, Distributions) {
    auto u = bench::Distribution::parse("uniform(2, 5)");
    auto s = bench::Distribution::parse("sharp(40)");
    EXPECT_EQ(u.text(), "uniform(2,5)");
    EXPECT_EQ(s.text(), "sharp(40)");
    EXPECT_THROW(bench::Distribution::parse("gauss(1)"), std::invalid_argument);
    Rng rng = bench::trial_rng(7, 0);
    for (int i = 0; i < 500; ++i) {
        auto m = bench::random_exponents(5, u, rng);
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_GE(m[j], 2u);
            EXPECT_LT(m[j], 5u);
        }
        EXPECT_EQ(bench::random_exponents(5, s, rng).total(), 40u);
    }
}

TEST(Bench, InputsAreDeterministic) {
    IntegerRing z;
    bench::Distribution d;
    for (std::size_t t = 0; t < 5; ++t) {
        Rng a = bench::trial_rng(42, t), b = bench::trial_rng(42, t);
        auto pa = bench::random_poly(z, 4, 20, d, a);
        auto pb = bench::random_poly(z, 4, 20, d, b);
        EXPECT_EQ(pa, pb);
        EXPECT_EQ(pa.terms.size(), 20u);
        for (const auto& term : pa.terms) {
            EXPECT_LE(abs(term.c), 1000);
            EXPECT_NE(term.c, 0);
        }
    }
    Rng a = bench::trial_rng(42, 0), b = bench::trial_rng(42, 1);
    EXPECT_NE(bench::random_poly(z, 4, 20, d, a), bench::random_poly(z, 4, 20, d, b));
}

TEST(Bench, RunsAndVerifies) {
    bench::BenchSpec spec;
    spec.family = bench::Family::GcdSparse;
    spec.ring = "Zp[1000003]";
    spec.nvars = 3;
    spec.size = 8;
    spec.dist = bench::Distribution::parse("uniform(0,6)");
    spec.trials = 3;
    auto rows = bench::run(spec);
    ASSERT_EQ(rows.size(), 6u);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.verified);
        EXPECT_EQ(r.result_kind, r.plus_one ? "trivial" : "nontrivial");
    }
    auto again = bench::run(spec);
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].result_kind, again[i].result_kind);

    spec.family = bench::Family::FactorSparse;
    spec.ring = "Z";
    spec.size = 4;
    spec.trials = 2;
    for (const auto& r : bench::run(spec)) {
        EXPECT_TRUE(r.verified);
        if (!r.plus_one) {
            EXPECT_GE(r.factors, 3u);
        }
    }

    spec.family = bench::Family::UniFactor;
    spec.ring = "Zp[65537]";
    spec.size = 32;
    spec.trials = 1;
    auto uni = bench::run(spec);
    ASSERT_EQ(uni.size(), 1u);
    EXPECT_TRUE(uni[0].verified);

    spec.family = bench::Family::Groebner;
    spec.ring = "Q";
    spec.size = 3;
    auto gb = bench::run(spec);
    EXPECT_TRUE(gb[0].verified);
    EXPECT_EQ(gb[0].n_vars, 4u);

    spec.family = bench::Family::GcdSparse;
    EXPECT_THROW(bench::run(spec), UnsupportedRingError);
    spec.ring = "GF[5,2]";
    EXPECT_THROW(bench::run(spec), UnsupportedRingError);
}

TEST(Bench, CsvAndSummary) {
    EXPECT_EQ(bench::csv_header(), "family,ring,n_vars,size,trial,elapsed_ms,result_kind,verified");
    bench::Row r{"gcd-sparse", "Zp[7]", 3, 40, 2, 1.5, "trivial", true};
    EXPECT_EQ(bench::csv_row(r), "gcd-sparse,\"Zp[7]\",3,40,2,1.500,trivial,true");
    std::vector<bench::Row> rows;
    for (double ms : {4.0, 1.0, 3.0, 2.0}) rows.push_back({"f", "Z", 1, 1, 0, ms, "k", true});
    auto s = bench::summarize(rows);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_DOUBLE_EQ(s[0].median, 2.5);
    EXPECT_DOUBLE_EQ(s[0].min, 1.0);
    EXPECT_DOUBLE_EQ(s[0].max, 4.0);
}
