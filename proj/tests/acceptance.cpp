// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rings/algebra/apart.hpp"
#include "rings/frontend/bench.hpp"
#include "rings/frontend/expr.hpp"
#include "rings/galois.hpp"
#include "rings/groebner/buchberger.hpp"
#include "rings/groebner/problems.hpp"
#include "rings/modarith.hpp"
#include "rings/multivar/evaluate.hpp"
#include "rings/multivar/squarefree.hpp"
#include "rings/univar/factor_z.hpp"
#include "rings/univar/newton.hpp"

using namespace rings;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Runs `check`, which returns an empty string on success or a reason.
/// `detail` collects the numbers printed after the verdict.
void criterion(const std::string& name, const std::function<std::string(std::ostringstream&)>& check) {
    std::ostringstream detail;
    std::string reason;
    auto t0 = Clock::now();
    try {
        reason = check(detail);
    } catch (const std::exception& e) {
        reason = std::string("exception: ") + e.what();
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2f s", seconds_since(t0));
    if (!reason.empty()) ++failures;
    std::cout << (reason.empty() ? "PASS " : "FAIL ") << name << " [" << elapsed << "]";
    if (!detail.str().empty()) std::cout << " " << detail.str();
    if (!reason.empty()) std::cout << " -- " << reason;
    std::cout << std::endl;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

// ---------------------------------------------------------------- modarith

std::string modarith(std::ostringstream& out) {
    auto t0 = Clock::now();
    std::uint64_t checked = 0;
    Rng rng(20);
    for (std::uint64_t p : {3ull, 7ull, 17ull, 524287ull, 1000003ull, 2147483647ull}) {
        MachineModulus m(p);
        for (std::uint64_t a = 0; a < (1u << 20); ++a)
            if (m.reduce(a) != a % p || m.quotient(a) != a / p) return "mismatch at p=" + std::to_string(p) + " a=" + std::to_string(a);
        for (int i = 0; i < 1000000; ++i) {
            std::uint64_t a = rng();
            if (m.reduce(a) != a % p || m.quotient(a) != a / p) return "mismatch at p=" + std::to_string(p) + " a=" + std::to_string(a);
        }
        checked += (1u << 20) + 1000000;
    }
    double s = seconds_since(t0);
    out << checked << " values";
    return s < 10 ? "" : "took " + std::to_string(s) + " s (limit 10 s)";
}

// ---------------------------------------------------------------- apart

template <class F>
std::string check_apart(const F& q, const std::string& input, std::vector<std::string> expect) {
    auto in = parse(q, input);
    auto parts = apart(q, in);
    std::vector<std::string> got;
    auto sum = q.zero();
    for (const auto& p : parts) {
        got.push_back(q.format(p));
        sum = q.add(sum, p);
    }
    if (!q.equal(sum, in)) return "parts do not sum to the input";
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    if (got != expect) {
        std::string g;
        for (const auto& s : got) g += " " + s;
        return "got" + g;
    }
    return "";
}

std::string apart_golden(std::ostringstream& out) {
    auto t0 = Clock::now();
    auto r1 = check_apart(Rationals{}, "1234213/2341352", {"184/479", "(-10)/13", "1/8", "(-10)/47", "1"});
    if (!r1.empty()) return "rational: " + r1;
    Frac<UniPolyRing<Zp64>> rf(UniPolyRing<Zp64>(Zp64(17), "x"));
    auto r2 = check_apart(rf, "1/(3 - 3*x^2 - x^3 + x^5)", {"4/(16+x)", "1/(10+x)", "15/(1+x)", "(14*x)/(15+7*x+x^2)"});
    if (!r2.empty()) return "Z17[x]: " + r2;
    double s = seconds_since(t0);
    out << "5 + 4 fractions byte-exact";
    return s < 1 ? "" : "took " + std::to_string(s) + " s (limit 1 s)";
}

// ---------------------------------------------------------------- bench protocols

struct Config {
    std::size_t nvars, size, trials;
};

/// Runs the configs and checks every row; returns the failure reason.
std::string run_protocol(bench::BenchSpec spec, const std::vector<Config>& configs, double median_limit,
                         double max_limit, std::size_t min_factors, std::ostringstream& out) {
    std::vector<double> ms;
    std::size_t trials = 0, timeouts = 0;
    for (const auto& c : configs) {
        spec.nvars = c.nvars;
        spec.size = c.size;
        spec.trials = c.trials;
        spec.seed += 1000;
        for (const auto& r : bench::run(spec)) {
            ms.push_back(r.elapsed_ms);
            if (!r.plus_one) ++trials;
            if (r.result_kind == "timeout") {
                ++timeouts;
                continue;
            }
            std::string where = " (n=" + std::to_string(r.n_vars) + " size=" + std::to_string(r.size) +
                                " trial=" + std::to_string(r.trial) + (r.plus_one ? " +1)" : ")");
            if (!r.verified) return "verification failed" + where;
            if (!r.plus_one && r.result_kind != "nontrivial") return "expected a nontrivial result" + where;
            if (r.plus_one && r.result_kind != "trivial") return "expected a trivial result" + where;
            if (!r.plus_one && r.factors < min_factors) return "too few factors" + where;
        }
    }
    double med = median(ms) / 1000, mx = *std::max_element(ms.begin(), ms.end()) / 1000;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %s: %zu trials, median %.3f s, max %.3f s; ", spec.ring.c_str(),
                  spec.dist.text().c_str(), trials, med, mx);
    out << buf;
    if (timeouts) return std::to_string(timeouts) + " timeouts";
    if (med >= median_limit) return "median above " + std::to_string(median_limit) + " s";
    if (mx > max_limit) return "max above " + std::to_string(max_limit) + " s";
    return "";
}

std::string sparse_gcd(std::ostringstream& out) {
    // 110 trials per set, spread over 3..5 variables and sizes 20 and 40
    std::vector<Config> configs = {{3, 20, 19}, {3, 40, 19}, {4, 20, 18}, {4, 40, 18}, {5, 20, 18}, {5, 40, 18}};
    for (const char* ring : {"Z", "Zp[524287]"})
        for (const char* dist : {"uniform(0,30)", "sharp(50)"}) {
            bench::BenchSpec s;
            s.family = bench::Family::GcdSparse;
            s.ring = ring;
            s.dist = bench::Distribution::parse(dist);
            s.seed = 110;
            s.timeout = 60;
            auto r = run_protocol(s, configs, 2, 60, 0, out);
            if (!r.empty()) return r;
        }
    return "";
}

std::string dense_gcd(std::ostringstream& out) {
    for (const char* ring : {"Z", "Zp[524287]"}) {
        bench::BenchSpec s;
        s.family = bench::Family::GcdDense;
        s.ring = ring;
        s.trials = 1;
        s.exponent = 3;
        s.timeout = 120;
        for (const auto& r : bench::run(s)) {
            if (r.result_kind == "timeout") return std::string(ring) + ": timeout";
            if (!r.verified) return std::string(ring) + ": verification failed";
            if (!r.plus_one && r.result_kind != "nontrivial") return std::string(ring) + ": gcd(ag, bg) is trivial";
            if (!r.plus_one) out << ring << " gcd(ag,bg) " << r.elapsed_ms / 1000 << " s; ";
        }
    }
    return "";
}

std::string sparse_factor(std::ostringstream& out) {
    // 50 trials per ring over 3..4 variables and 10..20 terms per factor
    std::vector<Config> configs = {{3, 10, 13}, {3, 20, 13}, {4, 10, 12}, {4, 20, 12}};
    for (const char* ring : {"Z", "Zp[524287]"}) {
        bench::BenchSpec s;
        s.family = bench::Family::FactorSparse;
        s.ring = ring;
        s.dist = bench::Distribution::parse("uniform(0,30)");
        s.seed = 50;
        s.timeout = 120;
        auto r = run_protocol(s, configs, 5, 120, 3, out);
        if (!r.empty()) return r;
    }
    return "";
}

std::string uni_factor(std::ostringstream& out) {
    for (std::size_t deg : {64u, 128u, 256u}) {
        bench::BenchSpec s;
        s.family = bench::Family::UniFactor;
        s.ring = "Zp[17]";
        s.size = deg;
        s.trials = 1;
        s.timeout = 60;
        auto r = bench::run(s).front();
        if (r.result_kind == "timeout") return "deg " + std::to_string(deg) + ": timeout";
        if (!r.verified) return "deg " + std::to_string(deg) + ": multiply-back or DDF check failed";
        out << "deg " << deg << ": " << r.factors << " factors " << r.elapsed_ms / 1000 << " s; ";
        if (deg == 256 && r.elapsed_ms >= 30000) return "deg 256 above 30 s";
    }
    return "";
}

// ---------------------------------------------------------------- Groebner

std::string groebner(std::ostringstream& out) {
    Zp64 f(1000003);
    struct Problem {
        std::string name;
        std::vector<multi::Poly<Zp64>> gens;
    };
    std::vector<Problem> problems;
    for (std::size_t n = 5; n <= 7; ++n) problems.push_back({"katsura-" + std::to_string(n), gb::katsura(f, n)});
    for (std::size_t n = 5; n <= 6; ++n) problems.push_back({"cyclic-" + std::to_string(n), gb::cyclic(f, n)});
    for (const auto& p : problems) {
        auto t0 = Clock::now();
        auto basis = gb::groebner_basis(f, p.gens, MonomialOrder::GrevLex);
        double s = seconds_since(t0);
        out << p.name << " " << basis.size() << " elements " << s << " s; ";
        if (!gb::is_groebner_basis(f, basis)) return p.name + ": not a Groebner basis";
        if (!gb::is_reduced_basis(f, basis)) return p.name + ": not reduced and monic";
        for (const auto& g : p.gens)
            if (!gb::normal_form(f, g, basis).is_zero()) return p.name + ": a generator does not reduce to 0";
        if (p.name == "katsura-7" && s >= 120) return "katsura-7 above 120 s";
    }
    return "";
}

std::string groebner_rational(std::ostringstream& out) {
    Rationals q;
    Zp64 f(1000003);
    auto gens = gb::katsura(q, 7);
    auto t0 = Clock::now();
    std::vector<multi::Poly<Rationals>> basis;
    {
        ScopedDeadline limit{std::chrono::minutes(30)};
        basis = gb::groebner_basis(q, gens, MonomialOrder::GrevLex);
    }
    double s = seconds_since(t0);
    out << basis.size() << " elements " << s << " s";
    for (const auto& g : gens)
        if (!gb::normal_form(q, g, basis).is_zero()) return "a generator does not reduce to 0";
    // the image mod p must be the verified prime field basis
    auto bp = gb::groebner_basis(f, gb::katsura(f, 7), MonomialOrder::GrevLex);
    if (bp.size() != basis.size()) return "size differs from the basis mod 1000003";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        multi::Poly<Zp64> img(basis[i].nvars, MonomialOrder::GrevLex);
        for (const auto& t : basis[i].terms) img.terms.push_back({t.m, f.div(f.from_integer(t.c.num), f.from_integer(t.c.den))});
        if (img != bp[i]) return "image mod 1000003 differs at element " + std::to_string(i);
    }
    if (!gb::is_reduced_basis(q, basis)) return "not a reduced basis";
    return "";
}

// ---------------------------------------------------------------- property suites

template <class D>
multi::Poly<D> random_multi(const D& d, std::size_t n, std::size_t terms, std::uint32_t deg, Rng& rng,
                            MonomialOrder o = MonomialOrder::GrevLex) {
    multi::Poly<D> p(n, o);
    for (std::size_t k = 0; k < terms; ++k) {
        DegreeVector m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::uint32_t>(rng() % (deg + 1)));
        auto c = d.random(rng);
        p.terms.push_back({std::move(m), d.is_zero(c) ? d.one() : c});
    }
    multi::normalize(d, p);
    return p;
}

template <class D>
uni::Poly<D> random_uni(const D& d, int deg, Rng& rng) {
    uni::Poly<D> p;
    for (int i = 0; i <= deg; ++i) p.c.push_back(d.random(rng));
    if (d.is_zero(p.c.back())) p.c.back() = d.one();
    return p;
}

template <class D>
bool axioms(const D& d, int trials) {
    Rng rng(7);
    for (int i = 0; i < trials; ++i) {
        auto a = d.random(rng), b = d.random(rng), c = d.random(rng);
        if (!d.equal(d.add(a, b), d.add(b, a)) || !d.equal(d.mul(a, b), d.mul(b, a))) return false;
        if (!d.equal(d.mul(d.mul(a, b), c), d.mul(a, d.mul(b, c)))) return false;
        if (!d.equal(d.mul(a, d.add(b, c)), d.add(d.mul(a, b), d.mul(a, c)))) return false;
        if (!d.is_zero(d.add(a, d.neg(a))) || !d.equal(d.mul(a, d.one()), a)) return false;
        if constexpr (D::is_field)
            if (!d.is_zero(a) && !d.is_one(d.mul(a, d.inv(a)))) return false;
    }
    return true;
}

template <class R>
bool round_trip(const R& r, int n) {
    Rng rng(9);
    for (int i = 0; i < n; ++i) {
        auto a = r.random(rng);
        if (!r.is_zero(r.sub(a, parse(r, r.format(a))))) return false;
    }
    return true;
}

void properties() {
    criterion("property: ring axioms (Z, Zp, Q, GF(17,3), Zp[x,y])", [](auto&) -> std::string {
        bool ok = axioms(IntegerRing{}, 500) && axioms(Zp64(524287), 500) && axioms(Rationals{}, 300) &&
                  axioms(GaloisField(17, 3), 300) && axioms(MultiPolyRing<Zp64>(Zp64(101), {"x", "y"}), 100);
        return ok ? "" : "axiom violated";
    });
    criterion("property: division identity a = q*b + r", [](auto&) -> std::string {
        Zp64 f(101);
        Rng rng(3);
        for (int t = 0; t < 100; ++t) {
            auto a = random_uni(f, 40, rng), b = random_uni(f, 1 + static_cast<int>(rng() % 20), rng);
            auto [q, r] = uni::divrem_classical(f, a, b);
            if (uni::add(f, uni::mul(f, q, b), r) != a || r.degree() >= b.degree()) return "univariate";
            auto o = static_cast<MonomialOrder>(t % 3);
            auto m = random_multi(f, 3, 15, 5, rng, o);
            std::vector<multi::Poly<Zp64>> ds = {random_multi(f, 3, 3, 3, rng, o), random_multi(f, 3, 2, 3, rng, o)};
            auto [qs, rem] = multi::divrem(f, m, ds);
            auto back = rem;
            for (std::size_t k = 0; k < ds.size(); ++k) back = multi::add(f, back, multi::mul(f, qs[k], ds[k]));
            if (back != m) return "multivariate";
        }
        return "";
    });
    criterion("property: Karatsuba = schoolbook", [](auto&) -> std::string {
        Zp64 f(17);
        IntegerRing z;
        Rng rng(1);
        for (int t = 0; t < 10; ++t) {
            auto a = random_uni(f, 300, rng), b = random_uni(f, 100 + t * 20, rng);
            if (uni::mul_karatsuba(f, a, b) != uni::mul_schoolbook(f, a, b)) return "Zp";
            auto c = random_uni(z, 150, rng), d = random_uni(z, 77, rng);
            if (uni::mul_karatsuba(z, c, d) != uni::mul_schoolbook(z, c, d)) return "Z";
        }
        return "";
    });
    criterion("property: Newton division = classical", [](auto&) -> std::string {
        Zp64 f(1000003);
        Rng rng(3);
        for (int t = 0; t < 10; ++t) {
            auto a = random_uni(f, 500, rng), b = random_uni(f, 200, rng);
            InverseModMonomial<Zp64> inv(f, b);
            if (inv.divrem(a) != uni::divrem_classical(f, a, b)) return "mismatch";
        }
        return "";
    });
    criterion("property: Kronecker = naive multiplication", [](auto&) -> std::string {
        Zp64 f(1000003);
        Rng rng(2);
        for (int t = 0; t < 200; ++t) {
            std::size_t n = 1 + rng() % 5;
            auto a = random_multi(f, n, 1 + rng() % 60, 1 + rng() % 20, rng);
            auto b = random_multi(f, n, 1 + rng() % 60, 1 + rng() % 20, rng);
            if (multi::mul(f, a, b) != multi::mul_naive(f, a, b)) return "mismatch";
        }
        return "";
    });
    criterion("property: Zippel = dense GCD", [](auto&) -> std::string {
        Zp64 f(1000003);
        Rng rng(13);
        for (int t = 0; t < 40; ++t) {
            std::size_t n = 2 + rng() % 2;
            auto g = random_multi(f, n, 4, 3, rng);
            auto ag = multi::mul(f, random_multi(f, n, 5, 3, rng), g), bg = multi::mul(f, random_multi(f, n, 5, 3, rng), g);
            if (multi::gcd(f, ag, bg) != multi::gcd_dense(f, ag, bg)) return "mismatch";
        }
        return "";
    });
    criterion("property: Horner = direct evaluation", [](auto&) -> std::string {
        Zp64 f(524287);
        Rng rng(5);
        for (int t = 0; t < 200; ++t) {
            std::size_t n = 1 + rng() % 5;
            auto p = random_multi(f, n, 1 + rng() % 40, 12, rng);
            std::vector<std::uint64_t> x(n);
            for (auto& v : x) v = f.random(rng);
            if (multi::evaluate(f, multi::to_recursive(f, p), x) != multi::evaluate_direct(f, p, x)) return "mismatch";
        }
        return "";
    });
    criterion("property: squarefree multiply-back and pairwise coprime", [](auto&) -> std::string {
        IntegerRing z;
        Zp64 f(3);
        Rng rng(6);
        for (int t = 0; t < 30; ++t) {
            auto a = random_multi(z, 3, 3, 2, rng), b = random_multi(z, 3, 3, 2, rng);
            auto p = multi::mul(z, multi::mul(z, a, multi::pow(z, b, 2)), multi::pow(z, a, 2));
            if (p.is_zero()) continue;
            auto s = multi::squarefree(z, p);
            auto back = multi::constant(z, 3, p.order, s.unit);
            for (std::size_t i = 0; i < s.size(); ++i) {
                back = multi::mul(z, back, multi::pow(z, s.factors[i], s.exponents[i]));
                if (!multi::is_squarefree(z, s.factors[i])) return "factor not squarefree";
                for (std::size_t j = 0; j < i; ++j)
                    if (!multi::gcd(z, s.factors[i], s.factors[j]).is_constant()) return "factors not coprime";
            }
            if (back != p) return "multiply-back over Z";
            auto u = uni::mul(f, random_uni(f, 6, rng), uni::pow(f, random_uni(f, 4, rng), 3));
            auto su = uni::squarefree(f, u);
            auto ub = uni::constant(f, su.unit);
            for (std::size_t i = 0; i < su.size(); ++i) ub = uni::mul(f, ub, uni::pow(f, su.factors[i], su.exponents[i]));
            if (ub != u) return "multiply-back over Z3";
        }
        return "";
    });
    criterion("property: Gebauer-Moller = criteria-free Buchberger", [](auto&) -> std::string {
        Zp64 f(32003);
        Rng rng(8);
        for (int t = 0; t < 30; ++t) {
            auto o = static_cast<MonomialOrder>(t % 3);
            std::size_t n = o == MonomialOrder::Lex ? 2 : 3;
            std::vector<multi::Poly<Zp64>> gens;
            for (int k = 0; k < 3; ++k) {
                auto p = random_multi(f, n, 3, 2, rng, o);
                if (!p.is_zero()) gens.push_back(p);
            }
            if (gens.empty()) continue;
            auto a = gb::groebner_basis(f, gens, o, {.criteria = true, .selection = std::nullopt});
            auto b = gb::groebner_basis(f, gens, o, {.criteria = false, .selection = std::nullopt});
            if (a != b) return "bases differ";
        }
        return "";
    });
    criterion("property: parse(format(e)) = e", [](auto&) -> std::string {
        bool ok = round_trip(IntegerRing{}, 1000) && round_trip(Rationals{}, 1000) && round_trip(Zp64(17), 1000) &&
                  round_trip(GaloisField(17, 3), 1000) && round_trip(UniPolyRing<Rationals>(Rationals{}, "x"), 1000) &&
                  round_trip(MultiPolyRing<IntegerRing>(IntegerRing{}, {"x", "y", "z"}), 1000) &&
                  round_trip(Frac<UniPolyRing<Zp64>>(UniPolyRing<Zp64>(Zp64(101), "x")), 300);
        return ok ? "" : "round trip failed";
    });
    criterion("property: bench determinism per seed", [](auto&) -> std::string {
        bench::BenchSpec s;
        s.family = bench::Family::GcdSparse;
        s.ring = "Zp[524287]";
        s.nvars = 3;
        s.size = 10;
        s.trials = 4;
        s.seed = 77;
        s.dist = bench::Distribution::parse("sharp(20)");
        auto strip = [](std::vector<bench::Row> rows) {
            std::string out;
            for (auto& r : rows) {
                r.elapsed_ms = 0;
                out += bench::csv_row(r) + "\n";
            }
            return out;
        };
        if (strip(bench::run(s)) != strip(bench::run(s))) return "CSV differs between runs";
        Rng a = bench::trial_rng(77, 0);
        for (int i = 0; i < 1000; ++i)
            if (bench::random_exponents(4, s.dist, a).total() != 20) return "sharp sample off its total degree";
        return "";
    });
}

}  // namespace

int main() {
    criterion("modular arithmetic: magic reduction = division", modarith);
    criterion("partial fractions: golden decompositions", apart_golden);
    criterion("sparse GCD protocol", sparse_gcd);
    criterion("dense GCD family, outer exponent 3", dense_gcd);
    criterion("sparse factorization protocol", sparse_factor);
    criterion("univariate factorization of p_deg over Z17", uni_factor);
    criterion("Groebner bases over Z1000003 (katsura-5..7, cyclic-5..6)", groebner);
    criterion("Groebner basis of katsura-7 over Q (stretch)", groebner_rational);
    properties();
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
