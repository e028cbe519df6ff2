#pragma once

/**
 * @file bench.hpp
 * @brief Benchmark harness: random sparse gcd and factorization trials,
 *        the dense gcd and factorization problems, Groebner systems and
 *        the univariate p_deg family, reported as CSV rows.
 *
 * Inputs depend only on (seed, trial), so two runs of the same spec give
 * the same rows apart from elapsed_ms.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../deadline.hpp"
#include "../groebner/buchberger.hpp"
#include "../groebner/problems.hpp"
#include "../multivar/factor.hpp"
#include "../multivar/gcd.hpp"
#include "../multivar/ring.hpp"
#include "../univar/factor_z.hpp"
#include "expr.hpp"
#include "ring_spec.hpp"

namespace rings::bench {

enum class Family { GcdSparse, GcdDense, FactorSparse, FactorDense, Groebner, UniFactor };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::GcdSparse: return "gcd-sparse";
        case Family::GcdDense: return "gcd-dense";
        case Family::FactorSparse: return "factor-sparse";
        case Family::FactorDense: return "factor-dense";
        case Family::Groebner: return "groebner";
        default: return "uni-factor";
    }
}

inline Family parse_family(const std::string& s) {
    for (auto f : {Family::GcdSparse, Family::GcdDense, Family::FactorSparse, Family::FactorDense, Family::Groebner,
                   Family::UniFactor})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown bench family '" + s + "'");
}

struct Distribution {
    enum class Kind { Uniform, Sharp };
    Kind kind = Kind::Uniform;
    std::uint32_t dmin = 0, dmax = 30, dsum = 50;

    std::string text() const {
        if (kind == Kind::Sharp) return "sharp(" + std::to_string(dsum) + ")";
        return "uniform(" + std::to_string(dmin) + "," + std::to_string(dmax) + ")";
    }

    /// "uniform(Dmin,Dmax)" or "sharp(Dsum)".
    static Distribution parse(const std::string& s) {
        Distribution d;
        unsigned a = 0, b = 0;
        char close = 0;
        std::string t;
        for (char c : s)
            if (c != ' ') t += c;
        if (std::sscanf(t.c_str(), "uniform(%u,%u%c", &a, &b, &close) == 3 && close == ')') {
            d.kind = Kind::Uniform;
            d.dmin = a;
            d.dmax = b;
        } else if (std::sscanf(t.c_str(), "sharp(%u%c", &a, &close) == 2 && close == ')') {
            d.kind = Kind::Sharp;
            d.dsum = a;
        } else {
            throw std::invalid_argument("bad distribution '" + s + "', expected uniform(Dmin,Dmax) or sharp(Dsum)");
        }
        return d;
    }
};

struct BenchSpec {
    Family family = Family::GcdSparse;
    std::string ring = "Z";
    std::size_t nvars = 3;
    std::size_t size = 40;
    Distribution dist;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    double timeout = 60;
    /// Outer exponent of the dense problems (3 for gcd-dense, 15 for factor-dense).
    std::optional<unsigned> exponent;
    /// katsura or cyclic, with n = size.
    std::string problem = "katsura";

    void validate() const {
        if (nvars == 0 || size == 0 || trials == 0) throw std::invalid_argument("counts must be positive");
        if (dist.kind == Distribution::Kind::Uniform && dist.dmin >= dist.dmax)
            throw std::invalid_argument("uniform distribution needs Dmin < Dmax");
        if (!(timeout > 0)) throw std::invalid_argument("timeout must be positive");
        if (exponent && *exponent == 0) throw std::invalid_argument("exponent must be positive");
        if (problem != "katsura" && problem != "cyclic") throw std::invalid_argument("unknown problem '" + problem + "'");
    }
};

struct Row {
    std::string family;
    std::string ring;
    std::size_t n_vars = 0;
    std::size_t size = 0;
    std::size_t trial = 0;
    double elapsed_ms = 0;
    std::string result_kind;
    bool verified = false;
    /// Not part of the CSV: the row is the "+1" member of its trial pair.
    bool plus_one = false;
    /// Not part of the CSV: factor count with multiplicity.
    std::size_t factors = 0;
};

inline std::string csv_header() { return "family,ring,n_vars,size,trial,elapsed_ms,result_kind,verified"; }

inline std::string csv_row(const Row& r) {
    std::ostringstream os;
    os << r.family << ',' << '"' << r.ring << '"' << ',' << r.n_vars << ',' << r.size << ',' << r.trial << ',';
    os.setf(std::ios::fixed);
    os.precision(3);
    os << r.elapsed_ms << ',' << r.result_kind << ',' << (r.verified ? "true" : "false");
    return os.str();
}

struct Summary {
    std::string family, result_kind;
    std::size_t count = 0;
    double median = 0, min = 0, max = 0;
};

/// Elapsed-time statistics per (family, result_kind); an even count takes
/// the mean of the two middle values.
inline std::vector<Summary> summarize(const std::vector<Row>& rows) {
    std::map<std::pair<std::string, std::string>, std::vector<double>> by;
    for (const auto& r : rows) by[{r.family, r.result_kind}].push_back(r.elapsed_ms);
    std::vector<Summary> out;
    for (auto& [key, v] : by) {
        std::sort(v.begin(), v.end());
        std::size_t n = v.size();
        double med = n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
        out.push_back({key.first, key.second, n, med, v.front(), v.back()});
    }
    return out;
}

/// Generator for trial t: mt19937_64 over seed_seq{seed, t}.
inline Rng trial_rng(std::uint64_t seed, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    return Rng(seq);
}

/// Exponents uniform in [dmin, dmax) per variable, or the sharp scheme:
/// variables in a random order, each uniform in [0, remaining] except the
/// last, which takes the remainder.
inline DegreeVector random_exponents(std::size_t n, const Distribution& dist, Rng& rng) {
    DegreeVector m(n);
    if (dist.kind == Distribution::Kind::Uniform) {
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, dist.dmin + static_cast<std::uint32_t>(rng() % (dist.dmax - dist.dmin)));
        return m;
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng() % (i + 1)]);
    std::uint32_t left = dist.dsum;
    for (std::size_t k = 0; k < n; ++k) {
        auto e = k + 1 == n ? left : static_cast<std::uint32_t>(rng() % (std::uint64_t{left} + 1));
        m.set(perm[k], e);
        left -= e;
    }
    return m;
}

/// Nonzero coefficient: uniform in [-1000, 1000] over Z and Q, a uniform
/// nonzero residue over Zp.
template <class D>
typename D::Elem random_coefficient(const D& d, Rng& rng) {
    if constexpr (std::is_same_v<D, Zp64>) {
        return d.from_u64(1 + rng() % (d.p() - 1));
    } else {
        long v = static_cast<long>(rng() % 2000);
        return d.from_int(v < 1000 ? v - 1000 : v - 999);
    }
}

/// `size` distinct random monomials (fewer if the distribution has fewer).
template <class D>
multi::Poly<D> random_poly(const D& d, std::size_t nvars, std::size_t size, const Distribution& dist, Rng& rng) {
    multi::Poly<D> p(nvars, MonomialOrder::GrevLex);
    std::set<std::vector<std::uint32_t>> seen;
    for (std::size_t attempt = 0; p.terms.size() < size && attempt < 100 * size; ++attempt) {
        auto m = random_exponents(nvars, dist, rng);
        std::vector<std::uint32_t> key(m.exponents().begin(), m.exponents().end());
        if (!seen.insert(key).second) continue;
        p.terms.push_back({std::move(m), random_coefficient(d, rng)});
    }
    multi::normalize(d, p);
    return p;
}

inline std::vector<std::string> variable_names(std::size_t n) {
    std::vector<std::string> r;
    for (std::size_t i = 1; i <= n; ++i) r.push_back("x" + std::to_string(i));
    return r;
}

/// The dense gcd problem: a, b, g with outer exponent e in x1..x7.
inline std::vector<std::string> dense_gcd_texts(unsigned e) {
    auto E = std::to_string(e);
    return {"(1 + 3*x1 + 5*x2 + 7*x3 + 9*x4 + 11*x5 + 13*x6 + 15*x7)^" + E + " - 1",
            "(1 - 3*x1 - 5*x2 - 7*x3 + 9*x4 - 11*x5 - 13*x6 + 15*x7)^" + E + " + 1",
            "(1 + 3*x1 + 5*x2 + 7*x3 + 9*x4 + 11*x5 + 13*x6 - 15*x7)^" + E + " + 3"};
}

/// The dense factorization problem p1 with outer exponent e in x1..x7.
inline std::string dense_factor_text(unsigned e) {
    return "(1 + 3*x1 + 5*x2 + 7*x3 + 9*x4 + 11*x5 + 13*x6 + 15*x7)^" + std::to_string(e) + " - 1";
}

/// p_deg = 1 + sum_{i=1..deg} i x^i.
template <class D>
UniPoly<typename D::Elem> p_deg(const D& d, std::size_t deg) {
    UniPoly<typename D::Elem> p;
    p.c.push_back(d.one());
    for (std::size_t i = 1; i <= deg; ++i) p.c.push_back(d.from_int(static_cast<long>(i)));
    uni::normalize(d, p);
    return p;
}

namespace detail {

using Clock = std::chrono::steady_clock;

/// Runs f under the spec's deadline; nullopt on timeout.
template <class F>
auto timed(double timeout, double& ms, F&& f) -> std::optional<decltype(f())> {
    auto t0 = Clock::now();
    std::optional<decltype(f())> r;
    try {
        ScopedDeadline guard{std::chrono::duration<double>(timeout)};
        r = f();
    } catch (const TimeoutError&) {
        r.reset();
    }
    ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

template <class D>
multi::Poly<D> expand(const D& d, const MultiFactors<D>& f, const multi::Poly<D>& like) {
    auto r = multi::constant(d, like.nvars, like.order, f.unit);
    for (std::size_t i = 0; i < f.size(); ++i) r = multi::mul(d, r, multi::pow(d, f.factors[i], f.exponents[i]));
    return r;
}

class Runner {
public:
    Runner(const BenchSpec& s, std::function<void(const Row&)> emit) : s_(s), emit_(std::move(emit)) {}

    template <class D>
    void run(const D& d) {
        switch (s_.family) {
            case Family::GcdSparse: gcd_sparse(d); break;
            case Family::GcdDense: gcd_dense(d); break;
            case Family::FactorSparse: factor_sparse(d); break;
            case Family::FactorDense: factor_dense(d); break;
            case Family::Groebner: groebner(d); break;
            case Family::UniFactor: uni_factor(d); break;
        }
    }

private:
    Row row(std::size_t nvars, std::size_t size, std::size_t trial) const {
        Row r;
        r.family = family_name(s_.family);
        r.ring = s_.ring;
        r.n_vars = nvars;
        r.size = size;
        r.trial = trial;
        return r;
    }

    template <class D>
    void gcd_row(const D& d, Row r, const multi::Poly<D>& a, const multi::Poly<D>& b, const multi::Poly<D>* g) {
        auto res = timed(s_.timeout, r.elapsed_ms, [&] { return multi::gcd(d, a, b); });
        if (!res) {
            r.result_kind = "timeout";
        } else {
            r.result_kind = res->is_constant() ? "trivial" : "nontrivial";
            r.verified = !res->is_zero() && multi::divides(d, *res, a) && multi::divides(d, *res, b) &&
                         (!g || multi::divides(d, *g, *res));
        }
        emit_(r);
    }

    template <class D>
    void gcd_sparse(const D& d) {
        for (std::size_t t = 0; t < s_.trials; ++t) {
            Rng rng = trial_rng(s_.seed, t);
            auto a = random_poly(d, s_.nvars, s_.size, s_.dist, rng);
            auto b = random_poly(d, s_.nvars, s_.size, s_.dist, rng);
            auto g = random_poly(d, s_.nvars, s_.size, s_.dist, rng);
            auto ag = multi::mul(d, a, g), bg = multi::mul(d, b, g);
            gcd_row(d, row(s_.nvars, s_.size, t), ag, bg, &g);
            auto one = multi::constant(d, s_.nvars, MonomialOrder::GrevLex, d.one());
            Row r = row(s_.nvars, s_.size, t);
            r.plus_one = true;
            gcd_row(d, r, multi::add(d, ag, one), bg, nullptr);
        }
    }

    template <class D>
    void gcd_dense(const D& d) {
        unsigned e = s_.exponent.value_or(3);
        MultiPolyRing<D> ring(d, variable_names(7));
        auto texts = dense_gcd_texts(e);
        auto a = parse(ring, texts[0]), b = parse(ring, texts[1]), g = parse(ring, texts[2]);
        auto ag = ring.mul(a, g), bg = ring.mul(b, g);
        for (std::size_t t = 0; t < s_.trials; ++t) {
            gcd_row(d, row(7, e, t), ag, bg, &g);
            Row r = row(7, e, t);
            r.plus_one = true;
            gcd_row(d, r, ag, ring.add(bg, ring.one()), nullptr);
        }
    }

    template <class D>
    void factor_row(const D& d, Row r, const multi::Poly<D>& f) {
        auto res = timed(s_.timeout, r.elapsed_ms, [&] { return multi::factor(d, f); });
        if (!res) {
            r.result_kind = "timeout";
        } else {
            r.factors = res->count_with_multiplicity();
            r.result_kind = r.factors > 1 ? "nontrivial" : "trivial";
            r.verified = expand(d, *res, f) == f;
        }
        emit_(r);
    }

    template <class D>
    void factor_sparse(const D& d) {
        for (std::size_t t = 0; t < s_.trials; ++t) {
            Rng rng = trial_rng(s_.seed, t);
            auto a = random_poly(d, s_.nvars, s_.size, s_.dist, rng);
            auto b = random_poly(d, s_.nvars, s_.size, s_.dist, rng);
            auto c = random_poly(d, s_.nvars, s_.size, s_.dist, rng);
            auto abc = multi::mul(d, multi::mul(d, a, b), c);
            factor_row(d, row(s_.nvars, s_.size, t), abc);
            Row r = row(s_.nvars, s_.size, t);
            r.plus_one = true;
            factor_row(d, r, multi::add(d, abc, multi::constant(d, s_.nvars, MonomialOrder::GrevLex, d.one())));
        }
    }

    template <class D>
    void factor_dense(const D& d) {
        unsigned e = s_.exponent.value_or(15);
        MultiPolyRing<D> ring(d, variable_names(7));
        auto p = parse(ring, dense_factor_text(e));
        for (std::size_t t = 0; t < s_.trials; ++t) factor_row(d, row(7, e, t), p);
    }

    template <class D>
    void groebner(const D& d) {
        if constexpr (!D::is_field) {
            throw UnsupportedRingError("groebner benchmarks need a field");
        } else {
            auto gens = s_.problem == "katsura" ? gb::katsura(d, s_.size) : gb::cyclic(d, s_.size);
            std::size_t nv = gens.front().nvars;
            for (std::size_t t = 0; t < s_.trials; ++t) {
                Row r = row(nv, s_.size, t);
                auto res = timed(s_.timeout, r.elapsed_ms,
                                 [&] { return gb::groebner_basis(d, gens, MonomialOrder::GrevLex); });
                if (!res) {
                    r.result_kind = "timeout";
                } else {
                    r.result_kind = res->size() == 1 && res->front().is_constant() ? "trivial" : "nontrivial";
                    bool ok = gb::is_reduced_basis(d, *res);
                    for (const auto& g : gens) ok = ok && gb::normal_form(d, g, *res).is_zero();
                    r.verified = ok;
                }
                emit_(r);
            }
        }
    }

    template <class D>
    void uni_factor(const D& d) {
        if constexpr (!std::is_same_v<D, Zp64>) {
            throw UnsupportedRingError("uni-factor benchmarks run over Zp");
        } else {
            auto p = p_deg(d, s_.size);
            for (std::size_t t = 0; t < s_.trials; ++t) {
                Row r = row(1, s_.size, t);
                auto res = timed(s_.timeout, r.elapsed_ms, [&] { return uni::factor(d, p); });
                if (!res) {
                    r.result_kind = "timeout";
                } else {
                    r.factors = res->count_with_multiplicity();
                    r.result_kind = r.factors > 1 ? "nontrivial" : "trivial";
                    auto back = uni::constant(d, res->unit);
                    bool ok = true;
                    for (std::size_t i = 0; i < res->size(); ++i) {
                        const auto& f = res->factors[i];
                        back = uni::mul(d, back, uni::pow(d, f, res->exponents[i]));
                        auto dd = uni::distinct_degree(d, f);
                        ok = ok && dd.size() == 1 && dd[0].second == f.degree();
                    }
                    r.verified = ok && back == p;
                }
                emit_(r);
            }
        }
    }

    const BenchSpec& s_;
    std::function<void(const Row&)> emit_;
};

}  // namespace detail

/// Runs every trial of `spec`, calling `emit` per row as it completes.
inline std::vector<Row> run(const BenchSpec& spec, const std::function<void(const Row&)>& emit = {}) {
    spec.validate();
    std::vector<Row> rows;
    detail::Runner runner(spec, [&](const Row& r) {
        rows.push_back(r);
        if (emit) emit(r);
    });
    RingSpec rs = parse_ring_spec(spec.ring);
    switch (rs.kind) {
        case RingSpec::Kind::Z: runner.run(IntegerRing{}); break;
        case RingSpec::Kind::Zp:
            if (!rs.p.fits_ulong_p()) throw UnsupportedRingError("bench moduli must fit in 64 bits");
            runner.run(Zp64(rs.p.get_ui(), false));
            break;
        case RingSpec::Kind::Q:
            if (spec.family != Family::Groebner) throw UnsupportedRingError("Q is only benchmarked for groebner");
            runner.run(Rationals{});
            break;
        default: throw UnsupportedRingError("bench rings are Z, Q and Zp[p]");
    }
    return rows;
}

}  // namespace rings::bench
