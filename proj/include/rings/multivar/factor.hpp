#pragma once

/**
 * @file factor.hpp
 * @brief Multivariate factorization over finite fields, Z and Q.
 *
 * Square-free parts are split by content removal in a main variable, a
 * univariate image at a random point, bivariate Hensel lifting with subset
 * recombination (one bivariate image per remaining variable, whose
 * partitions are joined), and finally variable-by-variable Hensel lifting
 * with imposed leading coefficients. The multivariate Diophantine steps use
 * the support of the current factors to solve by sparse interpolation, with
 * the dense ideal-adic recursion as fallback.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "../errors.hpp"
#include "../primes.hpp"
#include "../univar/factor_ff.hpp"
#include "../univar/factor_z.hpp"
#include "evaluate.hpp"
#include "gcd.hpp"
#include "squarefree.hpp"
#include "vandermonde.hpp"

namespace rings {
namespace multi {

inline constexpr int kFactorAttempts = 16;

template <class D>
MultiFactors<D> factor(const D& d, const Poly<D>& f);

namespace detail {

/// Binomial coefficients reduced into a ring, rows built on demand.
template <class F>
class Binomials {
public:
    explicit Binomials(const F& f) : f_(f) {}

    typename F::Elem operator()(std::uint32_t n, std::uint32_t k) {
        while (rows_.size() <= n) {
            std::vector<typename F::Elem> row(rows_.size() + 1, f_.one());
            if (!rows_.empty()) {
                const auto& prev = rows_.back();
                for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = f_.add(prev[i - 1], prev[i]);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    const F& f_;
    std::vector<std::vector<typename F::Elem>> rows_;
};

/// Coefficients c_0..c_limit of a in powers of (x_var - s); they are free of x_var.
template <class F>
std::vector<Poly<F>> taylor(const F& f, const Poly<F>& a, std::size_t var, const typename F::Elem& s,
                            std::size_t limit, Binomials<F>& bin) {
    std::vector<Poly<F>> out(limit + 1, a.empty_like());
    auto pw = power_table(f, s, static_cast<std::uint32_t>(std::max(degree(a, var), 0)));
    for (const auto& t : a.terms) {
        std::uint32_t e = t.m[var];
        DegreeVector m = t.m;
        m.set(var, 0);
        for (std::uint32_t k = 0; k <= e && k <= limit; ++k) {
            auto c = f.mul(t.c, f.mul(bin(e, k), pw[e - k]));
            if (!f.is_zero(c)) out[k].terms.push_back({m, std::move(c)});
        }
    }
    for (auto& p : out) normalize(f, p);
    return out;
}

/// sum_k c_k (x_var - s)^k
template <class F>
Poly<F> from_taylor(const F& f, const std::vector<Poly<F>>& c, std::size_t var, const typename F::Elem& s,
                    Binomials<F>& bin) {
    Poly<F> r = c.front().empty_like();
    auto pw = power_table(f, f.neg(s), static_cast<std::uint32_t>(c.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        for (const auto& t : c[k].terms)
            for (std::uint32_t l = 0; l <= k; ++l) {
                auto v = f.mul(t.c, f.mul(bin(static_cast<std::uint32_t>(k), l), pw[k - l]));
                if (f.is_zero(v)) continue;
                DegreeVector m = t.m;
                m.set(var, l);
                r.terms.push_back({std::move(m), std::move(v)});
            }
    normalize(f, r);
    return r;
}

/// sum of products a_i * b_i, accumulated once.
template <class F>
Poly<F> dot(const F& f, const std::vector<std::pair<const Poly<F>*, const Poly<F>*>>& pairs, const Poly<F>& like) {
    using E = typename F::Elem;
    Poly<F> r = like.empty_like();
    if (pairs.empty()) return r;
    std::size_t n = like.nvars;
    std::vector<std::uint32_t> da(n, 0), db(n, 0);
    for (auto [a, b] : pairs) {
        auto x = degrees(*a), y = degrees(*b);
        for (std::size_t i = 0; i < n; ++i) {
            da[i] = std::max(da[i], x[i]);
            db[i] = std::max(db[i], y[i]);
        }
    }
    std::vector<unsigned> w(n);
    unsigned total = 0;
    for (std::size_t i = 0; i < n; ++i) total += w[i] = static_cast<unsigned>(std::bit_width(std::uint64_t(da[i]) + db[i]));
    if (total > 64) {
        for (auto [a, b] : pairs) r = add(f, r, mul(f, *a, *b));
        return r;
    }
    std::unordered_map<std::uint64_t, E> acc;
    for (auto [a, b] : pairs) {
        std::vector<std::uint64_t> kb;
        kb.reserve(b->size());
        for (const auto& t : b->terms) kb.push_back(pack(t.m, w));
        for (const auto& ta : a->terms) {
            std::uint64_t ka = pack(ta.m, w);
            for (std::size_t j = 0; j < kb.size(); ++j) {
                auto c = f.mul(ta.c, b->terms[j].c);
                auto [it, fresh] = acc.try_emplace(ka + kb[j], c);
                if (!fresh) it->second = f.add(it->second, c);
            }
        }
    }
    r.terms.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (!f.is_zero(c)) r.terms.push_back({unpack(k, w), std::move(c)});
    normalize(f, r);
    return r;
}

/// sum_i s_i prod_{j != i} u_j = e with deg s_i < deg u_i, for pairwise
/// coprime univariate u_i over a field.
template <class F>
struct UniDiophant {
    using UP = UniPoly<typename F::Elem>;
    std::vector<UP> u, s;

    static std::optional<UniDiophant> make(const F& f, std::vector<UP> u) {
        UniDiophant r;
        for (std::size_t i = 0; i < u.size(); ++i) {
            UP acc = uni::constant(f, f.one());
            for (std::size_t j = 0; j < u.size(); ++j)
                if (j != i) acc = uni::divrem(f, uni::mul(f, acc, uni::divrem(f, u[j], u[i]).second), u[i]).second;
            auto x = uni::xgcd(f, acc, u[i]);
            if (x.g.degree() != 0) return std::nullopt;
            r.s.push_back(std::move(x.s));
        }
        r.u = std::move(u);
        return r;
    }

    std::vector<UP> solve(const F& f, const UP& e) const {
        std::vector<UP> out(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            UP ei = uni::divrem(f, e, u[i]).second;
            out[i] = uni::divrem(f, uni::mul(f, ei, s[i]), u[i]).second;
        }
        return out;
    }
};

template <class F>
using Series = std::vector<UniPoly<typename F::Elem>>;

template <class F>
Series<F> series_mul(const F& f, const Series<F>& a, const Series<F>& b, std::size_t len) {
    Series<F> c(len);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
            if (!b[j].is_zero()) c[i + j] = uni::add(f, c[i + j], uni::mul(f, a[i], b[j]));
    }
    return c;
}

/// Scalar Taylor coefficients of a polynomial free of the main variable.
template <class F>
std::vector<typename F::Elem> scalar_series(const F& f, const Poly<F>& a, std::size_t y, const typename F::Elem& s,
                                            std::size_t len, Binomials<F>& bin) {
    auto t = taylor(f, a, y, s, len - 1, bin);
    std::vector<typename F::Elem> out(len, f.zero());
    for (std::size_t m = 0; m < len; ++m)
        if (!t[m].is_zero()) out[m] = t[m].lc();
    return out;
}

/// A factor of a bivariate image with the seeds it came from.
template <class F>
struct BiFactor {
    std::vector<std::size_t> seeds;
    Poly<F> factor;
    int deg_y = 0;
    int lc_deg_y = 0;
};

inline constexpr std::size_t kTraceExtra = 3;

/// Factors g in F[x, y] (other variables absent) from monic, pairwise
/// coprime seeds whose product is the monic image g(x, s). Hensel lifting
/// in powers of (y - s), then recombination of seed subsets; subsets are
/// screened by the vanishing of high-order terms in their trace.
template <class F>
std::optional<std::vector<BiFactor<F>>> factor_bivariate(const F& f, const Poly<F>& g, std::size_t x, std::size_t y,
                                                         const typename F::Elem& s,
                                                         const std::vector<UniPoly<typename F::Elem>>& seeds,
                                                         Binomials<F>& bin) {
    using E = typename F::Elem;
    using UP = UniPoly<E>;
    std::size_t r = seeds.size();
    Poly<F> lcg = lc_in(f, g, x);
    std::size_t K = static_cast<std::size_t>(std::max(degree(g, y), 0) + std::max(degree(lcg, y), 0) + 1);
    std::size_t KK = K + kTraceExtra;

    auto gt = taylor(f, g, y, s, KK - 1, bin);
    Series<F> G(KK);
    for (std::size_t m = 0; m < KK; ++m) G[m] = to_dense(f, gt[m], x);
    auto L = scalar_series(f, lcg, y, s, KK, bin);
    if (f.is_zero(L[0])) return std::nullopt;
    std::vector<E> inv(KK, f.zero());
    inv[0] = f.inv(L[0]);
    for (std::size_t m = 1; m < KK; ++m) {
        auto acc = f.zero();
        for (std::size_t a = 1; a <= m; ++a) acc = f.add(acc, f.mul(L[a], inv[m - a]));
        inv[m] = f.neg(f.mul(inv[0], acc));
    }
    Series<F> T(KK);
    for (std::size_t m = 0; m < KK; ++m)
        for (std::size_t a = 0; a <= m; ++a)
            if (!f.is_zero(inv[a]) && !G[m - a].is_zero()) T[m] = uni::add(f, T[m], uni::scale(f, G[m - a], inv[a]));

    auto dio = UniDiophant<F>::make(f, seeds);
    if (!dio) return std::nullopt;

    std::vector<Series<F>> U(r, Series<F>(KK));
    std::vector<Series<F>> P(r, Series<F>(KK));
    for (std::size_t t = 0; t < r; ++t) {
        U[t][0] = seeds[t];
        P[t][0] = t == 0 ? seeds[0] : uni::mul(f, P[t - 1][0], seeds[t]);
    }
    if (!(P[r - 1][0] == T[0])) return std::nullopt;
    for (std::size_t m = 1; m < KK; ++m) {
        for (std::size_t t = 1; t < r; ++t) {
            UP acc;
            for (std::size_t a = 0; a <= m; ++a)
                if (!P[t - 1][a].is_zero() && !U[t][m - a].is_zero())
                    acc = uni::add(f, acc, uni::mul(f, P[t - 1][a], U[t][m - a]));
            P[t][m] = std::move(acc);
        }
        UP e = uni::sub(f, T[m], P[r - 1][m]);
        if (e.is_zero()) continue;
        auto delta = dio->solve(f, e);
        UP dp = delta[0];
        U[0][m] = delta[0];
        P[0][m] = uni::add(f, P[0][m], delta[0]);
        for (std::size_t t = 1; t < r; ++t) {
            dp = uni::add(f, uni::mul(f, dp, U[t][0]), uni::mul(f, P[t - 1][0], delta[t]));
            U[t][m] = delta[t];
            P[t][m] = uni::add(f, P[t][m], dp);
        }
    }

    std::vector<std::vector<E>> tr(r, std::vector<E>(KK, f.zero()));
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t k = static_cast<std::size_t>(seeds[i].degree() - 1);
        for (std::size_t m = 0; m < KK; ++m) tr[i][m] = uni::coeff(f, U[i][m], k);
    }

    std::vector<std::size_t> rem(r);
    std::iota(rem.begin(), rem.end(), 0);
    Poly<F> grem = g;
    std::vector<E> lrem = L;
    std::vector<std::vector<E>> w(r, std::vector<E>(kTraceExtra, f.zero()));
    auto refresh = [&] {
        for (auto i : rem)
            for (std::size_t m = K; m < KK; ++m) {
                auto acc = f.zero();
                for (std::size_t a = 0; a <= m; ++a) acc = f.add(acc, f.mul(lrem[a], tr[i][m - a]));
                w[i][m - K] = acc;
            }
    };
    refresh();

    std::vector<BiFactor<F>> out;
    for (std::size_t k = 1; 2 * k <= rem.size();) {
        bool hit = uni::for_each_subset(rem.size(), k, [&](const std::vector<std::size_t>& sel) {
            for (std::size_t j = 0; j < kTraceExtra; ++j) {
                auto acc = f.zero();
                for (auto q : sel) acc = f.add(acc, w[rem[q]][j]);
                if (!f.is_zero(acc)) return false;
            }
            Series<F> c(U[rem[sel[0]]].begin(), U[rem[sel[0]]].begin() + static_cast<std::ptrdiff_t>(K));
            for (std::size_t q = 1; q < sel.size(); ++q) c = series_mul(f, c, U[rem[sel[q]]], K);
            std::vector<Poly<F>> cm(K, g.empty_like());
            for (std::size_t m = 0; m < K; ++m) {
                UP acc;
                for (std::size_t a = 0; a <= m; ++a)
                    if (!f.is_zero(lrem[a]) && !c[m - a].is_zero()) acc = uni::add(f, acc, uni::scale(f, c[m - a], lrem[a]));
                cm[m] = from_dense(f, acc, x, g.nvars, g.order);
            }
            Poly<F> cand = from_taylor(f, cm, y, s, bin);
            Poly<F> h = canonical(f, content_primitive(f, cand, x).second);
            auto q = divide_exact(f, grem, h);
            if (!q) return false;
            BiFactor<F> bf;
            for (auto i : sel) bf.seeds.push_back(rem[i]);
            bf.factor = std::move(h);
            out.push_back(std::move(bf));
            grem = std::move(*q);
            for (std::size_t i = sel.size(); i-- > 0;) rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(sel[i]));
            lrem = scalar_series(f, lc_in(f, grem, x), y, s, KK, bin);
            refresh();
            return true;
        });
        if (!hit) ++k;
    }
    if (!rem.empty()) {
        BiFactor<F> bf;
        bf.seeds = rem;
        bf.factor = canonical(f, content_primitive(f, grem, x).second);
        out.push_back(std::move(bf));
    }
    for (auto& bf : out) {
        bf.deg_y = std::max(degree(bf.factor, y), 0);
        bf.lc_deg_y = std::max(degree(lc_in(f, bf.factor, x), y), 0);
    }
    return out;
}

/// Partition of the univariate image factors joined over the bivariate
/// images in (x, y_j), with degree data of each block per y_j.
template <class F>
struct ImagePartition {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::vector<int>> deg, lc_deg;
    std::vector<std::vector<UniPoly<typename F::Elem>>> lc_img;
    std::vector<Poly<F>> first;
};

template <class F>
std::optional<ImagePartition<F>> image_partition(const F& f, const Poly<F>& g, std::size_t x,
                                                 const std::vector<std::size_t>& ys,
                                                 const std::vector<typename F::Elem>& point,
                                                 const std::vector<UniPoly<typename F::Elem>>& u, Binomials<F>& bin) {
    using E = typename F::Elem;
    std::size_t k = ys.size();
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < u.size(); ++i) blocks.push_back({i});
    std::vector<std::vector<BiFactor<F>>> found(k);
    ImagePartition<F> res;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> others;
        std::vector<E> vals;
        for (auto v : ys)
            if (v != ys[j]) {
                others.push_back(v);
                vals.push_back(point[v]);
            }
        Poly<F> gj = others.empty() ? g : evaluate_at(f, g, others, vals);
        std::vector<UniPoly<E>> seeds;
        for (const auto& b : blocks) {
            UniPoly<E> p = u[b[0]];
            for (std::size_t q = 1; q < b.size(); ++q) p = uni::mul(f, p, u[b[q]]);
            seeds.push_back(std::move(p));
        }
        auto bf = factor_bivariate(f, gj, x, ys[j], point[ys[j]], seeds, bin);
        if (!bf) return std::nullopt;
        if (bf->size() == 1) {
            std::vector<std::size_t> all(u.size());
            std::iota(all.begin(), all.end(), 0);
            res.blocks = {all};
            return res;
        }
        std::vector<std::vector<std::size_t>> next;
        for (auto& fac : *bf) {
            std::vector<std::size_t> merged;
            for (auto b : fac.seeds) merged.insert(merged.end(), blocks[b].begin(), blocks[b].end());
            std::sort(merged.begin(), merged.end());
            fac.seeds = merged;
            next.push_back(std::move(merged));
        }
        std::sort(next.begin(), next.end());
        blocks = std::move(next);
        if (j == 0)
            for (const auto& fac : *bf) res.first.push_back(fac.factor);
        found[j] = std::move(*bf);
    }
    res.blocks = blocks;
    res.deg.assign(blocks.size(), std::vector<int>(k, 0));
    res.lc_deg.assign(blocks.size(), std::vector<int>(k, 0));
    res.lc_img.assign(blocks.size(), std::vector<UniPoly<E>>(k, uni::constant(f, f.one())));
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& fac : found[j])
            for (std::size_t b = 0; b < blocks.size(); ++b)
                if (std::binary_search(blocks[b].begin(), blocks[b].end(), fac.seeds.front())) {
                    res.deg[b][j] += fac.deg_y;
                    res.lc_deg[b][j] += fac.lc_deg_y;
                    res.lc_img[b][j] = uni::mul(f, res.lc_img[b][j], to_dense(f, lc_in(f, fac.factor, x), ys[j]));
                }
    return res;
}

/// Solver for sum_B delta_B prod_{B' != B} h_B' = e in F[x, lower] with
/// deg_x delta_B < deg_x h_B.
template <class F>
class MultiDiophant {
public:
    using E = typename F::Elem;
    using UP = UniPoly<E>;

    MultiDiophant(const F& f, const std::vector<Poly<F>>& h, std::size_t x, std::vector<std::size_t> lower,
                  const std::vector<E>& point, std::vector<int> bounds, Rng& rng, Binomials<F>& bin)
        : f_(f), x_(x), lower_(std::move(lower)), point_(point), bounds_(std::move(bounds)), bin_(bin) {
        std::size_t r = h.size();
        like_ = h[0].empty_like();
        std::vector<Poly<F>> pre(r + 1), suf(r + 1);
        pre[0] = suf[r] = constant(f, like_.nvars, like_.order, f.one());
        for (std::size_t i = 0; i < r; ++i) pre[i + 1] = mul(f, pre[i], h[i]);
        for (std::size_t i = r; i-- > 0;) suf[i] = mul(f, suf[i + 1], h[i]);
        for (std::size_t i = 0; i < r; ++i) prod_.push_back(mul(f, pre[i], suf[i + 1]));
        for (const auto& p : h) degx_.push_back(degree(p, x));

        std::vector<E> vals;
        for (auto v : lower_) vals.push_back(point_[v]);
        std::vector<UP> base;
        for (std::size_t i = 0; i < r; ++i) {
            UP b = to_dense(f, lower_.empty() ? h[i] : evaluate_at(f, h[i], lower_, vals), x);
            if (b.degree() != degx_[i]) return;
            base.push_back(std::move(b));
        }
        base_ = UniDiophant<F>::make(f, std::move(base));
        if (!base_ || lower_.empty()) return;
        init_sparse(h, rng);
        init_dense();
    }

    bool ok() const { return base_.has_value(); }

    std::optional<std::vector<Poly<F>>> solve(const Poly<F>& e) {
        if (lower_.empty()) return from_base(e);
        if (sparse_) {
            auto s = solve_sparse(e);
            if (s && check(*s, e)) return s;
            sparse_ = false;
        }
        auto s = solve_dense(e, lower_.size());
        if (s && check(*s, e)) return s;
        return std::nullopt;
    }

private:
    std::vector<Poly<F>> from_base(const Poly<F>& e) const {
        auto s = base_->solve(f_, to_dense(f_, e, x_));
        std::vector<Poly<F>> out;
        for (const auto& p : s) out.push_back(from_dense(f_, p, x_, like_.nvars, like_.order));
        return out;
    }

    bool check(const std::vector<Poly<F>>& s, const Poly<F>& e) const {
        std::vector<std::pair<const Poly<F>*, const Poly<F>*>> pairs;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero()) pairs.emplace_back(&s[i], &prod_[i]);
        return dot(f_, pairs, like_) == e;
    }

    E monomial_value(const DegreeVector& m) const {
        auto v = f_.one();
        for (std::size_t l = 0; l < lower_.size(); ++l)
            if (m[lower_[l]]) v = f_.mul(v, power(f_, beta_[l], static_cast<std::uint64_t>(m[lower_[l]])));
        return v;
    }

    void init_sparse(const std::vector<Poly<F>>& h, Rng& rng) {
        std::size_t r = h.size();
        skel_.assign(r, {});
        std::size_t T = 1;
        for (std::size_t i = 0; i < r; ++i) {
            skel_[i].assign(static_cast<std::size_t>(degx_[i]), {});
            for (const auto& t : h[i].terms) {
                auto k = t.m[x_];
                if (static_cast<int>(k) >= degx_[i]) continue;
                DegreeVector m = t.m;
                m.set(x_, 0);
                skel_[i][k].push_back(std::move(m));
            }
            for (const auto& s : skel_[i]) T = std::max(T, s.size());
        }
        for (int attempt = 0; attempt < 4; ++attempt) {
            beta_.clear();
            for (std::size_t l = 0; l < lower_.size(); ++l) {
                E b = f_.random(rng);
                while (f_.is_zero(b)) b = f_.random(rng);
                beta_.push_back(std::move(b));
            }
            bool good = true;
            nodes_.assign(r, {});
            for (std::size_t i = 0; i < r && good; ++i)
                for (const auto& list : skel_[i]) {
                    std::vector<E> z;
                    for (const auto& m : list) z.push_back(monomial_value(m));
                    for (std::size_t a = 0; a < z.size() && good; ++a)
                        for (std::size_t b = a + 1; b < z.size() && good; ++b)
                            if (f_.equal(z[a], z[b])) good = false;
                    nodes_[i].push_back(std::move(z));
                }
            if (!good) continue;
            pts_.clear();
            std::vector<E> vals(lower_.size(), f_.one());
            for (std::size_t p = 0; p < T && good; ++p) {
                std::vector<UP> img;
                for (std::size_t i = 0; i < r && good; ++i) {
                    UP b = to_dense(f_, evaluate_at(f_, h[i], lower_, vals), x_);
                    if (b.degree() != degx_[i]) good = false;
                    img.push_back(std::move(b));
                }
                if (!good) break;
                auto d = UniDiophant<F>::make(f_, std::move(img));
                if (!d) good = false;
                else pts_.push_back(std::move(*d));
                for (std::size_t l = 0; l < lower_.size(); ++l) vals[l] = f_.mul(vals[l], beta_[l]);
            }
            if (!good) continue;
            sparse_ = true;
            return;
        }
    }

    std::optional<std::vector<Poly<F>>> solve_sparse(const Poly<F>& e) const {
        std::size_t T = pts_.size(), r = skel_.size();
        int dx = std::max(degree(e, x_), 0);
        std::vector<UP> img(T, UP(std::vector<E>(static_cast<std::size_t>(dx) + 1, f_.zero())));
        for (const auto& t : e.terms) {
            E mv = monomial_value(t.m);
            E w = t.c;
            auto k = t.m[x_];
            for (std::size_t p = 0; p < T; ++p) {
                img[p].c[k] = f_.add(img[p].c[k], w);
                w = f_.mul(w, mv);
            }
        }
        std::vector<std::vector<UP>> sol;
        for (std::size_t p = 0; p < T; ++p) {
            uni::normalize(f_, img[p]);
            sol.push_back(pts_[p].solve(f_, img[p]));
        }
        std::vector<Poly<F>> out;
        for (std::size_t i = 0; i < r; ++i) {
            Poly<F> res = like_.empty_like();
            for (std::size_t k = 0; k < skel_[i].size(); ++k) {
                const auto& mons = skel_[i][k];
                std::size_t nn = mons.size();
                std::vector<E> v(T);
                for (std::size_t p = 0; p < T; ++p) v[p] = uni::coeff(f_, sol[p][i], k);
                if (nn == 0) {
                    for (const auto& c : v)
                        if (!f_.is_zero(c)) return std::nullopt;
                    continue;
                }
                auto c = solve_vandermonde(f_, nodes_[i][k], std::vector<E>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nn)));
                if (!c) return std::nullopt;
                if (T > nn) {
                    std::vector<E> pw(nn);
                    for (std::size_t u = 0; u < nn; ++u) pw[u] = power(f_, nodes_[i][k][u], nn);
                    for (std::size_t p = nn; p < T; ++p) {
                        auto acc = f_.zero();
                        for (std::size_t u = 0; u < nn; ++u) {
                            acc = f_.add(acc, f_.mul((*c)[u], pw[u]));
                            pw[u] = f_.mul(pw[u], nodes_[i][k][u]);
                        }
                        if (!f_.equal(acc, v[p])) return std::nullopt;
                    }
                }
                for (std::size_t u = 0; u < nn; ++u) {
                    if (f_.is_zero((*c)[u])) continue;
                    DegreeVector m = mons[u];
                    m.set(x_, static_cast<std::uint32_t>(k));
                    res.terms.push_back({std::move(m), (*c)[u]});
                }
            }
            normalize(f_, res);
            out.push_back(std::move(res));
        }
        return out;
    }

    void init_dense() {
        std::size_t L = lower_.size(), r = prod_.size();
        btay_.assign(L + 1, {});
        for (std::size_t t = 1; t <= L; ++t) {
            std::vector<std::size_t> later(lower_.begin() + static_cast<std::ptrdiff_t>(t), lower_.end());
            std::vector<E> vals;
            for (auto v : later) vals.push_back(point_[v]);
            auto y = lower_[t - 1];
            for (std::size_t i = 0; i < r; ++i) {
                Poly<F> img = later.empty() ? prod_[i] : evaluate_at(f_, prod_[i], later, vals);
                btay_[t].push_back(taylor(f_, img, y, point_[y], static_cast<std::size_t>(bounds_[t - 1]), bin_));
            }
        }
    }

    std::optional<std::vector<Poly<F>>> solve_dense(const Poly<F>& e, std::size_t t) const {
        if (t == 0) return from_base(e);
        std::size_t r = prod_.size();
        auto y = lower_[t - 1];
        const E& s = point_[y];
        std::size_t d = static_cast<std::size_t>(bounds_[t - 1]);
        auto et = taylor(f_, e, y, s, d, bin_);
        std::vector<Poly<F>> S(d + 1, like_.empty_like());
        std::vector<std::vector<Poly<F>>> sig(r, std::vector<Poly<F>>(d + 1, like_.empty_like()));
        for (std::size_t m = 0; m <= d; ++m) {
            Poly<F> c = sub(f_, et[m], S[m]);
            if (c.is_zero()) continue;
            auto del = solve_dense(c, t - 1);
            if (!del) return std::nullopt;
            for (std::size_t i = 0; i < r; ++i) {
                if ((*del)[i].is_zero()) continue;
                for (std::size_t b = 0; m + b <= d && b < btay_[t][i].size(); ++b)
                    if (!btay_[t][i][b].is_zero()) S[m + b] = add(f_, S[m + b], mul(f_, (*del)[i], btay_[t][i][b]));
                sig[i][m] = std::move((*del)[i]);
            }
        }
        std::vector<Poly<F>> out;
        for (std::size_t i = 0; i < r; ++i) out.push_back(from_taylor(f_, sig[i], y, s, bin_));
        return out;
    }

    const F& f_;
    std::size_t x_;
    std::vector<std::size_t> lower_;
    const std::vector<E>& point_;
    std::vector<int> bounds_;
    Binomials<F>& bin_;
    Poly<F> like_;
    std::vector<Poly<F>> prod_;
    std::vector<int> degx_;
    std::optional<UniDiophant<F>> base_;
    bool sparse_ = false;
    std::vector<std::vector<std::vector<DegreeVector>>> skel_;
    std::vector<E> beta_;
    std::vector<std::vector<std::vector<E>>> nodes_;
    std::vector<UniDiophant<F>> pts_;
    std::vector<std::vector<std::vector<Poly<F>>>> btay_;
};

/// Hensel lifting of the univariate images u0 (one per block) to factors
/// of target whose leading coefficients in x are lambda, one variable of
/// ys at a time. bound[B][v] bounds deg_v of factor B.
template <class F>
std::optional<std::vector<Poly<F>>> wang_lift(const F& f, const Poly<F>& target, const std::vector<Poly<F>>& lambda,
                                              const std::vector<UniPoly<typename F::Elem>>& u0, std::size_t x,
                                              const std::vector<std::size_t>& ys,
                                              const std::vector<typename F::Elem>& point,
                                              const std::vector<std::vector<int>>& bound, Rng& rng) {
    using E = typename F::Elem;
    std::size_t n = target.nvars, r = u0.size();
    MonomialOrder o = target.order;
    Binomials<F> bin(f);
    std::vector<Poly<F>> h(r);
    for (std::size_t b = 0; b < r; ++b) {
        E lv = evaluate(f, lambda[b], point);
        if (f.is_zero(lv) || f.is_zero(u0[b].lc())) return std::nullopt;
        h[b] = from_dense(f, uni::scale(f, u0[b], f.div(lv, u0[b].lc())), x, n, o);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
        std::size_t z = ys[j];
        std::vector<std::size_t> later(ys.begin() + static_cast<std::ptrdiff_t>(j) + 1, ys.end());
        std::vector<E> vals;
        for (auto v : later) vals.push_back(point[v]);
        Poly<F> G = later.empty() ? target : evaluate_at(f, target, later, vals);
        std::size_t D = 0;
        for (std::size_t b = 0; b < r; ++b) D = std::max(D, static_cast<std::size_t>(std::max(bound[b][z], 0)));

        std::vector<std::vector<Poly<F>>> H(r);
        for (std::size_t b = 0; b < r; ++b) {
            Poly<F> lam = later.empty() ? lambda[b] : evaluate_at(f, lambda[b], later, vals);
            auto dB = static_cast<std::uint32_t>(degree(h[b], x));
            DegreeVector xm(n);
            xm.set(x, dB);
            Poly<F> lead = mul_term(f, coefficient(f, h[b], x, dB), f.one(), xm);
            Poly<F> init = add(f, sub(f, h[b], lead), mul_term(f, lam, f.one(), xm));
            H[b] = taylor(f, init, z, point[z], D, bin);
        }
        auto Gs = taylor(f, G, z, point[z], D, bin);

        std::vector<std::size_t> lower(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(j));
        std::vector<int> lb;
        for (auto v : lower) {
            int m = 0;
            for (std::size_t b = 0; b < r; ++b) m = std::max(m, bound[b][v]);
            lb.push_back(m);
        }
        std::vector<Poly<F>> h0;
        for (std::size_t b = 0; b < r; ++b) h0.push_back(H[b][0]);
        MultiDiophant<F> dio(f, h0, x, lower, point, lb, rng, bin);
        if (!dio.ok()) return std::nullopt;

        std::vector<std::vector<Poly<F>>> P(r, std::vector<Poly<F>>(D + 1, G.empty_like()));
        for (std::size_t t = 0; t < r; ++t) P[t][0] = t == 0 ? H[0][0] : mul(f, P[t - 1][0], H[t][0]);
        for (std::size_t m = 1; m <= D; ++m) {
            P[0][m] = H[0][m];
            for (std::size_t t = 1; t < r; ++t) {
                std::vector<std::pair<const Poly<F>*, const Poly<F>*>> pairs;
                for (std::size_t a = 0; a <= m; ++a)
                    if (!P[t - 1][a].is_zero() && !H[t][m - a].is_zero()) pairs.emplace_back(&P[t - 1][a], &H[t][m - a]);
                P[t][m] = dot(f, pairs, G);
            }
            Poly<F> e = sub(f, Gs[m], P[r - 1][m]);
            if (e.is_zero()) continue;
            auto delta = dio.solve(e);
            if (!delta) return std::nullopt;
            Poly<F> dp = (*delta)[0];
            H[0][m] = add(f, H[0][m], (*delta)[0]);
            P[0][m] = add(f, P[0][m], (*delta)[0]);
            for (std::size_t t = 1; t < r; ++t) {
                dp = add(f, mul(f, dp, H[t][0]), mul(f, P[t - 1][0], (*delta)[t]));
                H[t][m] = add(f, H[t][m], (*delta)[t]);
                P[t][m] = add(f, P[t][m], dp);
            }
        }
        for (std::size_t b = 0; b < r; ++b) h[b] = from_taylor(f, H[b], z, point[z], bin);
        Poly<F> prod = h[0];
        for (std::size_t b = 1; b < r; ++b) prod = mul(f, prod, h[b]);
        if (!(prod == G)) return std::nullopt;
    }
    return h;
}

/// Leading coefficients imposed on the lifted factors and the matching
/// multiple of g. A monomial leading coefficient is distributed from the
/// bivariate degree data. Otherwise its irreducible factors are assigned to
/// blocks by dividing their images into the leading coefficients of the
/// bivariate factors; when that is inconsistent every factor receives all
/// of it.
template <class D>
struct LcPlan {
    std::vector<Poly<D>> lambda;
    Poly<D> target;
    bool exact = false;
};

template <class D, class F, class ToF>
std::optional<std::vector<std::vector<unsigned>>> distribute_lc(const F& f, const MultiFactors<D>& lf,
                                                                const std::vector<std::size_t>& ys,
                                                                const std::vector<typename F::Elem>& point,
                                                                const ImagePartition<F>& part, ToF to_f) {
    using E = typename F::Elem;
    std::size_t K = lf.size(), R = part.blocks.size();
    std::vector<UniPoly<E>> img(K);
    std::vector<std::size_t> jk(K);
    for (std::size_t k = 0; k < K; ++k) {
        auto lk = to_f(lf.factors[k]);
        std::size_t j = 0;
        while (j < ys.size() && degree(lk, ys[j]) <= 0) ++j;
        if (j == ys.size()) return std::nullopt;
        std::vector<std::size_t> others;
        std::vector<E> vals;
        for (auto v : ys)
            if (v != ys[j]) {
                others.push_back(v);
                vals.push_back(point[v]);
            }
        auto I = to_dense(f, others.empty() ? lk : evaluate_at(f, lk, others, vals), ys[j]);
        if (I.degree() <= 0) return std::nullopt;
        img[k] = uni::monic(f, I);
        jk[k] = j;
    }
    std::vector<std::size_t> order(K);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return img[a].degree() > img[b].degree(); });
    auto work = part.lc_img;
    std::vector<std::vector<unsigned>> e(K, std::vector<unsigned>(R, 0));
    for (auto k : order) {
        unsigned sum = 0;
        for (std::size_t b = 0; b < R; ++b) {
            auto& w = work[b][jk[k]];
            while (auto q = uni::divide_exact(f, w, img[k])) {
                w = std::move(*q);
                ++e[k][b];
            }
            sum += e[k][b];
        }
        if (sum != lf.exponents[k]) return std::nullopt;
    }
    return e;
}

template <class D, class F, class ToF>
LcPlan<D> lc_plan(const D& d, const Poly<D>& g, std::size_t x, const std::vector<std::size_t>& ys, const F& f,
                  const std::vector<typename F::Elem>& point, const ImagePartition<F>& part, ToF to_f) {
    LcPlan<D> plan;
    Poly<D> L = lc_in(d, g, x);
    const auto& lc_deg = part.lc_deg;
    std::size_t R = lc_deg.size();
    auto finish = [&](const typename D::Elem& c) {
        plan.exact = true;
        if constexpr (D::is_field) {
            plan.target = scale(d, g, d.inv(c));
        } else {
            for (auto& l : plan.lambda) l = scale(d, l, c);
            plan.target = scale(d, g, power(d, c, R - 1));
        }
    };
    if (L.size() == 1) {
        bool ok = true;
        for (std::size_t j = 0; j < ys.size() && ok; ++j) {
            int sum = 0;
            for (std::size_t b = 0; b < R; ++b) sum += lc_deg[b][j];
            ok = sum == std::max(degree(L, ys[j]), 0);
        }
        if (ok) {
            for (std::size_t b = 0; b < R; ++b) {
                DegreeVector m(g.nvars);
                for (std::size_t j = 0; j < ys.size(); ++j) m.set(ys[j], static_cast<std::uint32_t>(lc_deg[b][j]));
                plan.lambda.push_back(monomial(d, g.nvars, g.order, d.one(), std::move(m)));
            }
            finish(L.lc());
            return plan;
        }
    } else {
        auto lf = factor(d, L);
        if (auto e = distribute_lc<D>(f, lf, ys, point, part, to_f)) {
            for (std::size_t b = 0; b < R; ++b) {
                Poly<D> l = constant(d, g.nvars, g.order, d.one());
                for (std::size_t k = 0; k < lf.size(); ++k)
                    if ((*e)[k][b]) l = mul(d, l, pow(d, lf.factors[k], (*e)[k][b]));
                plan.lambda.push_back(std::move(l));
            }
            finish(lf.unit);
            return plan;
        }
    }
    plan.lambda.assign(R, L);
    plan.target = mul(d, pow(d, L, R - 1), g);
    return plan;
}

template <class E>
std::vector<std::vector<int>> degree_bounds(const MultiPoly<E>& g, const std::vector<std::size_t>& ys,
                                            const std::vector<MultiPoly<E>>& lambda, const std::vector<std::vector<int>>& deg,
                                            const std::vector<std::vector<int>>& lc_deg) {
    std::size_t R = deg.size();
    std::vector<std::vector<int>> bound(R, std::vector<int>(g.nvars, 0));
    for (std::size_t b = 0; b < R; ++b)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            auto v = ys[j];
            int ld = std::max(degree(lambda[b], v), 0);
            int others = 0;
            for (std::size_t c = 0; c < R; ++c)
                if (c != b) others += deg[c][j];
            bound[b][v] = std::max(ld - lc_deg[b][j] + degree(g, v) - others, ld);
        }
    return bound;
}

template <class F>
typename F::Elem random_element(const F& f, Rng& rng, bool nonzero) {
    auto v = f.random(rng);
    while (nonzero && f.is_zero(v)) v = f.random(rng);
    return v;
}

template <class F>
std::vector<UniPoly<typename F::Elem>> block_images(const F& f, const std::vector<UniPoly<typename F::Elem>>& u,
                                                    const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<UniPoly<typename F::Elem>> out;
    for (const auto& b : blocks) {
        auto p = u[b[0]];
        for (std::size_t q = 1; q < b.size(); ++q) p = uni::mul(f, p, u[b[q]]);
        out.push_back(std::move(p));
    }
    return out;
}

inline constexpr int kImageCandidates = 3;

/// Irreducible factors of g over a finite field; g is square-free,
/// primitive in x with a nonzero derivative in x, and involves at least
/// one other variable.
template <class F>
std::vector<Poly<F>> factor_core_field(const F& f, const Poly<F>& g, std::size_t x, Rng& rng) {
    using E = typename F::Elem;
    std::vector<std::size_t> ys;
    for (auto v : present_vars(g))
        if (v != x) ys.push_back(v);
    Poly<F> L = lc_in(f, g, x);
    int dx = degree(g, x);
    for (int attempt = 0; attempt < kFactorAttempts; ++attempt) {
        std::vector<E> best_pt;
        std::vector<UniPoly<E>> best_u;
        for (int tries = 0, good = 0; tries < 4 * kImageCandidates && good < kImageCandidates; ++tries) {
            std::vector<E> pt(g.nvars, f.zero()), vals;
            for (auto v : ys) vals.push_back(pt[v] = random_element(f, rng, false));
            if (f.is_zero(evaluate(f, L, pt))) continue;
            auto u = to_dense(f, evaluate_at(f, g, ys, vals), x);
            if (u.degree() != dx || !uni::is_squarefree(f, u)) continue;
            ++good;
            auto fu = uni::factor_ff(f, u, rng());
            if (fu.size() == 1) return {canonical(f, g)};
            if (best_u.empty() || fu.size() < best_u.size()) {
                best_pt = pt;
                best_u = fu.factors;
            }
        }
        if (best_u.empty()) continue;
        Binomials<F> bin(f);
        auto part = image_partition(f, g, x, ys, best_pt, best_u, bin);
        if (!part) continue;
        if (part->blocks.size() == 1) return {canonical(f, g)};
        if (ys.size() == 1) return part->first;
        auto plan = lc_plan(f, g, x, ys, f, best_pt, *part, [](const Poly<F>& a) { return a; });
        auto bound = degree_bounds(g, ys, plan.lambda, part->deg, part->lc_deg);
        auto H = wang_lift(f, plan.target, plan.lambda, block_images(f, best_u, part->blocks), x, ys, best_pt, bound, rng);
        if (!H) continue;
        std::vector<Poly<F>> out;
        for (auto& h : *H) out.push_back(canonical(f, plan.exact ? h : content_primitive(f, h, x).second));
        return out;
    }
    throw AlgorithmFailure("multivariate factorization: retry budget exhausted");
}

template <class F>
Poly<F> to_field(const F& f, const Poly<IntegerRing>& a) {
    Poly<F> r(a.nvars, a.order);
    r.terms.reserve(a.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m, f.from_integer(t.c)});
    normalize(f, r);
    return r;
}

inline Integer elem_to_integer(const Zp64&, std::uint64_t v) { return from_u64(v); }
inline Integer elem_to_integer(const ZpBig&, const Integer& v) { return v; }

template <class F>
Poly<IntegerRing> symmetric_lift(const F& f, const Poly<F>& a) {
    Integer P = f.characteristic();
    Poly<IntegerRing> r(a.nvars, a.order);
    for (const auto& t : a.terms) r.terms.push_back({t.m, symmetric_mod(elem_to_integer(f, t.c), P)});
    return r;
}

/// Lifts over Z/P and keeps the result only if the primitive parts divide g
/// exactly with cofactor +-1.
template <class F>
std::optional<std::vector<Poly<IntegerRing>>> lift_over(const F& f, const Poly<IntegerRing>& g, std::size_t x,
                                                        const std::vector<std::size_t>& ys,
                                                        const std::vector<Integer>& point, const LcPlan<IntegerRing>& plan,
                                                        const std::vector<UniPoly<Integer>>& ub,
                                                        const std::vector<std::vector<int>>& bound, Rng& rng) {
    using E = typename F::Elem;
    IntegerRing z;
    std::vector<E> pt;
    for (const auto& v : point) pt.push_back(f.from_integer(v));
    std::vector<Poly<F>> lam;
    for (const auto& l : plan.lambda) lam.push_back(to_field(f, l));
    std::vector<UniPoly<E>> u;
    for (const auto& p : ub) {
        UniPoly<E> q;
        for (const auto& c : p.c) q.c.push_back(f.from_integer(c));
        uni::normalize(f, q);
        if (q.degree() != p.degree()) return std::nullopt;
        u.push_back(std::move(q));
    }
    auto H = wang_lift(f, to_field(f, plan.target), lam, u, x, ys, pt, bound, rng);
    if (!H) return std::nullopt;
    std::vector<Poly<IntegerRing>> out;
    Poly<IntegerRing> rest = g;
    for (const auto& h : *H) {
        auto hz = canonical(z, content_primitive(z, symmetric_lift(f, h), x).second);
        auto q = divide_exact(z, rest, hz);
        if (!q) return std::nullopt;
        rest = std::move(*q);
        out.push_back(std::move(hz));
    }
    if (!rest.is_constant() || abs(rest.lc()) != 1) return std::nullopt;
    return out;
}

/// Integer version of factor_core_field for a primitive g: images at small
/// integer points, partitions computed modulo a word-size prime, lifting
/// modulo a word-size prime first and modulo a prime above the coefficient
/// bound when that fails.
inline std::vector<Poly<IntegerRing>> factor_core_z(const Poly<IntegerRing>& g, std::size_t x, Rng& rng) {
    IntegerRing z;
    std::vector<std::size_t> ys;
    for (auto v : present_vars(g))
        if (v != x) ys.push_back(v);
    Poly<IntegerRing> L = lc_in(z, g, x);
    int dx = degree(g, x);
    for (int attempt = 0; attempt < kFactorAttempts; ++attempt) {
        long range = 2 + attempt;
        std::vector<Integer> best_pt;
        std::vector<UniPoly<Integer>> best_u;
        for (int tries = 0, good = 0; tries < 4 * kImageCandidates && good < kImageCandidates; ++tries) {
            std::vector<Integer> pt(g.nvars, Integer(0)), vals;
            for (auto v : ys) {
                long s = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(range));
                pt[v] = rng() % 2 ? s : -s;
                vals.push_back(pt[v]);
            }
            if (evaluate(z, L, pt) == 0) continue;
            auto u = to_dense(z, evaluate_at(z, g, ys, vals), x);
            if (u.degree() != dx || !uni::is_squarefree(z, u)) continue;
            ++good;
            auto fu = uni::factor_z(u);
            std::vector<UniPoly<Integer>> fs;
            for (std::size_t i = 0; i < fu.size(); ++i)
                if (fu.factors[i].degree() > 0) fs.push_back(fu.factors[i]);
            if (fs.size() == 1) return {g};
            if (best_u.empty() || fs.size() < best_u.size()) {
                best_pt = pt;
                best_u = fs;
            }
        }
        if (best_u.empty()) continue;

        std::optional<ImagePartition<Zp64>> part;
        Zp64 fp(2);
        std::vector<std::uint64_t> pt;
        for (int ptry = 0; ptry < 4 && !part; ++ptry) {
            fp = Zp64(prev_prime((std::uint64_t(1) << 62) - (rng() >> 4)), false);
            pt.clear();
            for (const auto& v : best_pt) pt.push_back(fp.from_integer(v));
            std::vector<UniPoly<std::uint64_t>> up;
            for (const auto& p : best_u) {
                UniPoly<std::uint64_t> q;
                for (const auto& c : p.c) q.c.push_back(fp.from_integer(c));
                uni::normalize(fp, q);
                if (q.degree() != p.degree()) break;
                up.push_back(uni::monic(fp, q));
            }
            if (up.size() != best_u.size()) continue;
            Binomials<Zp64> bin(fp);
            auto res = image_partition(fp, reduce_mod(g, fp), x, ys, pt, up, bin);
            if (res) part = std::move(*res);
        }
        if (!part) continue;
        if (part->blocks.size() == 1) return {g};

        auto plan = lc_plan(z, g, x, ys, fp, pt, *part, [&](const Poly<IntegerRing>& a) { return reduce_mod(a, fp); });
        auto bound = degree_bounds(g, ys, plan.lambda, part->deg, part->lc_deg);
        std::vector<UniPoly<Integer>> ub;
        for (const auto& b : part->blocks) {
            auto p = best_u[b[0]];
            for (std::size_t q = 1; q < b.size(); ++q) p = uni::mul(z, p, best_u[b[q]]);
            ub.push_back(std::move(p));
        }

        Zp64 fw(prev_prime((std::uint64_t(1) << 62) - (rng() >> 4)), false);
        if (auto r = lift_over(fw, g, x, ys, best_pt, plan, ub, bound, rng)) return *r;

        Integer norm = 0;
        for (const auto& t : plan.target.terms) norm += abs(t.c);
        unsigned long degsum = 0;
        for (auto dg : degrees(plan.target)) degsum += dg;
        Integer B = (Integer(1) << degsum) * norm;
        ZpBig fb(next_prime(Integer(2) * B + 1), false);
        if (auto r = lift_over(fb, g, x, ys, best_pt, plan, ub, bound, rng)) return *r;
    }
    throw AlgorithmFailure("multivariate factorization: retry budget exhausted");
}

/// Variable to lift over: nonzero derivative, then least degree, then
/// fewest terms in the leading coefficient.
template <class D>
std::size_t main_variable(const D& d, const Poly<D>& g) {
    std::size_t best = g.nvars;
    std::pair<int, std::size_t> key{};
    for (auto v : present_vars(g)) {
        if (derivative(d, g, v).is_zero()) continue;
        std::pair<int, std::size_t> k{degree(g, v), lc_in(d, g, v).size()};
        if (best == g.nvars || k < key) {
            best = v;
            key = k;
        }
    }
    if (best == g.nvars) throw AlgorithmFailure("square-free input has no separable variable");
    return best;
}

template <class D>
void factor_squarefree(const D& d, const Poly<D>& g0, Rng& rng, std::vector<Poly<D>>& out) {
    DegreeVector mc = monomial_content(g0);
    for (std::size_t i = 0; i < g0.nvars; ++i)
        if (mc[i]) out.push_back(variable(d, g0.nvars, i, g0.order));
    Poly<D> g = divide_monomial(g0, mc);
    auto vars = present_vars(g);
    if (vars.empty()) return;
    if (vars.size() == 1) {
        auto uf = uni::factor(d, to_dense(d, g, vars[0]));
        for (const auto& p : uf.factors)
            if (p.degree() > 0) out.push_back(canonical(d, from_dense(d, p, vars[0], g.nvars, g.order)));
        return;
    }
    std::size_t x = main_variable(d, g);
    auto [c, pp] = content_primitive(d, g, x);
    if (!c.is_constant()) factor_squarefree(d, c, rng, out);
    if constexpr (FiniteFieldDomain<D>) {
        Poly<D> a = gcd(d, pp, derivative(d, pp, x));
        if (!a.is_constant()) {
            factor_squarefree(d, a, rng, out);
            pp = exact_quotient(d, pp, a);
        }
    }
    pp = canonical(d, pp);
    if (present_vars(pp).size() == 1 || degree(pp, x) <= 1) {
        if (degree(pp, x) == 1 && present_vars(pp).size() > 1)
            out.push_back(pp);
        else
            factor_squarefree(d, pp, rng, out);
        return;
    }
    std::vector<Poly<D>> fs;
    if constexpr (std::is_same_v<D, IntegerRing>)
        fs = factor_core_z(pp, x, rng);
    else
        fs = factor_core_field(d, pp, x, rng);
    for (auto& h : fs) out.push_back(canonical(d, h));
}

template <class D>
bool poly_less(const D& d, const Poly<D>& a, const Poly<D>& b) {
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = a.compare(a.terms[i].m, b.terms[i].m);
        if (c) return c < 0;
        if (!d.equal(a.terms[i].c, b.terms[i].c)) return elem_less(d, a.terms[i].c, b.terms[i].c);
    }
    return false;
}

}  // namespace detail

/// f = unit * prod g_i^e_i with g_i irreducible and canonical (monic over
/// fields and Q, positive leading coefficient over Z), sorted by
/// multiplicity, total degree and terms.
template <class D>
MultiFactors<D> factor(const D& d, const Poly<D>& f) {
    if (f.is_zero()) throw ArithmeticError("factorization of zero");
    if constexpr (is_rationals_v<D>) {
        auto zf = factor(IntegerRing(), detail::clear_denominators(f));
        MultiFactors<D> out;
        for (std::size_t i = 0; i < zf.size(); ++i) out.add(canonical(d, detail::to_rationals(zf.factors[i])), zf.exponents[i]);
        out.unit = detail::unit_of(d, f, out.factors, out.exponents);
        return out;
    } else if constexpr (std::is_same_v<D, IntegerRing> || FiniteFieldDomain<D>) {
        Rng rng(0x27d4eb2f165667c5ULL);
        auto sq = squarefree(d, f);
        MultiFactors<D> out;
        for (std::size_t i = 0; i < sq.size(); ++i) {
            std::vector<Poly<D>> fs;
            detail::factor_squarefree(d, sq.factors[i], rng, fs);
            for (auto& h : fs) out.add(std::move(h), sq.exponents[i]);
        }
        out.sort([&](const Poly<D>& a, unsigned ea, const Poly<D>& b, unsigned eb) {
            if (ea != eb) return ea < eb;
            return detail::poly_less(d, a, b);
        });
        out.unit = detail::unit_of(d, f, out.factors, out.exponents);
        return out;
    } else {
        throw UnsupportedRingError("multivariate factorization over " + d.describe());
    }
}

/// True when f is irreducible: nonconstant, and not a product of two
/// nonconstant factors.
template <class D>
bool is_irreducible(const D& d, const Poly<D>& f) {
    if (f.is_zero() || f.is_constant()) return false;
    auto fs = factor(d, f);
    return fs.size() == 1 && fs.exponents[0] == 1;
}

}  // namespace multi
}  // namespace rings
