#pragma once

/**
 * @file buchberger.hpp
 * @brief Buchberger's algorithm with the Gebauer-Moller pair update,
 *        normal and sugar selection, and geobucket reduction.
 *
 *     Zp64 f(1000003);
 *     auto basis = gb::groebner_basis(f, {p1, p2, p3}, MonomialOrder::GrevLex);
 *
 * Over Q the computation runs on primitive integer polynomials and the
 * basis is made monic at the end.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "../deadline.hpp"
#include "../errors.hpp"
#include "../frac.hpp"
#include "../integers.hpp"
#include "../multivar/gcd.hpp"
#include "../multivar/multipoly.hpp"

namespace rings {
namespace gb {

enum class Selection { Normal, Sugar };

struct Options {
    bool criteria = true;
    /// Defaults to sugar for LEX and normal for graded orders.
    std::optional<Selection> selection;
};

struct Stats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t product_skipped = 0;
    std::size_t chain_skipped = 0;
};

namespace detail {

using multi::Poly;

template <class D>
using Terms = std::vector<Term<typename D::Elem>>;

/// Bit i % 64 is set when variable i occurs; a necessary condition for
/// a | b is mask(a) & ~mask(b) == 0.
inline std::uint64_t divmask(const DegreeVector& m) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) r |= std::uint64_t{1} << (i % 64);
    return r;
}

/// Sum of a[ia..] and b[ib..], consuming both.
template <class D>
Terms<D> merge(const D& d, MonomialOrder o, Terms<D>& a, std::size_t ia, Terms<D>& b, std::size_t ib) {
    Terms<D> out;
    out.reserve(a.size() - ia + b.size() - ib);
    while (ia < a.size() && ib < b.size()) {
        int c = order_compare(a[ia].m, b[ib].m, o);
        if (c > 0) {
            out.push_back(std::move(a[ia++]));
        } else if (c < 0) {
            out.push_back(std::move(b[ib++]));
        } else {
            auto s = d.add(a[ia].c, b[ib].c);
            if (!d.is_zero(s)) out.push_back({std::move(a[ia].m), std::move(s)});
            ++ia;
            ++ib;
        }
    }
    for (; ia < a.size(); ++ia) out.push_back(std::move(a[ia]));
    for (; ib < b.size(); ++ib) out.push_back(std::move(b[ib]));
    return out;
}

/// Sum of sorted term lists in buckets of capacity 4^(i+1).
template <class D>
class Geobucket {
public:
    Geobucket(const D& d, MonomialOrder o) : d_(d), o_(o) {}

    void add(Terms<D> p) {
        if (p.empty()) return;
        std::size_t i = 0;
        for (;;) {
            while (p.size() > cap(i)) ++i;
            if (i >= b_.size()) b_.resize(i + 1);
            auto& bk = b_[i];
            if (bk.head == bk.t.size()) {
                bk.t = std::move(p);
                bk.head = 0;
                return;
            }
            p = merge(d_, o_, bk.t, bk.head, p, 0);
            bk.t.clear();
            bk.head = 0;
        }
    }

    std::optional<Term<typename D::Elem>> pop() {
        for (;;) {
            std::size_t best = b_.size();
            for (std::size_t i = 0; i < b_.size(); ++i) {
                if (b_[i].head == b_[i].t.size()) continue;
                if (best == b_.size() || order_compare(lead(i).m, lead(best).m, o_) > 0) best = i;
            }
            if (best == b_.size()) return std::nullopt;
            auto t = std::move(lead(best));
            advance(best);
            for (std::size_t i = 0; i < b_.size(); ++i) {
                if (i == best || b_[i].head == b_[i].t.size() || !(lead(i).m == t.m)) continue;
                t.c = d_.add(t.c, lead(i).c);
                advance(i);
            }
            if (!d_.is_zero(t.c)) return t;
        }
    }

    void scale(const typename D::Elem& c) {
        for (auto& bk : b_)
            for (std::size_t k = bk.head; k < bk.t.size(); ++k) bk.t[k].c = d_.mul(bk.t[k].c, c);
    }

private:
    struct Bucket {
        Terms<D> t;
        std::size_t head = 0;
    };

    static std::size_t cap(std::size_t i) { return std::size_t{4} << (2 * i); }
    Term<typename D::Elem>& lead(std::size_t i) { return b_[i].t[b_[i].head]; }
    void advance(std::size_t i) {
        if (++b_[i].head == b_[i].t.size()) {
            b_[i].t.clear();
            b_[i].head = 0;
        }
    }

    const D& d_;
    MonomialOrder o_;
    std::vector<Bucket> b_;
};

/// c * x^s * (p without its leading term).
template <class D>
Terms<D> shifted_tail(const D& d, const Poly<D>& p, const typename D::Elem& c, const DegreeVector& s) {
    Terms<D> r;
    r.reserve(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) r.push_back({p.terms[k].m + s, d.mul(c, p.terms[k].c)});
    return r;
}

template <class D>
struct Entry {
    Poly<D> p;
    std::uint64_t mask;
    std::uint32_t sugar;
    bool active;
};

template <class D>
Entry<D> make_entry(Poly<D> p, std::uint32_t sugar) {
    auto mask = divmask(p.lm());
    return {std::move(p), mask, sugar, true};
}

/// Reduces the contents of `bk` by the active entries of `g`, skipping
/// index `skip`; the divisor is the last matching entry. Over a field the
/// reducer coefficient is c / lc; over Z the remainder is scaled by
/// lc / gcd instead (fraction-free).
template <class D>
Poly<D> reduce(const D& d, Geobucket<D>& bk, const std::vector<Entry<D>>& g, std::size_t skip, Poly<D> r) {
    std::size_t steps = 0;
    while (auto t = bk.pop()) {
        if ((++steps & 1023) == 0) check_deadline();
        auto tm = divmask(t->m);
        const Entry<D>* e = nullptr;
        for (std::size_t k = g.size(); k-- > 0;) {
            if (k == skip || !g[k].active || (g[k].mask & ~tm)) continue;
            if (g[k].p.lm().divides(t->m)) {
                e = &g[k];
                break;
            }
        }
        if (!e) {
            r.terms.push_back(std::move(*t));
            continue;
        }
        DegreeVector s = t->m - e->p.lm();
        if constexpr (D::is_field) {
            auto q = d.is_one(e->p.lc()) ? d.neg(t->c) : d.neg(d.div(t->c, e->p.lc()));
            bk.add(shifted_tail(d, e->p, q, s));
        } else {
            Integer gam = gcd(t->c, e->p.lc());
            Integer a = e->p.lc() / gam, b = t->c / gam;
            if (a != 1) {
                bk.scale(a);
                for (auto& u : r.terms) u.c *= a;
            }
            bk.add(shifted_tail(d, e->p, Integer(-b), s));
        }
    }
    return r;
}

/// Monic over a field; primitive with positive leading coefficient over Z.
template <class D>
Poly<D> normalize_lc(const D& d, Poly<D> p) {
    if constexpr (D::is_field) {
        if (d.is_one(p.lc())) return p;
        auto inv = d.inv(p.lc());
        for (auto& t : p.terms) t.c = d.mul(t.c, inv);
        return p;
    } else {
        return multi::canonical(d, p);
    }
}

template <class D>
Poly<D> s_polynomial(const D& d, const Poly<D>& a, const Poly<D>& b, Geobucket<D>& bk) {
    DegreeVector l = DegreeVector::lcm(a.lm(), b.lm());
    if constexpr (D::is_field) {
        bk.add(shifted_tail(d, a, d.inv(a.lc()), l - a.lm()));
        bk.add(shifted_tail(d, b, d.neg(d.inv(b.lc())), l - b.lm()));
    } else {
        Integer gam = gcd(a.lc(), b.lc());
        bk.add(shifted_tail(d, a, Integer(b.lc() / gam), l - a.lm()));
        bk.add(shifted_tail(d, b, Integer(-(a.lc() / gam)), l - b.lm()));
    }
    return a.empty_like();
}

struct Pair {
    std::size_t i, j;
    DegreeVector lcm;
    std::uint32_t sugar;
};

/// Buchberger over a field or, fraction-free, over Z. Inputs are nonzero
/// with a common variable count and order. Returns the reduced basis.
template <class D>
std::vector<Poly<D>> buchberger(const D& d, const std::vector<Poly<D>>& gens, const Options& opt, Stats* stats) {
    const MonomialOrder o = gens.front().order;
    const Selection sel = opt.selection.value_or(o == MonomialOrder::Lex ? Selection::Sugar : Selection::Normal);
    Stats local;
    Stats& st = stats ? *stats : local;
    std::vector<Entry<D>> g;
    std::vector<Pair> pairs;

    auto sugar_of = [&](std::size_t i, std::size_t j, const DegreeVector& l) {
        auto si = g[i].sugar + l.total() - g[i].p.lm().total();
        auto sj = g[j].sugar + l.total() - g[j].p.lm().total();
        return std::max(si, sj);
    };

    auto insert = [&](Poly<D> h, std::uint32_t sugar) {
        const std::size_t k = g.size();
        g.push_back(make_entry<D>(std::move(h), sugar));
        const DegreeVector& lh = g[k].p.lm();
        if (!opt.criteria) {
            for (std::size_t i = 0; i < k; ++i) {
                auto l = DegreeVector::lcm(g[i].p.lm(), lh);
                pairs.push_back({i, k, l, sugar_of(i, k, l)});
                ++st.pairs_created;
            }
            return;
        }
        std::vector<std::size_t> cand;
        std::vector<DegreeVector> lcms;
        for (std::size_t i = 0; i < k; ++i) {
            if (!g[i].active) continue;
            cand.push_back(i);
            lcms.push_back(DegreeVector::lcm(g[i].p.lm(), lh));
        }
        std::vector<char> keep(cand.size(), 0);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (DegreeVector::coprime(g[cand[a]].p.lm(), lh)) {
                keep[a] = 1;
                continue;
            }
            bool redundant = false;
            for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
                if (b == a || (b < a && !keep[b])) continue;
                redundant = lcms[b].divides(lcms[a]);
            }
            if (redundant) ++st.chain_skipped;
            else keep[a] = 1;
        }
        std::vector<Pair> next;
        next.reserve(pairs.size() + cand.size());
        for (auto& p : pairs) {
            if (lh.divides(p.lcm) && !(DegreeVector::lcm(g[p.i].p.lm(), lh) == p.lcm) &&
                !(DegreeVector::lcm(g[p.j].p.lm(), lh) == p.lcm)) {
                ++st.chain_skipped;
                continue;
            }
            next.push_back(std::move(p));
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            if (DegreeVector::coprime(g[cand[a]].p.lm(), lh)) {
                ++st.product_skipped;
                continue;
            }
            next.push_back({cand[a], k, lcms[a], sugar_of(cand[a], k, lcms[a])});
            ++st.pairs_created;
        }
        pairs = std::move(next);
        for (std::size_t i = 0; i < k; ++i)
            if (g[i].active && lh.divides(g[i].p.lm())) g[i].active = false;
    };

    auto before = [&](const Pair& a, const Pair& b) {
        if (sel == Selection::Sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order_compare(a.lcm, b.lcm, o);
        if (c != 0) return c < 0;
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    };

    for (const auto& f : gens)
        insert(normalize_lc(d, f), static_cast<std::uint32_t>(multi::total_degree(f)));

    while (!pairs.empty()) {
        check_deadline();
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (before(pairs[k], pairs[best])) best = k;
        std::swap(pairs[best], pairs.back());
        Pair p = std::move(pairs.back());
        pairs.pop_back();
        ++st.pairs_reduced;
        Geobucket<D> bk(d, o);
        auto r = s_polynomial(d, g[p.i].p, g[p.j].p, bk);
        auto h = reduce(d, bk, g, g.size(), std::move(r));
        if (h.is_zero()) {
            ++st.zero_reductions;
            continue;
        }
        insert(normalize_lc(d, std::move(h)), p.sugar);
    }

    // minimal basis: drop entries whose leading monomial is a multiple of another's
    std::vector<char> redundant(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size() && !redundant[i]; ++j) {
            if (j == i || !g[j].p.lm().divides(g[i].p.lm())) continue;
            redundant[i] = !(g[j].p.lm() == g[i].p.lm()) || j < i;
        }
    }
    std::vector<Entry<D>> min;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!redundant[i]) min.push_back(std::move(g[i]));
    for (auto& e : min) e.active = true;
    for (std::size_t i = 0; i < min.size(); ++i) {
        Geobucket<D> bk(d, o);
        Terms<D> tail(min[i].p.terms.begin() + 1, min[i].p.terms.end());
        bk.add(std::move(tail));
        Poly<D> lead = min[i].p.empty_like();
        lead.terms.push_back(min[i].p.terms.front());
        auto r = reduce(d, bk, min, i, std::move(lead));
        min[i].p = normalize_lc(d, std::move(r));
    }
    std::vector<Poly<D>> out;
    for (auto& e : min) out.push_back(std::move(e.p));
    std::sort(out.begin(), out.end(),
              [&](const Poly<D>& a, const Poly<D>& b) { return order_compare(a.lm(), b.lm(), o) > 0; });
    return out;
}

template <class D>
std::vector<Poly<D>> prepare(const std::vector<Poly<D>>& gens, MonomialOrder o, const D& d) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    std::vector<Poly<D>> r;
    for (const auto& f : gens) {
        if (f.nvars != gens.front().nvars) throw std::invalid_argument("generators with different variable counts");
        if (f.is_zero()) continue;
        r.push_back(f.order == o ? f : multi::reorder(d, f, o));
    }
    return r;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`: monic and
/// sorted by descending leading monomial. Zero generators are ignored.
template <class D>
std::vector<multi::Poly<D>> groebner_basis(const D& d, const std::vector<multi::Poly<D>>& gens, MonomialOrder o,
                                           const Options& opt = {}, Stats* stats = nullptr) {
    if constexpr (is_rationals_v<D>) {
        auto in = detail::prepare(gens, o, d);
        if (in.empty()) return {};
        IntegerRing z;
        std::vector<multi::Poly<IntegerRing>> zin;
        for (const auto& f : in) zin.push_back(multi::canonical(z, multi::detail::clear_denominators(f)));
        auto zb = detail::buchberger(z, zin, opt, stats);
        std::vector<multi::Poly<D>> out;
        for (const auto& f : zb) out.push_back(detail::normalize_lc(d, multi::detail::to_rationals(f)));
        return out;
    } else if constexpr (D::is_field) {
        auto in = detail::prepare(gens, o, d);
        if (in.empty()) return {};
        return detail::buchberger(d, in, opt, stats);
    } else {
        (void)d;
        (void)gens;
        (void)o;
        (void)opt;
        (void)stats;
        throw UnsupportedRingError("Groebner bases need a field of coefficients");
    }
}

/// Remainder of f by `basis` with every term reduced; unique when `basis`
/// is a Groebner basis.
template <class D>
multi::Poly<D> normal_form(const D& d, const multi::Poly<D>& f, const std::vector<multi::Poly<D>>& basis) {
    static_assert(D::is_field, "normal forms need a field of coefficients");
    std::vector<detail::Entry<D>> g;
    for (const auto& b : basis) {
        multi::check_compatible(f, b);
        if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
        g.push_back(detail::make_entry<D>(b, 0));
    }
    detail::Geobucket<D> bk(d, f.order);
    bk.add(f.terms);
    return detail::reduce(d, bk, g, g.size(), f.empty_like());
}

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
/// Pairs with coprime leading monomials are skipped (they always do).
template <class D>
bool is_groebner_basis(const D& d, const std::vector<multi::Poly<D>>& basis) {
    std::vector<detail::Entry<D>> g;
    for (const auto& b : basis) {
        if (b.is_zero()) return false;
        g.push_back(detail::make_entry<D>(b, 0));
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (DegreeVector::coprime(g[i].p.lm(), g[j].p.lm())) continue;
            check_deadline();
            detail::Geobucket<D> bk(d, g[i].p.order);
            auto r = detail::s_polynomial(d, g[i].p, g[j].p, bk);
            if (!detail::reduce(d, bk, g, g.size(), std::move(r)).is_zero()) return false;
        }
    }
    return true;
}

/// True when `basis` is a reduced Groebner basis: monic, no leading
/// monomial divides a term of another element, Buchberger's criterion.
template <class D>
bool is_reduced_basis(const D& d, const std::vector<multi::Poly<D>>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero() || !d.is_one(basis[i].lc())) return false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : basis[j].terms)
                if (basis[i].lm().divides(t.m)) return false;
        }
    }
    return is_groebner_basis(d, basis);
}

}  // namespace gb
}  // namespace rings
