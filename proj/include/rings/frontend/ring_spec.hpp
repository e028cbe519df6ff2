#pragma once

/**
 * @file ring_spec.hpp
 * @brief Ring descriptions as text and their dispatch to concrete rings.
 *
 *     Z | Q | Zp[p] | GF[p,k,name] | Frac(<ring>) | Poly(<ring>; v1,...,vk; LEX|GRLEX|GREVLEX)
 *
 * Frac of a field is the field itself, so Frac(Z) is Q. A Poly with one
 * variable is univariate; the order defaults to GREVLEX.
 */

#include <cctype>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "../bigint.hpp"
#include "../errors.hpp"
#include "../frac.hpp"
#include "../galois.hpp"
#include "../integers.hpp"
#include "../multivar/ring.hpp"
#include "../primes.hpp"
#include "../univar/ring.hpp"
#include "../zp.hpp"

namespace rings {

struct RingSpec {
    enum class Kind { Z, Q, Zp, GF, Frac, Poly };
    Kind kind = Kind::Z;
    Integer p;
    int k = 0;
    std::string name;
    std::shared_ptr<const RingSpec> inner;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::GrevLex;

    bool is_field() const {
        return kind == Kind::Q || kind == Kind::Zp || kind == Kind::GF || kind == Kind::Frac;
    }

    std::string text() const {
        switch (kind) {
            case Kind::Z: return "Z";
            case Kind::Q: return "Q";
            case Kind::Zp: return "Zp[" + p.get_str() + "]";
            case Kind::GF: return "GF[" + p.get_str() + "," + std::to_string(k) + "," + name + "]";
            case Kind::Frac: return "Frac(" + inner->text() + ")";
            case Kind::Poly: {
                std::string v;
                for (const auto& s : vars) v += (v.empty() ? "" : ",") + s;
                return "Poly(" + inner->text() + "; " + v + "; " + order_name(order) + ")";
            }
        }
        return "";
    }
};

namespace detail {

class RingSpecParser {
public:
    explicit RingSpecParser(std::string s) : s_(std::move(s)) {}

    RingSpec parse() {
        RingSpec r = ring();
        skip();
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what + " in ring spec", i_ + 1); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    void expect(char c) {
        skip();
        if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip();
        std::size_t j = i_;
        if (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        if (j == i_) fail("expected a name");
        std::string r = s_.substr(i_, j - i_);
        i_ = j;
        return r;
    }

    Integer number() {
        skip();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected a number");
        Integer r(s_.substr(i_, j - i_));
        i_ = j;
        return r;
    }

    RingSpec ring() {
        std::size_t start = i_;
        std::string head = ident();
        RingSpec r;
        if (head == "Z") {
            r.kind = RingSpec::Kind::Z;
        } else if (head == "Q") {
            r.kind = RingSpec::Kind::Q;
        } else if (head == "Zp") {
            expect('[');
            r.kind = RingSpec::Kind::Zp;
            r.p = number();
            if (!is_prime(r.p)) fail("modulus " + r.p.get_str() + " is not prime");
            expect(']');
        } else if (head == "GF") {
            expect('[');
            r.kind = RingSpec::Kind::GF;
            r.p = number();
            if (r.p >= Integer("18446744073709551616") || !is_prime(r.p)) fail("GF characteristic must be a 64-bit prime");
            expect(',');
            Integer k = number();
            if (k < 1 || k > 64) fail("GF degree must be between 1 and 64");
            r.k = static_cast<int>(k.get_si());
            r.name = accept(',') ? ident() : "t";
            expect(']');
        } else if (head == "Frac") {
            expect('(');
            RingSpec in = ring();
            expect(')');
            if (in.kind == RingSpec::Kind::Z) {
                r.kind = RingSpec::Kind::Q;
            } else if (in.is_field()) {
                r = std::move(in);
            } else {
                r.kind = RingSpec::Kind::Frac;
                r.inner = std::make_shared<const RingSpec>(std::move(in));
            }
        } else if (head == "Poly") {
            expect('(');
            r.kind = RingSpec::Kind::Poly;
            r.inner = std::make_shared<const RingSpec>(ring());
            expect(';');
            std::set<std::string> seen;
            do {
                auto v = ident();
                if (!seen.insert(v).second) fail("duplicate variable '" + v + "'");
                if (r.inner->kind == RingSpec::Kind::GF && v == r.inner->name)
                    fail("variable '" + v + "' clashes with the field generator");
                r.vars.push_back(v);
            } while (accept(','));
            if (accept(';')) {
                auto o = ident();
                if (o == "LEX") r.order = MonomialOrder::Lex;
                else if (o == "GRLEX") r.order = MonomialOrder::GrLex;
                else if (o == "GREVLEX") r.order = MonomialOrder::GrevLex;
                else fail("unknown monomial order '" + o + "'");
            }
            expect(')');
        } else {
            i_ = start;
            fail("unknown ring '" + head + "'");
        }
        return r;
    }

    std::string s_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline RingSpec parse_ring_spec(const std::string& text) { return detail::RingSpecParser(text).parse(); }

namespace detail {

template <class F>
decltype(auto) with_coefficients(const RingSpec& s, F&& f) {
    switch (s.kind) {
        case RingSpec::Kind::Z: return f(IntegerRing{});
        case RingSpec::Kind::Q: return f(Rationals{});
        case RingSpec::Kind::Zp:
            if (s.p.fits_ulong_p()) return f(Zp64(s.p.get_ui(), false));
            return f(ZpBig(s.p, false));
        case RingSpec::Kind::GF: return f(GaloisField(s.p.get_ui(), s.k, s.name));
        default: throw UnsupportedRingError("nested polynomial or fraction rings are not supported: " + s.text());
    }
}

}  // namespace detail

/// Calls f with the ring described by `s`. With `multivariate`, a Poly in
/// one variable becomes MultiPolyRing instead of UniPolyRing.
template <class F>
decltype(auto) with_ring(const RingSpec& s, F&& f, bool multivariate = false) {
    switch (s.kind) {
        case RingSpec::Kind::Poly:
            return detail::with_coefficients(*s.inner, [&](auto c) -> decltype(auto) {
                using C = decltype(c);
                if (s.vars.size() == 1 && !multivariate) return f(UniPolyRing<C>(c, s.vars[0]));
                return f(MultiPolyRing<C>(c, s.vars, s.order));
            });
        case RingSpec::Kind::Frac: {
            const RingSpec& poly = *s.inner;
            if (poly.kind != RingSpec::Kind::Poly)
                throw UnsupportedRingError("unsupported fraction ring: " + s.text());
            return detail::with_coefficients(*poly.inner, [&](auto c) -> decltype(auto) {
                using C = decltype(c);
                if (poly.vars.size() == 1) return f(Frac<UniPolyRing<C>>(UniPolyRing<C>(c, poly.vars[0])));
                return f(Frac<MultiPolyRing<C>>(MultiPolyRing<C>(c, poly.vars, poly.order)));
            });
        }
        default: return detail::with_coefficients(s, f);
    }
}

}  // namespace rings
