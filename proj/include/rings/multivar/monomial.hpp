#pragma once

/**
 * @file monomial.hpp
 * @brief Degree vectors and the LEX, GRLEX and GREVLEX monomial orders.
 */

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rings {

enum class MonomialOrder { Lex, GrLex, GrevLex };

inline std::string order_name(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::Lex: return "LEX";
        case MonomialOrder::GrLex: return "GRLEX";
        default: return "GREVLEX";
    }
}

/// Exponent vector with its cached total degree.
class DegreeVector {
public:
    using Storage = boost::container::small_vector<std::uint32_t, 8>;

    DegreeVector() = default;
    explicit DegreeVector(std::size_t n) : e_(n, 0) {}
    explicit DegreeVector(Storage e) : e_(std::move(e)) { recount(); }
    DegreeVector(std::initializer_list<std::uint32_t> e) : e_(e.begin(), e.end()) { recount(); }

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t total() const { return total_; }
    bool is_zero() const { return total_ == 0; }
    const Storage& exponents() const { return e_; }

    void set(std::size_t i, std::uint32_t v) {
        total_ = total_ - e_[i] + v;
        e_[i] = v;
    }

    friend bool operator==(const DegreeVector& a, const DegreeVector& b) { return a.e_ == b.e_; }

    friend DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
        DegreeVector r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        r.total_ = a.total_ + b.total_;
        return r;
    }

    /// a - b; requires b | a.
    friend DegreeVector operator-(const DegreeVector& a, const DegreeVector& b) {
        DegreeVector r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        r.total_ = a.total_ - b.total_;
        return r;
    }

    bool divides(const DegreeVector& b) const {
        if (total_ > b.total_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    static DegreeVector lcm(const DegreeVector& a, const DegreeVector& b) {
        DegreeVector r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.recount();
        return r;
    }

    static DegreeVector gcd(const DegreeVector& a, const DegreeVector& b) {
        DegreeVector r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        r.recount();
        return r;
    }

    /// True when a and b share no variable.
    static bool coprime(const DegreeVector& a, const DegreeVector& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    std::size_t hash() const {
        std::size_t h = e_.size();
        for (auto v : e_) h = h * 1000003u ^ v;
        return h;
    }

private:
    void recount() {
        total_ = 0;
        for (auto v : e_) total_ += v;
    }

    Storage e_;
    std::uint32_t total_ = 0;
};

struct DegreeVectorHash {
    std::size_t operator()(const DegreeVector& d) const { return d.hash(); }
};

/// Three-way comparison of a and b under order o.
inline int order_compare(const DegreeVector& a, const DegreeVector& b, MonomialOrder o) {
    if (a.size() != b.size()) throw std::invalid_argument("degree vectors of different lengths");
    const std::size_t n = a.size();
    if (o != MonomialOrder::Lex && a.total() != b.total()) return a.total() < b.total() ? -1 : 1;
    if (o == MonomialOrder::GrevLex) {
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace rings
