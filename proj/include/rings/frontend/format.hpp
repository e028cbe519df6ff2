#pragma once

/**
 * @file format.hpp
 * @brief Text rendering of factorizations.
 */

#include <string>
#include <utility>
#include <vector>

#include "../domain.hpp"
#include "../factors.hpp"

namespace rings {

/// unit * f1^e1 * ... with parenthesized factors where needed. A unit of 1
/// is dropped and -1 becomes a leading minus.
inline std::string format_product(const std::string& unit, const std::vector<std::pair<std::string, unsigned>>& fs) {
    if (unit == "1" && fs.size() == 1 && fs[0].second == 1) return fs[0].first;
    std::string out;
    for (const auto& [f, e] : fs) {
        if (!out.empty()) out += "*";
        out += needs_parens(f) ? "(" + f + ")" : f;
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (out.empty()) return unit;
    if (unit == "1") return out;
    if (unit == "-1") return "-" + out;
    std::string bare = unit[0] == '-' ? unit.substr(1) : unit;
    return (has_sum(bare) ? "(" + unit + ")" : unit) + "*" + out;
}

/// format_product over a decomposition, rendering elements with `fmt`.
template <class P, class U, class FmtP, class FmtU>
std::string format_factors(const FactorDecomposition<P, U>& f, FmtP fmt, FmtU fmt_unit) {
    std::vector<std::pair<std::string, unsigned>> parts;
    for (std::size_t i = 0; i < f.size(); ++i) parts.emplace_back(fmt(f.factors[i]), f.exponents[i]);
    return format_product(fmt_unit(f.unit), parts);
}

}  // namespace rings
