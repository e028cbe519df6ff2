#include "cli.hpp"

#include <rings/frontend/format.hpp>
#include <rings/primes.hpp>

namespace rings::cli {

namespace {

std::string factor_integer_text(const Integer& n) {
    if (n == 0) throw ArithmeticError("factorization of zero");
    std::vector<std::pair<std::string, unsigned>> parts;
    for (const auto& [p, e] : factor_integer(abs(n))) parts.emplace_back(p.get_str(), e);
    return format_product(n < 0 ? "-1" : "1", parts);
}

template <class R>
std::string factor_text(const R& r, const typename R::Elem& a) {
    if constexpr (std::is_same_v<R, IntegerRing>) {
        return factor_integer_text(a);
    } else if constexpr (R::is_field) {
        if (r.is_zero(a)) throw ArithmeticError("factorization of zero");
        return r.format(a);
    } else if constexpr (is_uni_ring<R>::value) {
        auto f = r.factor(a);
        auto fmt = [&](const auto& p) { return r.format(p); };
        return format_factors(f, fmt, fmt);
    } else if constexpr (is_multi_ring<R>::value) {
        auto f = r.factor(a);
        return format_factors(f, [&](const auto& p) { return r.format(p); },
                              [&](const auto& u) { return r.coef().format(u); });
    } else {
        throw UnsupportedRingError("factorization over " + r.describe());
    }
}

}  // namespace

void add_factor(CLI::App& app, int& code) {
    auto opt = std::make_shared<Common>();
    auto* cmd = app.add_subcommand("factor", "Factor each input, one product per line");
    add_common(cmd, *opt, "Ring elements");
    cmd->callback([opt, &code] {
        code = guarded(opt->timeout, [&] {
            with_ring(parse_ring_spec(opt->ring), [&](const auto& r) {
                for (const auto& a : parse_all(r, gather(*opt))) std::cout << factor_text(r, a) << "\n";
            });
        });
    });
}

}  // namespace rings::cli
