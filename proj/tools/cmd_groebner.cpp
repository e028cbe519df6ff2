#include "cli.hpp"

#include <rings/groebner/buchberger.hpp>
#include <rings/groebner/ideal.hpp>

namespace rings::cli {

namespace {

struct GroebnerOptions : Common {
    bool no_criteria = false;
    std::string selection;
    std::vector<std::string> ideal;
};

gb::Options options(const GroebnerOptions& o) {
    gb::Options r;
    r.criteria = !o.no_criteria;
    if (o.selection == "normal") r.selection = gb::Selection::Normal;
    if (o.selection == "sugar") r.selection = gb::Selection::Sugar;
    return r;
}

template <class R>
void require_polynomial_ring(const R& r) {
    if constexpr (!is_multi_ring<R>::value) throw UnsupportedRingError("Groebner bases need a Poly ring, got " + r.describe());
}

}  // namespace

void add_groebner(CLI::App& app, int& code) {
    auto opt = std::make_shared<GroebnerOptions>();
    auto* cmd = app.add_subcommand("groebner", "Reduced Groebner basis of the ideal spanned by the inputs");
    add_common(cmd, *opt, "Generators");
    cmd->add_flag("--no-criteria", opt->no_criteria, "Process every critical pair");
    cmd->add_option("--selection", opt->selection, "Pair selection strategy (default: sugar for LEX, normal otherwise)")
        ->check(CLI::IsMember({"normal", "sugar"}));
    cmd->callback([opt, &code] {
        code = guarded(opt->timeout, [&] {
            with_ring(
                parse_ring_spec(opt->ring),
                [&](const auto& r) {
                    require_polynomial_ring(r);
                    if constexpr (is_multi_ring<std::decay_t<decltype(r)>>::value) {
                        auto basis = gb::groebner_basis(r.coef(), parse_all(r, gather(*opt)), r.order(), options(*opt));
                        if (basis.empty()) std::cout << "0\n";
                        for (const auto& g : basis) std::cout << r.format(g) << "\n";
                    }
                },
                true);
        });
    });
}

void add_reduce(CLI::App& app, int& code) {
    auto opt = std::make_shared<GroebnerOptions>();
    auto* cmd = app.add_subcommand("reduce", "Normal form of each input modulo an ideal");
    add_common(cmd, *opt, "Polynomials to reduce");
    cmd->add_option("--ideal", opt->ideal, "Ideal generator (repeatable)")
        ->required()
        ->allow_extra_args(false);
    cmd->callback([opt, &code] {
        code = guarded(opt->timeout, [&] {
            with_ring(
                parse_ring_spec(opt->ring),
                [&](const auto& r) {
                    require_polynomial_ring(r);
                    if constexpr (is_multi_ring<std::decay_t<decltype(r)>>::value) {
                        if constexpr (!std::decay_t<decltype(r.coef())>::is_field) {
                            throw UnsupportedRingError("reduction needs a field of coefficients, got " + r.describe());
                        } else {
                            Ideal ideal(r, parse_all(r, opt->ideal));
                            for (const auto& f : parse_all(r, gather(*opt)))
                                std::cout << r.format(ideal.reduce(f)) << "\n";
                        }
                    }
                },
                true);
        });
    });
}

}  // namespace rings::cli
