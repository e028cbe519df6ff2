#include "cli.hpp"

#include <rings/algebra/apart.hpp>

namespace rings::cli {

void add_apart(CLI::App& app, int& code) {
    auto opt = std::make_shared<Common>();
    auto* cmd = app.add_subcommand("apart", "Partial fraction decomposition, one fraction per line");
    add_common(cmd, *opt, "Fractions in Q or Frac(Poly(<field>; x))");
    cmd->callback([opt, &code] {
        code = guarded(opt->timeout, [&] {
            with_ring(parse_ring_spec(opt->ring), [&](const auto& r) {
                using R = std::decay_t<decltype(r)>;
                if constexpr (is_frac<R>::value) {
                    if constexpr (R::Inner::is_euclidean) {
                        for (const auto& q : parse_all(r, gather(*opt)))
                            for (const auto& f : apart(r, q)) std::cout << r.format(f) << "\n";
                        return;
                    }
                }
                throw UnsupportedRingError("apart needs Q or fractions of univariate polynomials over a field, got " +
                                           r.describe());
            });
        });
    });
}

}  // namespace rings::cli
