#include "cli.hpp"

namespace rings::cli {

void add_gcd(CLI::App& app, int& code) {
    auto opt = std::make_shared<Common>();
    auto* cmd = app.add_subcommand("gcd", "Greatest common divisor of the inputs");
    add_common(cmd, *opt, "Ring elements");
    cmd->callback([opt, &code] {
        code = guarded(opt->timeout, [&] {
            with_ring(parse_ring_spec(opt->ring), [&](const auto& r) {
                auto xs = parse_all(r, gather(*opt));
                auto g = xs[0];
                for (std::size_t i = 1; i < xs.size(); ++i) g = r.gcd(g, xs[i]);
                std::cout << r.format(g) << "\n";
            });
        });
    });
}

}  // namespace rings::cli
