#include "cli.hpp"

#include <cstdio>
#include <fstream>

#include <rings/frontend/bench.hpp>

namespace rings::cli {

namespace {

struct BenchOptions {
    std::string family = "gcd-sparse";
    std::string ring = "Z";
    std::size_t nvars = 3;
    std::size_t size = 40;
    std::string dist = "uniform(0,30)";
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    double timeout = 60;
    unsigned exponent = 0;
    std::string problem = "katsura";
    std::string out;
};

}  // namespace

void add_bench(CLI::App& app, int& code) {
    auto opt = std::make_shared<BenchOptions>();
    auto* cmd = app.add_subcommand("bench", "Run a benchmark family and print CSV rows");
    cmd->add_option("--family", opt->family, "gcd-sparse | gcd-dense | factor-sparse | factor-dense | groebner | uni-factor")
        ->capture_default_str();
    cmd->add_option("--ring", opt->ring, "Z, Q (groebner only) or Zp[p]")->capture_default_str();
    cmd->add_option("--nvars", opt->nvars, "Variables of the sparse families")->capture_default_str();
    cmd->add_option("--size", opt->size, "Terms per polynomial; n for groebner; degree for uni-factor")
        ->capture_default_str();
    cmd->add_option("--dist", opt->dist, "uniform(Dmin,Dmax) or sharp(Dsum)")->capture_default_str();
    cmd->add_option("--trials", opt->trials)->capture_default_str();
    cmd->add_option("--seed", opt->seed)->capture_default_str();
    cmd->add_option("--timeout", opt->timeout, "Seconds per trial")->capture_default_str();
    cmd->add_option("--exponent", opt->exponent, "Outer exponent of the dense families (default 3 for gcd, 15 for factor)");
    cmd->add_option("--problem", opt->problem, "katsura or cyclic")->capture_default_str();
    cmd->add_option("--out", opt->out, "Write the CSV here instead of stdout");
    cmd->callback([opt, &code] {
        bool unverified = false;
        code = guarded(0, [&] {
            bench::BenchSpec spec;
            spec.family = bench::parse_family(opt->family);
            spec.ring = opt->ring;
            spec.nvars = opt->nvars;
            spec.size = opt->size;
            spec.dist = bench::Distribution::parse(opt->dist);
            spec.trials = opt->trials;
            spec.seed = opt->seed;
            spec.timeout = opt->timeout;
            if (opt->exponent) spec.exponent = opt->exponent;
            spec.problem = opt->problem;

            std::ofstream file;
            if (!opt->out.empty()) {
                file.open(opt->out);
                if (!file) throw UsageError("cannot write '" + opt->out + "'");
            }
            std::ostream& out = opt->out.empty() ? std::cout : file;
            out << bench::csv_header() << "\n";
            auto rows = bench::run(spec, [&](const bench::Row& r) {
                out << bench::csv_row(r) << std::endl;
                if (!r.verified && r.result_kind != "timeout") unverified = true;
            });
            for (const auto& s : bench::summarize(rows)) {
                char line[256];
                std::snprintf(line, sizeof line, "%s %s: n=%zu median=%.3f ms min=%.3f ms max=%.3f ms", s.family.c_str(),
                              s.result_kind.c_str(), s.count, s.median, s.min, s.max);
                std::cerr << line << "\n";
            }
        });
        if (code == kOk && unverified) {
            std::cerr << "error: some trials failed verification\n";
            code = kFailure;
        }
    });
}

}  // namespace rings::cli
