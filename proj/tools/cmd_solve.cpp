#include "cli.hpp"

#include <sstream>

#include <rings/algebra/linear.hpp>

namespace rings::cli {

namespace {

struct SolveOptions {
    std::string ring;
    std::string file;
    double timeout = 0;
};

/// First line N, then N rows of N+1 whitespace-separated entries.
std::vector<std::vector<std::string>> read_matrix(const std::string& path) {
    auto lines = read_lines(path);
    if (lines.empty()) throw UsageError("empty matrix file");
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        long v = std::stol(lines[0], &used);
        if (used != lines[0].size() || v <= 0) throw std::invalid_argument("");
        n = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw UsageError("first line must be a positive row count, got '" + lines[0] + "'");
    }
    if (lines.size() != n + 1)
        throw UsageError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 1; i <= n; ++i) {
        std::istringstream in(lines[i]);
        std::vector<std::string> row;
        for (std::string t; in >> t;) row.push_back(t);
        if (row.size() != n + 1)
            throw UsageError("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n + 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

void add_solve(CLI::App& app, int& code) {
    auto opt = std::make_shared<SolveOptions>();
    auto* cmd = app.add_subcommand("solve", "Solve a square linear system given as an augmented matrix file");
    cmd->add_option("--ring", opt->ring, "Coefficient field spec")->required();
    auto* pos = cmd->add_option("file", opt->file, "Matrix file");
    cmd->add_option("--in", opt->file, "Matrix file")->excludes(pos);
    cmd->add_option("--timeout", opt->timeout, "Abort after this many seconds (0 = no limit)")->check(CLI::NonNegativeNumber);
    cmd->callback([opt, &code] {
        code = guarded(opt->timeout, [&] {
            if (opt->file.empty()) throw UsageError("no matrix file given");
            with_ring(parse_ring_spec(opt->ring), [&](const auto& r) {
                using R = std::decay_t<decltype(r)>;
                if constexpr (!R::is_field) {
                    throw UnsupportedRingError("solve needs a field, got " + r.describe());
                } else {
                    auto rows = read_matrix(opt->file);
                    std::vector<std::vector<typename R::Elem>> a;
                    std::vector<typename R::Elem> b;
                    for (auto& row : rows) {
                        b.push_back(parse_input(r, row.back()));
                        row.pop_back();
                        a.push_back(parse_all(r, row));
                    }
                    auto s = gaussian_solve(r, std::move(a), std::move(b));
                    if (s.status == SolveStatus::Inconsistent) {
                        std::cout << "inconsistent\n";
                        return;
                    }
                    if (s.status == SolveStatus::Underdetermined) std::cout << "underdetermined rank=" << s.rank << "\n";
                    for (const auto& x : s.x) std::cout << r.format(x) << "\n";
                }
            });
        });
    });
}

}  // namespace rings::cli
