#include "cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Polynomial algebra from the command line"};
    app.name("rings");
    app.require_subcommand(1);
    int code = rings::cli::kOk;
    rings::cli::add_gcd(app, code);
    rings::cli::add_factor(app, code);
    rings::cli::add_groebner(app, code);
    rings::cli::add_reduce(app, code);
    rings::cli::add_apart(app, code);
    rings::cli::add_solve(app, code);
    rings::cli::add_bench(app, code);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return rings::cli::kUsage;
    }
    return code;
}
