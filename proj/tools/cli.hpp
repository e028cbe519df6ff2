#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <rings/deadline.hpp>
#include <rings/errors.hpp>
#include <rings/frac.hpp>
#include <rings/frontend/expr.hpp>
#include <rings/frontend/ring_spec.hpp>

namespace rings::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kUnsupported = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Options shared by the algebra commands.
struct Common {
    std::string ring;
    std::vector<std::string> inputs;
    std::string in_file;
    double timeout = 0;
};

inline void add_common(CLI::App* cmd, Common& c, const std::string& inputs_help) {
    cmd->add_option("--ring", c.ring, "Ring spec, e.g. \"Poly(Zp[17]; x,y; GREVLEX)\"")->required();
    cmd->add_option("inputs", c.inputs, inputs_help);
    cmd->add_option("--in", c.in_file, "Read inputs from a file, one per line, '#' starts a comment");
    cmd->add_option("--timeout", c.timeout, "Abort after this many seconds (0 = no limit)")->check(CLI::NonNegativeNumber);
}

/// Non-blank lines of `path` with '#' comments removed.
inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

/// Positional inputs followed by the lines of --in.
inline std::vector<std::string> gather(const Common& c) {
    std::vector<std::string> all = c.inputs;
    if (!c.in_file.empty())
        for (auto& l : read_lines(c.in_file)) all.push_back(std::move(l));
    if (all.empty()) throw UsageError("no inputs given");
    return all;
}

template <class R>
typename R::Elem parse_input(const R& r, const std::string& text) {
    try {
        return parse(r, text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(e.what()) + " in '" + text + "'");
    }
}

template <class R>
std::vector<typename R::Elem> parse_all(const R& r, const std::vector<std::string>& texts) {
    std::vector<typename R::Elem> out;
    for (const auto& t : texts) out.push_back(parse_input(r, t));
    return out;
}

template <class T>
struct is_frac : std::false_type {};
template <class R>
struct is_frac<Frac<R>> : std::true_type {};

template <class T>
struct is_multi_ring : std::false_type {};
template <class D>
struct is_multi_ring<MultiPolyRing<D>> : std::true_type {};

template <class T>
struct is_uni_ring : std::false_type {};
template <class D>
struct is_uni_ring<UniPolyRing<D>> : std::true_type {};

/// Runs `body` under an optional deadline and maps exceptions to exit
/// codes, printing a one-line diagnostic.
inline int guarded(double timeout, const std::function<void()>& body) {
    try {
        std::optional<ScopedDeadline> deadline;
        if (timeout > 0) deadline.emplace(std::chrono::duration<double>(timeout));
        body();
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedRingError& e) {
        std::cerr << "error: unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const TimeoutError&) {
        std::cerr << "error: timed out after " << timeout << " s\n";
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}

/// Registers each subcommand; the callback stores its exit code in `code`.
void add_gcd(CLI::App& app, int& code);
void add_factor(CLI::App& app, int& code);
void add_groebner(CLI::App& app, int& code);
void add_reduce(CLI::App& app, int& code);
void add_apart(CLI::App& app, int& code);
void add_solve(CLI::App& app, int& code);
void add_bench(CLI::App& app, int& code);

}  // namespace rings::cli
