#pragma once

/**
 * @file deadline.hpp
 * @brief Cooperative per-thread timeout.
 *
 * Long-running loops call check_deadline(); a ScopedDeadline installs the
 * limit for the current thread.
 */

#include <chrono>
#include <optional>

#include "errors.hpp"

namespace rings {

namespace detail {
inline std::optional<std::chrono::steady_clock::time_point>& current_deadline() {
    thread_local std::optional<std::chrono::steady_clock::time_point> d;
    return d;
}
}  // namespace detail

inline void check_deadline() {
    auto& d = detail::current_deadline();
    if (d && std::chrono::steady_clock::now() > *d) throw TimeoutError();
}

class ScopedDeadline {
public:
    explicit ScopedDeadline(std::chrono::duration<double> limit)
        : saved_(detail::current_deadline()) {
        auto t = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(limit);
        if (!saved_ || t < *saved_) detail::current_deadline() = t;
    }
    ~ScopedDeadline() { detail::current_deadline() = saved_; }
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> saved_;
};

}  // namespace rings
