#pragma once

// Cooperative cancellation for long exact-arithmetic kernels. A deadline is
// process-wide; inner loops call checkpoint(), which throws Interrupted once
// the deadline has passed. Clock reads are amortized over many calls.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace pfd {

class Interrupted : public std::runtime_error {
public:
    Interrupted() : std::runtime_error("computation interrupted by deadline") {}
};

namespace detail {
inline std::atomic<std::int64_t> deadline_ns{0};  // 0 = none
}

inline void set_deadline(std::chrono::steady_clock::time_point when) {
    detail::deadline_ns.store(when.time_since_epoch().count() == 0
                                  ? 1
                                  : std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        when.time_since_epoch())
                                        .count(),
                              std::memory_order_relaxed);
}

inline void clear_deadline() { detail::deadline_ns.store(0, std::memory_order_relaxed); }

inline void checkpoint() {
    thread_local unsigned counter = 0;
    if ((++counter & 0xff) != 0) return;
    auto limit = detail::deadline_ns.load(std::memory_order_relaxed);
    if (limit == 0) return;
    auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                   std::chrono::steady_clock::now().time_since_epoch())
                   .count();
    if (now > limit) throw Interrupted();
}

/// RAII guard installing a deadline `budget` from now.
class DeadlineScope {
public:
    explicit DeadlineScope(std::chrono::steady_clock::duration budget) {
        set_deadline(std::chrono::steady_clock::now() + budget);
    }
    ~DeadlineScope() { clear_deadline(); }
    DeadlineScope(const DeadlineScope&) = delete;
    DeadlineScope& operator=(const DeadlineScope&) = delete;
};

}  // namespace pfd
