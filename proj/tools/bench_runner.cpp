#include "bench_runner.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/time.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <new>

#include "heap_tracker.hpp"
#include "pfd/pfd.hpp"

namespace pfdtool {

using pfd::bench::BenchCase;
using pfd::bench::BenchResult;
using pfd::bench::Status;

std::string_view to_string(MemMetric m) { return m == MemMetric::heap ? "heap-peak-bytes" : "peak-rss-bytes"; }

namespace {

struct Wire {
    std::int32_t status;
    double wall_time_s;
    std::uint64_t peak_bytes;
};

int result_fd = -1;

void send(const Wire& w) {
    const char* p = reinterpret_cast<const char*>(&w);
    std::size_t left = sizeof w;
    while (left > 0) {
        ssize_t n = ::write(result_fd, p, left);
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) break;
        p += n;
        left -= static_cast<std::size_t>(n);
    }
}

[[noreturn]] void memory_exceeded() {
    send({static_cast<std::int32_t>(Status::memory_limit), 0.0, 0});
    ::_exit(0);
}

template <pfd::Field F>
Wire child_run(const BenchCase& c, pfd::Method method, const RunnerConfig& cfg) {
    const std::string text = pfd::bench::generate_expression(c, "x", "t");
    std::set<std::string> params;
    if constexpr (pfd::field_traits<F>::has_parameter) params.insert("t");
    auto f = pfd::parse_rational_function<F>(text, "x", params);

    pfd::DecomposeOptions opts;
    opts.method = method;
    opts.jobs = cfg.jobs;

    const std::size_t baseline = heap::reset_peak();
    heap::set_limit(cfg.mem_limit_bytes == 0 ? 0 : baseline + cfg.mem_limit_bytes, memory_exceeded);
    pfd::DeadlineScope deadline(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(cfg.time_limit_s)));

    auto start = std::chrono::steady_clock::now();
    auto d = pfd::decompose(f, opts);
    auto stop = std::chrono::steady_clock::now();

    heap::set_limit(0, nullptr);
    Wire w{static_cast<std::int32_t>(Status::ok), std::chrono::duration<double>(stop - start).count(),
           heap::peak_bytes() - baseline};
    (void)d;
    return w;
}

[[noreturn]] void child_main(const BenchCase& c, pfd::Method method, const RunnerConfig& cfg) {
    // Hard backstop above the instrumented ceiling (threads and the
    // allocator reserve address space the heap counter does not see).
    if (cfg.mem_limit_bytes > 0) {
        rlimit rl{};
        rl.rlim_cur = rl.rlim_max = static_cast<rlim_t>(cfg.mem_limit_bytes) * 2 + (rlim_t{512} << 20);
        ::setrlimit(RLIMIT_AS, &rl);
    }
    Wire w{static_cast<std::int32_t>(Status::error), 0.0, 0};
    try {
        w = c.mode == pfd::bench::CoeffMode::integer ? child_run<pfd::Rational>(c, method, cfg)
                                                     : child_run<pfd::ParamRational>(c, method, cfg);
    } catch (const pfd::Interrupted&) {
        w.status = static_cast<std::int32_t>(Status::timeout);
    } catch (const std::bad_alloc&) {
        w.status = static_cast<std::int32_t>(Status::memory_limit);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bench: %s\n", e.what());
    }
    send(w);
    ::_exit(0);
}

}  // namespace

BenchResult run_isolated(const BenchCase& c, pfd::Method method, const RunnerConfig& cfg) {
    BenchResult result{c, std::string(pfd::to_string(method)), Status::error, 0.0, 0};

    int fds[2];
    if (::pipe(fds) != 0) return result;
    std::fflush(nullptr);
    pid_t pid = ::fork();
    if (pid < 0) {
        ::close(fds[0]);
        ::close(fds[1]);
        return result;
    }
    if (pid == 0) {
        ::close(fds[0]);
        result_fd = fds[1];
        child_main(c, method, cfg);
    }
    ::close(fds[1]);

    // The child stops itself at the deadline; the grace period covers
    // kernels between checkpoints before the supervisor kills it.
    const auto grace = std::chrono::duration<double>(cfg.time_limit_s + 2.0);
    const auto hard_stop = std::chrono::steady_clock::now() + grace;
    Wire w{};
    std::size_t got = 0;
    bool killed = false;
    while (got < sizeof w) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(hard_stop - std::chrono::steady_clock::now());
        if (left.count() <= 0) {
            ::kill(pid, SIGKILL);
            killed = true;
            break;
        }
        pollfd pfd_{fds[0], POLLIN, 0};
        int r = ::poll(&pfd_, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
        if (r < 0 && errno == EINTR) continue;
        if (r <= 0) continue;
        ssize_t n = ::read(fds[0], reinterpret_cast<char*>(&w) + got, sizeof w - got);
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) break;
        got += static_cast<std::size_t>(n);
    }
    ::close(fds[0]);

    int wstatus = 0;
    rusage usage{};
    while (::wait4(pid, &wstatus, 0, &usage) < 0 && errno == EINTR) {
    }

    if (killed) {
        result.status = Status::timeout;
    } else if (got == sizeof w) {
        result.status = static_cast<Status>(w.status);
        result.wall_time_s = w.wall_time_s;
        result.peak_mem_bytes = cfg.metric == MemMetric::heap ? w.peak_bytes
                                                              : static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;
    } else {
        // Died without reporting: most often the address-space backstop.
        result.status = WIFSIGNALED(wstatus) ? Status::memory_limit : Status::error;
    }
    return result;
}

}  // namespace pfdtool
