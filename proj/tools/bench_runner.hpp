#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pfd/bench.hpp"
#include "pfd/decompose.hpp"

namespace pfdtool {

enum class MemMetric { heap, rss };

std::string_view to_string(MemMetric m);

struct RunnerConfig {
    double time_limit_s = 60.0;
    std::size_t mem_limit_bytes = std::size_t{2} << 30;
    unsigned jobs = 1;
    MemMetric metric = MemMetric::heap;
};

/**
 * Runs one (case, method) in a forked child under the configured limits and
 * reports how it ended. The parent never runs decomposition code itself.
 */
pfd::bench::BenchResult run_isolated(const pfd::bench::BenchCase& c, pfd::Method method, const RunnerConfig& cfg);

}  // namespace pfdtool
