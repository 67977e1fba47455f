#pragma once

/**
 * @file bench.hpp
 * @brief Benchmark input families and the CSV row format.
 *
 * Families (b_{i,k} random coefficients, x the decomposition variable):
 *   count-sweep       1 / prod_{i=1}^{j} sum_{k=0}^{n} b_{i,k} x^k
 *   all-multiplicity  1 / prod_{i=1}^{4} (sum_{k=0}^{n} b_{i,k} x^k)^j
 *   one-multiplicity  1 / ((sum_{k=0}^{2} b_{0,k} x^k)^j prod_{i=1}^{3} (sum_{k=0}^{2} b_{i,k} x^k)^n)
 *   degree-sweep      1 / prod_{i=1}^{4} (sum_{k=0}^{j} b_{i,k} x^k)^n
 *
 * Integer mode draws b uniformly from [1, 10^5]; parameter mode uses
 * c*t + d with c, d drawn the same way. The generator is SplitMix64.
 */

#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfd::bench {

inline constexpr std::string_view rng_name = "splitmix64";
inline constexpr std::uint64_t coeff_max = 100000;

/// SplitMix64 (Steele, Lea, Flood 2014); fixed constants, platform independent.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] by rejection, no modulo bias.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t v;
        do v = next();
        while (v >= limit);
        return lo + v % span;
    }

private:
    std::uint64_t state_;
};

enum class Family { count_sweep, all_multiplicity, one_multiplicity, degree_sweep };
enum class CoeffMode { integer, parameter };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::count_sweep: return "count-sweep";
        case Family::all_multiplicity: return "all-multiplicity";
        case Family::one_multiplicity: return "one-multiplicity";
        case Family::degree_sweep: return "degree-sweep";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (auto f : {Family::count_sweep, Family::all_multiplicity, Family::one_multiplicity, Family::degree_sweep})
        if (s == to_string(f)) return f;
    return std::nullopt;
}

inline std::string_view to_string(CoeffMode m) { return m == CoeffMode::integer ? "integer" : "parameter"; }

inline CoeffMode parse_coeff_mode(std::string_view s) {
    if (s == "integer") return CoeffMode::integer;
    if (s == "parameter") return CoeffMode::parameter;
    throw std::invalid_argument("unknown coefficient mode '" + std::string(s) + "'");
}

struct BenchCase {
    Family family = Family::count_sweep;
    long j = 1;
    long n = 2;
    std::uint64_t seed = 1;
    CoeffMode mode = CoeffMode::integer;
};

/// (degree, multiplicity) of every denominator factor of a case.
inline std::vector<std::pair<long, long>> factor_shapes(const BenchCase& c) {
    std::vector<std::pair<long, long>> out;
    switch (c.family) {
        case Family::count_sweep:
            for (long i = 0; i < c.j; ++i) out.emplace_back(c.n, 1);
            break;
        case Family::all_multiplicity:
            for (int i = 0; i < 4; ++i) out.emplace_back(c.n, c.j);
            break;
        case Family::one_multiplicity:
            out.emplace_back(2, c.j);
            for (int i = 0; i < 3; ++i) out.emplace_back(2, c.n);
            break;
        case Family::degree_sweep:
            for (int i = 0; i < 4; ++i) out.emplace_back(c.j, c.n);
            break;
    }
    return out;
}

/**
 * The case as expression text in the decomposition variable `var` (and
 * parameter `param` in parameter mode). Identical for identical cases.
 */
inline std::string generate_expression(const BenchCase& c, std::string_view var = "x", std::string_view param = "t") {
    if (c.j < 1 || c.n < 1) throw std::invalid_argument("benchmark j and n must be positive");
    // Distinct stream per (family, j, n) under one seed.
    SplitMix64 mix(c.seed);
    std::uint64_t stream = mix.next() ^ (static_cast<std::uint64_t>(c.family) * 0x100000001b3ULL) ^
                           (static_cast<std::uint64_t>(c.j) << 20) ^ static_cast<std::uint64_t>(c.n);
    SplitMix64 rng(stream);

    auto coeff = [&]() -> std::string {
        if (c.mode == CoeffMode::integer) return std::to_string(rng.uniform(1, coeff_max));
        auto a = rng.uniform(1, coeff_max);
        auto b = rng.uniform(1, coeff_max);
        return "(" + std::to_string(a) + "*" + std::string(param) + " + " + std::to_string(b) + ")";
    };

    std::string den;
    for (auto [deg, mult] : factor_shapes(c)) {
        std::string f;
        for (long k = 0; k <= deg; ++k) {
            if (k > 0) f += " + ";
            f += coeff();
            if (k == 1) f += "*" + std::string(var);
            if (k > 1) f += "*" + std::string(var) + "^" + std::to_string(k);
        }
        if (!den.empty()) den += "*";
        den += "(" + f + ")";
        if (mult > 1) den += "^" + std::to_string(mult);
    }
    return "1/(" + den + ")";
}

enum class Status { ok, timeout, memory_limit, error };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::timeout: return "timeout";
        case Status::memory_limit: return "memory-limit";
        case Status::error: return "error";
    }
    return "?";
}

struct BenchResult {
    BenchCase bench_case;
    std::string method;
    Status status = Status::ok;
    double wall_time_s = 0.0;
    std::uint64_t peak_mem_bytes = 0;
};

inline constexpr std::string_view csv_header = "family,j,n,seed,coeff_mode,method,status,wall_time_s,peak_mem_bytes";

/// One CSV row; runs that did not finish carry no timing or memory value.
inline std::string csv_row(const BenchResult& r) {
    const auto& c = r.bench_case;
    std::string row = std::string(to_string(c.family)) + "," + std::to_string(c.j) + "," + std::to_string(c.n) + "," +
                      std::to_string(c.seed) + "," + std::string(to_string(c.mode)) + "," + r.method + "," +
                      std::string(to_string(r.status)) + ",";
    if (r.status == Status::ok) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", r.wall_time_s);
        row += std::string(buf) + "," + std::to_string(r.peak_mem_bytes);
    } else {
        row += ",";
    }
    return row;
}

}  // namespace pfd::bench
