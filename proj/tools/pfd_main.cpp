// pfd: partial fraction decomposition from the command line.
//
//   pfd decompose --var x [--method M] [--jobs N] [--format F] [--param t]
//                 [--verify] [--poly-part infinity|accumulate] [EXPR]
//   pfd verify --var x [--param t] ORIGINAL CLAIMED
//   pfd bench --family F --j-range A..B [--n N] [--methods a,b] [--seed S]
//             [--coeff integer|parameter] [--time-limit S] [--mem-limit B] [--out CSV]
//
// Exit codes: 0 ok, 1 verify mismatch, 2 usage/parse/method error, 3 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench_runner.hpp"
#include "heap_tracker.hpp"
#include "pfd/pfd.hpp"

namespace {

constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct DecomposeArgs {
    std::string var;
    std::string param;
    std::string method = "auto";
    unsigned jobs = 1;
    std::string format = "human";
    std::string poly_part = "infinity";
    bool verify = false;
    std::string expr;
};

struct VerifyArgs {
    std::string var;
    std::string param;
    std::string original;
    std::string claimed;
};

struct BenchArgs {
    std::string family;
    std::string j_range;
    long n = 2;
    std::string methods = "galois,linsys";
    std::uint64_t seed = 1;
    std::string coeff = "integer";
    double time_limit = 60.0;
    std::size_t mem_limit = std::size_t{2} << 30;
    unsigned jobs = 1;
    std::string mem_metric = "heap";
    std::string out;
};

/// Thrown for bad flag values that CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_stdin() {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

std::set<std::string> param_set(const std::string& p) {
    if (p.empty()) return {};
    return {p};
}

template <pfd::Field F>
int run_decompose(const DecomposeArgs& a) {
    const std::string text = a.expr.empty() ? read_stdin() : a.expr;
    auto f = pfd::parse_rational_function<F>(text, a.var, param_set(a.param));

    pfd::DecomposeOptions opts;
    opts.method = pfd::parse_method(a.method);
    opts.jobs = a.jobs;
    if (a.poly_part == "accumulate")
        opts.poly_part = pfd::PolyPartMode::accumulate;
    else if (a.poly_part != "infinity")
        throw UsageError("unknown poly-part mode '" + a.poly_part + "'");
    const auto format = pfd::parse_format(a.format);

    auto d = pfd::decompose(f, opts);
    if (a.verify) {
        if (!pfd::check_degree_bounds(d) || !pfd::same_function(pfd::recombine(d, f.denominator), f)) {
            std::cerr << "verification failed: recombined result differs from the input\n";
            return exit_internal;
        }
    }
    pfd::Symbols sym{a.var, a.param.empty() ? "t" : a.param};
    std::cout << pfd::render(d, format, sym) << '\n';
    return 0;
}

template <pfd::Field F>
int run_verify(const VerifyArgs& a) {
    auto params = param_set(a.param);
    auto lhs = pfd::parse_rational_function<F>(a.original, a.var, params);
    auto rhs = pfd::parse_rational_function<F>(a.claimed, a.var, params);
    bool same = pfd::same_function(lhs, rhs);
    std::cout << (same ? "equal" : "different") << '\n';
    return same ? 0 : exit_mismatch;
}

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        std::size_t used = 0;
        long lo = std::stol(s.substr(0, dots), &used);
        if (used != dots) throw UsageError("");
        std::string rest = s.substr(dots + 2);
        long hi = std::stol(rest, &used);
        if (used != rest.size()) throw UsageError("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("invalid j range '" + s + "' (expected A..B)");
    }
}

int run_bench(BenchArgs a) {
    namespace b = pfd::bench;
    auto family = b::parse_family(a.family);
    if (!family) throw UsageError("unknown family '" + a.family + "'");
    const b::CoeffMode mode = b::parse_coeff_mode(a.coeff);
    auto [j_lo, j_hi] = parse_range(a.j_range);
    if (j_lo < 1 || j_hi < j_lo) throw UsageError("j range must satisfy 1 <= A <= B");
    if (a.n < 1) throw UsageError("n must be positive");
    if (const char* env = std::getenv("PFD_SEED")) {
        try {
            a.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("PFD_SEED must be an unsigned integer");
        }
    }

    std::vector<pfd::Method> methods;
    std::stringstream ms(a.methods);
    for (std::string m; std::getline(ms, m, ',');)
        if (!m.empty()) methods.push_back(pfd::parse_method(m));
    if (methods.empty()) throw UsageError("no methods given");

    pfdtool::RunnerConfig cfg;
    cfg.time_limit_s = a.time_limit;
    cfg.mem_limit_bytes = a.mem_limit;
    cfg.jobs = a.jobs;
    if (a.mem_metric == "rss")
        cfg.metric = pfdtool::MemMetric::rss;
    else if (a.mem_metric != "heap")
        throw UsageError("unknown memory metric '" + a.mem_metric + "'");

    std::ofstream file;
    std::ostream* out = &std::cout;
    bool fresh = true;
    if (!a.out.empty()) {
        std::error_code ec;
        fresh = !std::filesystem::exists(a.out, ec) || std::filesystem::file_size(a.out, ec) == 0;
        file.open(a.out, std::ios::app);
        if (!file) throw UsageError("cannot open '" + a.out + "' for writing");
        out = &file;
    }
    if (fresh) {
        *out << "# rng=" << b::rng_name << " mem_metric=" << pfdtool::to_string(cfg.metric) << '\n'
             << b::csv_header << '\n';
    }
    out->flush();

    for (long j = j_lo; j <= j_hi; ++j) {
        b::BenchCase c{*family, j, a.n, a.seed, mode};
        for (auto m : methods) {
            auto r = pfdtool::run_isolated(c, m, cfg);
            *out << b::csv_row(r) << '\n';
            out->flush();
        }
    }
    return 0;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const pfd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        // includes MethodError and unknown method/format names
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    pfdtool::heap::install_gmp_hooks();

    CLI::App app{"Partial fraction decomposition over Q and Q(t)"};
    app.require_subcommand(1);

    const std::vector<std::string> method_names{"auto", "linear", "euclid", "galois", "linsys"};

    DecomposeArgs da;
    auto* dec = app.add_subcommand("decompose", "Decompose a rational function");
    dec->add_option("--var", da.var, "Decomposition variable")->required();
    dec->add_option("--method", da.method, "auto|linear|euclid|galois|linsys")->capture_default_str();
    dec->add_option("--jobs", da.jobs, "Worker threads for per-factor work")->capture_default_str();
    dec->add_option("--format", da.format, "human|json|cas")->capture_default_str();
    dec->add_option("--param", da.param, "Parameter symbol; coefficients become Q(param)");
    dec->add_flag("--verify", da.verify, "Recombine the result and check it equals the input");
    dec->add_option("--poly-part", da.poly_part, "infinity|accumulate (euclid route)")->capture_default_str();
    dec->add_option("expr", da.expr, "Expression (read from stdin when omitted)");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check two expressions denote the same rational function");
    ver->add_option("--var", va.var, "Variable")->required();
    ver->add_option("--param", va.param, "Parameter symbol");
    ver->add_option("original", va.original, "Original expression")->required();
    ver->add_option("claimed", va.claimed, "Claimed decomposition")->required();

    BenchArgs ba;
    auto* ben = app.add_subcommand("bench", "Time methods on generated input families (CSV output)");
    ben->add_option("--family", ba.family, "count-sweep|all-multiplicity|one-multiplicity|degree-sweep")->required();
    ben->add_option("--j-range", ba.j_range, "Swept parameter range A..B")->required();
    ben->add_option("--n", ba.n, "Family-specific fixed parameter")->capture_default_str();
    ben->add_option("--methods", ba.methods, "Comma-separated methods")->capture_default_str();
    ben->add_option("--seed", ba.seed, "Generator seed (PFD_SEED overrides)")->capture_default_str();
    ben->add_option("--coeff", ba.coeff, "integer|parameter")->capture_default_str();
    ben->add_option("--time-limit", ba.time_limit, "Seconds per run")->capture_default_str();
    ben->add_option("--mem-limit", ba.mem_limit, "Bytes per run (0 = none)")->capture_default_str();
    ben->add_option("--jobs", ba.jobs, "Worker threads inside each run")->capture_default_str();
    ben->add_option("--mem-metric", ba.mem_metric, "heap|rss")->capture_default_str();
    ben->add_option("--out", ba.out, "CSV file to append to (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (dec->parsed()) {
        return guarded([&] {
            if (da.jobs == 0) throw UsageError("--jobs must be at least 1");
            return da.param.empty() ? run_decompose<pfd::Rational>(da) : run_decompose<pfd::ParamRational>(da);
        });
    }
    if (ver->parsed()) {
        return guarded([&] {
            return va.param.empty() ? run_verify<pfd::Rational>(va) : run_verify<pfd::ParamRational>(va);
        });
    }
    return guarded([&] { return run_bench(ba); });
}
