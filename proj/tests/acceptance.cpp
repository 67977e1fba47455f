// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace pfd;
using namespace pfd::testing;

namespace {

using Clock = std::chrono::steady_clock;
using cd = std::complex<double>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every decomposition produced below is funnelled through here so the
// degree-bound criterion covers all of them.
long bound_checks = 0;
long bound_failures = 0;

template <Field F>
Decomposition<F> tally(Decomposition<F> d) {
    ++bound_checks;
    if (!check_degree_bounds(d)) ++bound_failures;
    return d;
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
}

const QPoly P1 = P({1, 1, 1});   // x^2 + x + 1
const QPoly P2 = P({1, -1, 1});  // x^2 - x + 1

RationalFunction<Q> worked_example() {
    return make_rational_function(QPoly::monomial(R(1), 10), {{P1, 2}, {P2, 2}});
}

Decomposition<Q> worked_expected() {
    Decomposition<Q> d;
    d.polynomial_part = P({-2, 0, 1});
    d.groups.push_back({P2, {{QPoly({R(5, 4), R(-3, 4)}), 1}, {QPoly({R(-1, 4), R(1, 4)}), 2}}});
    d.groups.push_back({P1, {{QPoly({R(5, 4), R(3, 4)}), 1}, {QPoly({R(-1, 4), R(-1, 4)}), 2}}});
    return d;
}

Decomposition<Q> run(const RationalFunction<Q>& f, Method m, unsigned jobs = 1) {
    DecomposeOptions o;
    o.method = m;
    o.jobs = jobs;
    return decompose(f, o);
}

Outcome golden_example() {
    const auto f = worked_example();
    const auto expected = worked_expected();
    std::ostringstream detail;
    bool ok = true;
    for (Method m : {Method::euclid, Method::galois, Method::linsys}) {
        auto t0 = Clock::now();
        auto d = run(f, m);
        double s = seconds_since(t0);
        tally(d);
        bool exact = d == expected;
        ok = ok && exact && s < 1.0;
        detail << to_string(m) << "=" << (exact ? "exact" : "MISMATCH") << "/" << s << "s ";
    }
    return {ok, detail.str()};
}

Outcome galois_intermediates() {
    auto local = local_expansion(worked_example(), 1);  // the x^2 + x + 1 group
    using Alg = AlgebraicElement<Q>;
    Alg alpha = Alg::alpha(local.ring), one = Alg::one(local.ring);
    const bool ring_ok = local.ring->modulus() == P1;
    const bool s_inv = local.s_inverse == (R(2) * alpha + one) * R(-1, 3);
    const bool q0 = local.q.order() >= 2 && local.q[0] == (alpha + one) * R(-1, 4);
    const bool q1 = local.q.order() >= 2 && local.q[1] == (R(7) * alpha - R(2) * one) * R(1, 4);
    const bool poles = local.pole.size() == 2 && local.pole[0] == (R(4) * one - R(19) * alpha) * R(1, 36) &&
                       local.pole[1] == (alpha + one) * R(1, 12);
    std::ostringstream detail;
    detail << "ring=" << ring_ok << " S^-1=" << s_inv << " Q=" << q0 << " Q'=" << q1 << " poles=" << poles;
    return {ring_ok && s_inv && q0 && q1 && poles, detail.str()};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(2024);
    auto t0 = Clock::now();
    int agree = 0, round_trip = 0;
    for (int i = 0; i < 200; ++i) {
        auto f = random_function(rng);
        auto e = tally(decompose_euclid(f));
        auto g = tally(decompose_galois(f));
        auto l = tally(decompose_linsys(f));
        if (e == g && e == l) ++agree;
        if (same_function(recombine(g, f.denominator), f)) ++round_trip;
    }
    double s = seconds_since(t0);
    std::ostringstream detail;
    detail << agree << "/200 agree, " << round_trip << "/200 round-trip, " << s << "s";
    return {agree == 200 && round_trip == 200 && s < 300.0, detail.str()};
}

std::vector<cd> numeric_roots(const QPoly& p) {
    const auto n = static_cast<Eigen::Index>(p.degree());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)].mpq().get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(c);
    std::vector<cd> out;
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

double eval_d(const QPoly& p, double x) {
    double acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->mpq().get_d();
    return acc;
}

Outcome trace_oracle() {
    std::mt19937_64 rng(43);
    int polys = 0;
    long samples = 0, bad = 0;
    double worst = 0;
    while (polys < 50) {
        QPoly mod = monic(random_int_poly(rng, random_int(rng, 1, 4), -5, 5));
        if (!is_squarefree(mod)) continue;
        ++polys;
        auto roots = numeric_roots(mod);
        auto ring = make_ring(mod);
        TraceTable<Q> table(ring);
        const auto n = static_cast<std::size_t>(mod.degree());
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Q> coords(n, R(0));
            coords[k] = R(1);
            AlgebraicElement<Q> b(ring, coords);
            for (unsigned j = 1; j <= 3; ++j) {
                auto part = pole_sum(b, j, table);
                for (int s = 0; s < 5; ++s) {
                    double x = static_cast<double>(random_int(rng, -40, 40)) / 7.0 + 0.05;
                    cd expected = 0;
                    for (cd r : roots)
                        expected += std::pow(r, static_cast<int>(k)) / std::pow(cd(x) - r, static_cast<int>(j));
                    double base = eval_d(part.base, x), got = 0;
                    for (const auto& t : part.terms) got += eval_d(t.numerator, x) / std::pow(base, t.power);
                    double err = std::abs(cd(got) - expected) / std::max(1.0, std::abs(expected));
                    worst = std::max(worst, err);
                    ++samples;
                    if (err > 1e-6) ++bad;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << polys << " polynomials, " << samples << " samples, worst rel err " << worst;
    return {bad == 0, detail.str()};
}

const std::vector<std::string> golden_suite = {
    "x^10/((x^2+x+1)^2*(x^2-x+1)^2)",
    "1/((x-1)*(x-2))",
    "(x^3+2)/((x-1)^3*(x+2)^2)",
    "(x^5-3*x+1)/((x^2+1)^3*(x^3-2)*(x+5))",
    "1/((x^2+x+1)*(x^2-x+1)*(x^2+2)*(x^3+x+1))",
    "(2*x^7+x)/((x^2+1)^2*(x^2+3)^3*(x-4)^2)",
    "x^4/(3*x^2+1)^2",
    "(x^2+1)/(x^4-1)",
    "x^3+x+1",
    "0",
};

Outcome parallel_determinism() {
    int identical = 0;
    for (const auto& text : golden_suite) {
        auto f = parse_rational_function<Q>(text, "x");
        std::string ref;
        bool same = true;
        for (unsigned jobs : {1U, 2U, 4U}) {
            std::string json = render(tally(run(f, Method::automatic, jobs)), Format::json);
            for (Method m : {Method::galois, Method::euclid})
                json += render(tally(run(f, m, jobs)), Format::json);
            if (jobs == 1)
                ref = json;
            else
                same = same && json == ref;
        }
        if (same) ++identical;
    }
    std::ostringstream detail;
    detail << identical << "/" << golden_suite.size() << " inputs byte-identical for jobs 1,2,4";
    return {identical == static_cast<int>(golden_suite.size()), detail.str()};
}

double time_once(const RationalFunction<Q>& f, Method m) {
    auto t0 = Clock::now();
    auto d = run(f, m);
    double s = seconds_since(t0);
    tally(d);
    return s;
}

/// Minimum over interleaved repeats, so both methods see the same machine state.
std::pair<double, double> best_times(const RationalFunction<Q>& f, int repeats) {
    double g = 1e300, l = 1e300;
    for (int r = 0; r < repeats; ++r) {
        g = std::min(g, time_once(f, Method::galois));
        l = std::min(l, time_once(f, Method::linsys));
    }
    return {g, l};
}

Outcome count_sweep_trend() {
    bench::BenchCase c{bench::Family::count_sweep, 4, 2, 1, bench::CoeffMode::integer};
    std::ostringstream detail;
    bool within_limit = true, monotone = true;
    double prev_ratio = 0;
    detail << "linsys/galois:";
    for (long j = 4; j <= 10; ++j) {
        c.j = j;
        auto f = parse_rational_function<Q>(bench::generate_expression(c), "x");
        auto [g, l] = best_times(f, 15);
        within_limit = within_limit && g < 60.0;
        double ratio = l / g;
        if (ratio < prev_ratio) monotone = false;
        prev_ratio = ratio;
        char buf[32];
        std::snprintf(buf, sizeof buf, " j%ld=%.2f", j, ratio);
        detail << buf;
    }
    detail << (within_limit ? "" : " galois over 60s") << (monotone ? "" : " not monotone");
    return {within_limit && monotone, detail.str()};
}

Outcome parameter_smoke() {
    auto f = parse_rational_function<ParamRational>("1/((x-t)*(x-2*t)*(x^2+t))", "x", {"t"});
    auto d = tally(decompose_galois(f));
    bool exact = same_function(recombine(d, f.denominator), f);
    return {exact, exact ? "recombination equals input" : "recombination differs"};
}

}  // namespace

int main() {
    report("AC1", "golden example bit-exact for euclid/galois/linsys, each < 1s", golden_example);
    report("AC2", "galois intermediates for x^2+x+1", galois_intermediates);
    report("AC3", "200 random inputs: methods agree and round-trip, < 5 min", oracle_equivalence);
    report("AC4", "pole_sum vs numeric root summation, 50 polynomials, 1e-6", trace_oracle);
    report("AC6", "jobs 1/2/4 give byte-identical JSON on the golden suite", parallel_determinism);
    report("AC7", "count-sweep n=2 j=4..10: galois < 60s, linsys/galois ratio nondecreasing", count_sweep_trend);
    report("AC8", "Q(t) galois on 1/((x-t)(x-2t)(x^2+t)) recombines exactly", parameter_smoke);
    // Last, so it covers every decomposition produced above.
    report("AC5", "deg N_ij < deg P_i for every produced numerator", [] {
        return Outcome{bound_checks > 0 && bound_failures == 0,
                       std::to_string(bound_checks) + " decompositions, " + std::to_string(bound_failures) +
                           " violations"};
    });
    return failures == 0 ? 0 : 1;
}
