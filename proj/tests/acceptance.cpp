// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "okamoto/derivative.hpp"
#include "okamoto/dimension.hpp"
#include "okamoto/experiments.hpp"
#include "okamoto/functions.hpp"
#include "okamoto/piecewise.hpp"
#include "oracles/oracles.hpp"

using namespace okamoto;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), format, value);
    return buffer;
}

Outcome exact_values() {
    const std::pair<ExactRational, ExactRational> cases[] = {
        {ExactRational(1, 3), ExactRational(1)},     {ExactRational(2, 3), ExactRational(-1)},
        {ExactRational(1, 9), ExactRational(2, 3)},  {ExactRational(0), ExactRational(0)},
        {ExactRational(1), ExactRational(0)},
    };
    for (const auto& [x, expected] : cases) {
        if (k_exact(x) != expected) {
            return {false, "K(" + x.to_string() + ") = " + k_exact(x).to_string()};
        }
    }
    // 1/2 is not a ternary rational; its value comes from Phi(3^n / 2) = 0.
    for (int n = 0; n < 64; ++n) {
        const ExactRational y = ExactRational(ExactRational::pow3(n), 2).fractional_part();
        if (big_phi(y) != ExactRational(0)) {
            return {false, "Phi(3^n/2) != 0"};
        }
    }
    return {true, "K(1/3)=1 K(2/3)=-1 K(1/9)=2/3 K(0)=K(1)=K(1/2)=0"};
}

Outcome evaluator_agreement() {
    constexpr double tolerance = 1e-9;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> a_dist(0.1, 0.9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_series_fe = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const OkamotoParams params(a_dist(rng));
        const double x = unit(rng);
        const auto trunc = SeriesTruncation::okamoto_for_tolerance(params, tolerance / 2);
        const std::size_t depth = okamoto_fe_depth_for_tolerance(params, tolerance / 2);
        const double diff = std::abs(okamoto_series(params, x, trunc) - okamoto_fe(params, x, depth));
        if (diff > trunc.tail_bound + okamoto_fe_bound(params, depth)) {
            return {false, "series vs fe at a=" + fmt("%.17g", params.a()) + " x=" + fmt("%.17g", x)};
        }
        worst_series_fe = std::max(worst_series_fe, diff);
    }

    // The level-n approximant is exact at its breakpoints.
    double worst_iterative = 0.0;
    std::uniform_int_distribution<int> numerator(100, 900);
    std::uniform_int_distribution<std::size_t> index(0, 6561);
    for (int batch = 0; batch < 100; ++batch) {
        const ExactRational a(numerator(rng), 1000);
        const OkamotoParams params(a.to_double());
        const PiecewiseLinear f = okamoto_iterative(a, 8);
        const auto trunc = SeriesTruncation::okamoto_for_tolerance(params, tolerance / 2);
        const std::size_t depth = okamoto_fe_depth_for_tolerance(params, tolerance / 2);
        for (int i = 0; i < 100; ++i) {
            const std::size_t k = index(rng);
            const ExactRational x = f.breakpoint(k);
            const double exact = f.at(k).to_double();
            const double series = okamoto_series(params, expand_rational(x), trunc);
            const double fe = okamoto_fe(params, x, depth);
            const double d1 = std::abs(exact - series);
            const double d2 = std::abs(exact - fe);
            if (d1 > trunc.tail_bound + 1e-15 || d2 > okamoto_fe_bound(params, depth) + 1e-15) {
                return {false, "iterative at a=" + a.to_string() + " x=" + x.to_string()};
            }
            worst_iterative = std::max({worst_iterative, d1, d2});
        }
    }

    double worst_k = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = unit(rng);
        worst_k = std::max(worst_k, std::abs(k_series_phi(x) - k_series_digits(x)));
    }
    const bool pass = worst_series_fe <= tolerance && worst_iterative <= tolerance && worst_k <= 1e-10;
    return {pass, "series/fe " + fmt("%.2e", worst_series_fe) + ", iterative " + fmt("%.2e", worst_iterative) +
                      ", K phi/digits " + fmt("%.2e", worst_k)};
}

Outcome identity_and_symmetry() {
    const OkamotoParams third(1.0 / 3.0);
    const auto trunc = SeriesTruncation::okamoto(third, 40);
    double identity = 0.0;
    double odd = 0.0;
    double even = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = i / 9999.0;
        identity = std::max(identity, std::abs(okamoto_series(third, x, trunc) - x));
        odd = std::max(odd, std::abs(k_series_phi(x) + k_series_phi(1.0 - x)));
        even = std::max(even, std::abs(takagi(x) - takagi(1.0 - x)));
    }
    const bool pass = identity <= 1e-9 && odd <= 1e-9 && even <= 1e-10;
    return {pass, "|F-x| " + fmt("%.2e", identity) + ", |K(x)+K(1-x)| " + fmt("%.2e", odd) + ", |T(x)-T(1-x)| " +
                      fmt("%.2e", even)};
}

Outcome hata_yamaguti() {
    const auto report = hata_yamaguti_scan(100, 1e-6);
    return {report.max_error <= 1e-3, "max error " + fmt("%.3e", report.max_error)};
}

Outcome slope_identity() {
    const std::int64_t den = 6561;
    const ExactRational three(3);
    const ExactRational minus_six(-6);
    for (std::int64_t k = 0; k <= den; ++k) {
        const DigitSeq x = expand_rational(ExactRational(k, den));
        ExactRational previous;
        for (std::uint64_t n = 1; n <= 8; ++n) {
            const ExactRational slope = secant_slope(x, n);
            if (slope != ExactRational(3 * walk_value(x, n))) {
                return {false, "slope mismatch at " + std::to_string(k) + "/6561 n=" + std::to_string(n)};
            }
            const ExactRational step = slope - previous;
            if (step != three && step != minus_six) {
                return {false, "step not in {3,-6} at " + std::to_string(k) + "/6561 n=" + std::to_string(n)};
            }
            previous = slope;
        }
    }
    return {true, "6562 points x 8 levels exact"};
}

Outcome classifier() {
    const std::pair<ExactRational, Verdict> cases[] = {
        {ExactRational(0), Verdict::PlusInfinity},
        {ExactRational(1), Verdict::PlusInfinity},
        {ExactRational(1, 2), Verdict::MinusInfinity},
        {ExactRational(1, 4), Verdict::PlusInfinity},
    };
    for (const auto& [x, expected] : cases) {
        if (classify_point(expand_rational(x)) != expected) {
            return {false, "verdict at " + x.to_string()};
        }
    }
    // Denominators up to 300: for every such rational with nonzero drift, 10^4
    // steps already run past the transient. Longer periods (first at q = 677)
    // can still show the opposite sign at 10^4.
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, 300)(rng);
        const std::int64_t p = std::uniform_int_distribution<std::int64_t>(0, q)(rng);
        const DigitSeq x = expand_rational(ExactRational(p, q));
        if (period_drift(x) == 0) {
            continue;
        }
        std::int64_t ones = 0;
        for (std::uint64_t k = 1; k <= 10000; ++k) {
            ones += x.digit_at(k) == 1 ? 1 : 0;
        }
        const std::int64_t w = 10000 - 3 * ones;
        const Verdict verdict = classify_point(x);
        const bool agrees = verdict == Verdict::PlusInfinity ? w > 0 : w < 0;
        if (!agrees) {
            return {false, "W(10^4) sign disagrees at " + std::to_string(p) + "/" + std::to_string(q)};
        }
        ++checked;
    }
    return {true, "4 examples, " + std::to_string(checked) + " nonzero-drift rationals agree"};
}

Outcome sigma_bounds() {
    const auto report = sigma_fuzz(10000, 1, 16);
    return {report.violations == 0,
            std::to_string(report.violations) + " violations; cases " + std::to_string(report.case_counts[0]) + "/" +
                std::to_string(report.case_counts[1]) + "/" + std::to_string(report.case_counts[2]) + ", sigma2 in [" +
                fmt("%g", report.sigma2_min) + "," + fmt("%g", report.sigma2_max) + "], max|sigma4| " +
                fmt("%g", report.sigma4_abs_max)};
}

Outcome box_dimension() {
    const double two_thirds = box_dimension_estimate(ExactRational(2, 3), 8, 3).fitted_dimension;
    const double third = box_dimension_estimate(ExactRational(1, 3), 8, 3).fitted_dimension;
    const bool pass = std::abs(two_thirds - box_dimension_formula(2.0 / 3.0)) <= 0.05 && std::abs(third - 1.0) <= 0.05;
    return {pass, "a=2/3: " + fmt("%.5f", two_thirds) + " vs " + fmt("%.5f", box_dimension_formula(2.0 / 3.0)) +
                      ", a=1/3: " + fmt("%.5f", third) + " vs 1"};
}

Outcome hausdorff() {
    const double at_third = hausdorff_frequency_dim(FrequencyTriple::symmetric(1.0 / 3.0));
    bool increasing = true;
    double previous = -1.0;
    // alpha_n = 1/3 - 1/n is a valid frequency only from n = 3 on.
    for (int n = 3; n <= 100; ++n) {
        const double dim = hausdorff_frequency_dim(FrequencyTriple::symmetric(1.0 / 3.0 - 1.0 / n));
        increasing = increasing && dim > previous && dim < 1.0;
        previous = dim;
    }
    const bool pass = std::abs(at_third - 1.0) <= 1e-12 && increasing;
    return {pass, "dim(1/3)-1 = " + fmt("%.1e", at_third - 1.0) + ", dim(alpha_100) = " + fmt("%.6f", previous) +
                      (increasing ? ", strictly increasing" : ", NOT increasing")};
}

Outcome measure_zero() {
    constexpr std::uint64_t samples = 10000;
    constexpr std::uint64_t horizon = 10000;
    constexpr std::uint64_t seed = 7;
    const double survival = oracle::walk_survival_dp(static_cast<int>(horizon));
    if (std::abs(survival - oracle::kWalkSurvival10000) > 1e-12) {
        return {false, "DP survival " + fmt("%.17g", survival) + " differs from frozen value"};
    }
    const double expected = 1.0 - survival;
    const double threshold = expected - 3.0 * std::sqrt(expected * survival / samples);
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    const auto run = walk_monte_carlo(samples, horizon, seed, workers);
    const auto rerun = walk_monte_carlo(samples, horizon, seed, 1);
    const bool identical = run.crossings == rerun.crossings && run.total_displacement == rerun.total_displacement &&
                           run.mean_step_estimate == rerun.mean_step_estimate;
    // One step has variance 2; the estimate averages samples * horizon steps.
    const double sigma = std::sqrt(2.0 / (static_cast<double>(samples) * static_cast<double>(horizon)));
    const bool pass = std::abs(run.mean_step_estimate) <= 3 * sigma && run.crossing_fraction >= threshold && identical;
    return {pass, "mean " + fmt("%.3e", run.mean_step_estimate) + " (3 sigma " + fmt("%.2e", 3 * sigma) +
                      "), crossing " + fmt("%.5f", run.crossing_fraction) + " >= " + fmt("%.5f", threshold) +
                      (identical ? ", rerun identical" : ", rerun DIFFERS")};
}

Outcome a0() {
    const double root = a0_root();
    const double residual = std::abs(a0_polynomial(root));
    return {std::abs(root - 0.5592) < 1e-4 && residual < 1e-10,
            "a0 = " + fmt("%.12f", root) + ", residual " + fmt("%.1e", residual)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"exact K values", exact_values},
        {"evaluator agreement", evaluator_agreement},
        {"identity and symmetry", identity_and_symmetry},
        {"Hata-Yamaguti derivative", hata_yamaguti},
        {"secant slope identity", slope_identity},
        {"infinite-derivative classifier", classifier},
        {"sigma decomposition bounds", sigma_bounds},
        {"box-counting dimension", box_dimension},
        {"frequency-set Hausdorff dimension", hausdorff},
        {"walk crossing / measure zero", measure_zero},
        {"a0 root", a0},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %-34s %7.2fs  %s\n", outcome.pass ? "PASS" : "FAIL", index, name, seconds,
                    outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
