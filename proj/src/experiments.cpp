#include "okamoto/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "okamoto/derivative.hpp"
#include "okamoto/errors.hpp"
#include "okamoto/functions.hpp"
#include "okamoto/random.hpp"

namespace okamoto {

namespace {

// Uniform integer in [lo, hi] by rejection.
std::uint64_t uniform_between(std::mt19937_64& engine, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo;
    if (range == std::numeric_limits<std::uint64_t>::max()) {
        return engine();
    }
    const std::uint64_t buckets = range + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % buckets;
    std::uint64_t draw = 0;
    do {
        draw = engine();
    } while (draw >= limit);
    return lo + draw % buckets;
}

std::uint64_t pow3(unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= 3;
    }
    return r;
}

}  // namespace

std::pair<ExactRational, ExactRational> random_ternary_pair(std::uint64_t seed, std::uint64_t index,
                                                            unsigned max_order) {
    if (max_order < 2 || max_order > 39) {
        throw domain_error("random_ternary_pair: max_order must lie in [2, 39]");
    }
    auto engine = substream(seed, index);
    const auto order = static_cast<unsigned>(uniform_between(engine, 2, max_order));
    const std::uint64_t denominator = pow3(order);
    std::uint64_t k = uniform_between(engine, 0, denominator - 2);
    if (engine() % 4 == 0) {
        // Force a run of trailing 2's so a small h carries across it.
        const auto run = static_cast<unsigned>(uniform_between(engine, 1, order - 1));
        const std::uint64_t block = pow3(run);
        k = (k / block) * block + (block - 1);
        if (k > denominator - 2) {
            k -= block;
        }
    }
    const auto scale = static_cast<unsigned>(uniform_between(engine, 0, order));
    const std::uint64_t h_max = std::min(pow3(scale), denominator - 1 - k);
    const std::uint64_t h = uniform_between(engine, 1, h_max);
    const auto den = static_cast<std::int64_t>(denominator);
    return {ExactRational(static_cast<std::int64_t>(k), den), ExactRational(static_cast<std::int64_t>(h), den)};
}

SigmaFuzzReport sigma_fuzz(std::uint64_t trials, std::uint64_t seed, unsigned max_order) {
    SigmaFuzzReport report;
    report.trials = trials;
    report.seed = seed;
    report.sigma2_min = std::numeric_limits<double>::infinity();
    report.sigma2_max = -std::numeric_limits<double>::infinity();
    report.lower_margin_min = std::numeric_limits<double>::infinity();
    report.upper_margin_min = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < trials; ++i) {
        const auto [x, h] = random_ternary_pair(seed, i, max_order);
        const SigmaDecomposition d = sigma_decompose(x, h);
        ++report.case_counts[static_cast<std::size_t>(d.case_tag)];
        if (!d.violations.empty()) {
            ++report.violations;
            for (const auto& name : d.violations) {
                ++report.violations_by_invariant[name];
            }
        }
        const double s2 = d.sigma2.to_double();
        report.sigma2_min = std::min(report.sigma2_min, s2);
        report.sigma2_max = std::max(report.sigma2_max, s2);
        report.sigma4_abs_max = std::max(report.sigma4_abs_max, std::abs(d.sigma4.to_double()));
        const double q = d.quotient.to_double();
        const auto f = static_cast<double>(d.reference_weight);
        report.lower_margin_min = std::min(report.lower_margin_min, q - (f + static_cast<double>(d.lower_offset)));
        report.upper_margin_min = std::min(report.upper_margin_min, f + static_cast<double>(d.upper_offset) - q);
    }
    return report;
}

HataYamagutiReport hata_yamaguti_scan(std::uint64_t grid_points, double step) {
    if (grid_points < 2) {
        throw domain_error("hata_yamaguti_scan: need at least two grid points");
    }
    if (!(step > 0.0 && step < 0.5)) {
        throw domain_error("hata_yamaguti_scan: step must lie in (0, 1/2)");
    }
    HataYamagutiReport report;
    report.grid_points = grid_points;
    report.step = step;
    for (std::uint64_t i = 0; i < grid_points; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const double slope = (lebesgue_L(0.5 + step, x) - lebesgue_L(0.5 - step, x)) / (2.0 * step);
        const double error = std::abs(slope - 2.0 * takagi(x));
        if (error > report.max_error) {
            report.max_error = error;
            report.worst_x = x;
        }
    }
    return report;
}

}  // namespace okamoto
