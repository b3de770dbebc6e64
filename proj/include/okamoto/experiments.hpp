#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "okamoto/rational.hpp"

namespace okamoto {

struct SigmaFuzzReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t violations = 0;
    std::map<std::string, std::uint64_t> violations_by_invariant;
    std::array<std::uint64_t, 3> case_counts{};  // indexed by SigmaCase
    double sigma2_min = 0.0;
    double sigma2_max = 0.0;
    double sigma4_abs_max = 0.0;
    /// Tightest observed margins quotient - (f + lower) and (f + upper) - quotient.
    double lower_margin_min = 0.0;
    double upper_margin_min = 0.0;
};

/// Random pair (x, h) of ternary rationals with 0 <= x < x+h < 1, order at
/// most max_order, h log-uniform in scale. Deterministic in (seed, index).
std::pair<ExactRational, ExactRational> random_ternary_pair(std::uint64_t seed, std::uint64_t index,
                                                            unsigned max_order = 16);

/// Runs sigma_decompose over `trials` random pairs and tallies violations.
SigmaFuzzReport sigma_fuzz(std::uint64_t trials, std::uint64_t seed, unsigned max_order = 16);

struct HataYamagutiReport {
    std::uint64_t grid_points = 0;
    double step = 0.0;
    double max_error = 0.0;
    double worst_x = 0.0;
};

/// max over x_i = i/(grid_points - 1) of
/// |(L_{1/2+h}(x) - L_{1/2-h}(x)) / 2h - 2 T(x)|.
HataYamagutiReport hata_yamaguti_scan(std::uint64_t grid_points, double step);

}  // namespace okamoto
