#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "okamoto/piecewise.hpp"
#include "okamoto/rational.hpp"
#include "okamoto/ternary.hpp"

namespace okamoto {

/// Box-counting dimension of graph(F_a): 1 for a <= 1/2, else 1 + log_3(4a - 1).
double box_dimension_formula(double a);

struct BoxCountResult {
    std::vector<std::size_t> levels;   // j
    std::vector<double> scales;        // 3^-j
    std::vector<std::uint64_t> counts;  // boxes meeting the graph at scale 3^-j
    std::size_t fit_first_level = 0;  // first level used in the fit
    double fitted_dimension = 0.0;
    double residual = 0.0;  // RMS residual of the log-log fit
};

/// Counts 3^-j boxes met by graph(f_m) for j = 1..m, using the exact
/// ordinates of okamoto_iterative, and fits log N against j log 3 over
/// j >= fit_first_level (default drops the two coarsest scales).
BoxCountResult box_dimension_estimate(const ExactRational& a, std::size_t max_level, std::size_t fit_first_level = 3,
                                      std::size_t max_ordinates = kDefaultMaxOrdinates);

/// Box counts of a fixed approximant; exposed so other fits can reuse it.
BoxCountResult box_count(const PiecewiseLinear& graph, std::size_t fit_first_level = 3);

/// Least-squares slope of log N versus log(1/scale) over the chosen levels.
void fit_box_dimension(BoxCountResult& result, std::size_t fit_first_level);

struct FrequencyTriple {
    double p0 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;

    /// ((1-alpha)/2, alpha, (1-alpha)/2)
    static FrequencyTriple symmetric(double alpha);
};

/// Throws domain_error unless each p_i in [0,1] and the sum is 1 (to 1e-12).
void validate(const FrequencyTriple& p);

/// Hausdorff dimension of the set with ternary digit frequencies p:
/// entropy / ln 3, with 0 ln 0 = 0.
double hausdorff_frequency_dim(const FrequencyTriple& p);

struct WalkExperiment {
    std::uint64_t sample_count = 0;
    std::uint64_t horizon = 0;
    std::uint64_t seed = 0;
    std::uint64_t crossings = 0;
    std::int64_t total_displacement = 0;  // sum of W(horizon) over paths
    double crossing_fraction = 0.0;
    double mean_step_estimate = 0.0;
};

/// Simulates W(n) = n - 3 I_1(n) for uniformly random ternary digits.
/// A path counts as crossing when some consecutive pair has
/// W(i) W(i+1) <= 0, i.e. W(1..horizon) does not keep one strict sign.
/// Path i uses substream(seed, i), so the result does not depend on workers.
WalkExperiment walk_monte_carlo(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed,
                                unsigned workers = 1);

/// 54 a^3 - 27 a^2 - 1
double a0_polynomial(double a);

/// Root of 54 a^3 - 27 a^2 = 1 in (1/2, 1) by bisection.
double a0_root();

/// `count` digit strings of length `length`, digits drawn independently
/// with probabilities p. String i uses substream(seed, i).
std::vector<std::vector<Digit>> frequency_set_members(const FrequencyTriple& p, std::size_t count, std::size_t length,
                                                      std::uint64_t seed);

}  // namespace okamoto
