#include "okamoto/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "okamoto/errors.hpp"
#include "okamoto/random.hpp"

namespace okamoto {

double box_dimension_formula(double a) {
    if (!(a > 0.0 && a < 1.0)) {
        throw domain_error("box_dimension_formula: a outside (0,1)");
    }
    if (a <= 0.5) {
        return 1.0;
    }
    return 1.0 + std::log(4.0 * a - 1.0) / std::log(3.0);
}

BoxCountResult box_count(const PiecewiseLinear& graph, std::size_t fit_first_level) {
    const std::size_t m = graph.level();
    const auto& y = graph.ordinates();
    BoxCountResult result;
    for (std::size_t j = 1; j <= m; ++j) {
        std::size_t span = 1;
        for (std::size_t i = j; i < m; ++i) {
            span *= 3;
        }
        const mpz_class rows = ExactRational::pow3(j);
        const ExactRational row_scale(rows, mpz_class(1));
        const mpz_class top_row = rows - 1;
        std::uint64_t count = 0;
        // A column [c/3^j, (c+1)/3^j] holds `span` segments; the graph over
        // it is connected, so it meets exactly the rows between its extremes,
        // which sit at breakpoints.
        for (std::size_t start = 0; start + span < y.size(); start += span) {
            const auto [lo, hi] = std::minmax_element(y.begin() + static_cast<std::ptrdiff_t>(start),
                                                      y.begin() + static_cast<std::ptrdiff_t>(start + span + 1));
            mpz_class low_row = (*lo * row_scale).floor();
            mpz_class high_row = (*hi * row_scale).floor();
            low_row = std::clamp(low_row, mpz_class(0), top_row);
            high_row = std::clamp(high_row, mpz_class(0), top_row);
            count += mpz_class(high_row - low_row + 1).get_ui();
        }
        result.levels.push_back(j);
        result.scales.push_back(std::pow(3.0, -static_cast<double>(j)));
        result.counts.push_back(count);
    }
    fit_box_dimension(result, fit_first_level);
    return result;
}

void fit_box_dimension(BoxCountResult& result, std::size_t fit_first_level) {
    result.fit_first_level = fit_first_level;
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < result.levels.size(); ++i) {
        if (result.levels[i] >= fit_first_level) {
            xs.push_back(-std::log(result.scales[i]));
            ys.push_back(std::log(static_cast<double>(result.counts[i])));
        }
    }
    if (xs.size() < 2) {
        throw domain_error("fit_box_dimension: need at least two levels in the fit window");
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (intercept + slope * xs[i]);
        sse += e * e;
    }
    result.fitted_dimension = slope;
    result.residual = std::sqrt(sse / n);
}

BoxCountResult box_dimension_estimate(const ExactRational& a, std::size_t max_level, std::size_t fit_first_level,
                                      std::size_t max_ordinates) {
    if (max_level < 2) {
        throw domain_error("box_dimension_estimate: need max_level >= 2");
    }
    if (fit_first_level < 1 || fit_first_level + 1 > max_level) {
        throw domain_error("box_dimension_estimate: fit window must hold at least two levels");
    }
    return box_count(okamoto_iterative(a, max_level, max_ordinates), fit_first_level);
}

FrequencyTriple FrequencyTriple::symmetric(double alpha) {
    return FrequencyTriple{(1.0 - alpha) / 2.0, alpha, (1.0 - alpha) / 2.0};
}

void validate(const FrequencyTriple& p) {
    const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(p.p0) || !in_unit(p.p1) || !in_unit(p.p2) || std::abs(p.p0 + p.p1 + p.p2 - 1.0) > 1e-12) {
        throw domain_error("FrequencyTriple: entries must lie in [0,1] and sum to 1");
    }
}

double hausdorff_frequency_dim(const FrequencyTriple& p) {
    validate(p);
    const auto term = [](double q) { return q > 0.0 ? -q * std::log(q) : 0.0; };
    return (term(p.p0) + term(p.p1) + term(p.p2)) / std::log(3.0);
}

namespace {

struct WalkTally {
    std::uint64_t crossings = 0;
    std::int64_t displacement = 0;
};

WalkTally run_paths(std::uint64_t first, std::uint64_t last, std::uint64_t horizon, std::uint64_t seed) {
    WalkTally tally;
    for (std::uint64_t path = first; path < last; ++path) {
        auto engine = substream(seed, path);
        TernaryDigitSource digits(engine);
        std::int64_t w = 0;
        std::int64_t previous = 0;
        bool crossed = false;
        for (std::uint64_t n = 1; n <= horizon; ++n) {
            w += digits.next() == 1 ? -2 : 1;
            if (n >= 2 && previous * w <= 0) {
                crossed = true;
            }
            previous = w;
        }
        tally.crossings += crossed ? 1 : 0;
        tally.displacement += w;
    }
    return tally;
}

}  // namespace

WalkExperiment walk_monte_carlo(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed, unsigned workers) {
    if (samples < 1 || horizon < 1) {
        throw domain_error("walk_monte_carlo: samples and horizon must be >= 1");
    }
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(samples, 256))));
    std::vector<WalkTally> partial(workers);
    if (workers == 1) {
        partial[0] = run_paths(0, samples, horizon, seed);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = samples * w / workers;
            const std::uint64_t last = samples * (w + 1) / workers;
            threads.emplace_back([&partial, w, first, last, horizon, seed] {
                partial[w] = run_paths(first, last, horizon, seed);
            });
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    WalkExperiment result;
    result.sample_count = samples;
    result.horizon = horizon;
    result.seed = seed;
    for (const auto& t : partial) {
        result.crossings += t.crossings;
        result.total_displacement += t.displacement;
    }
    result.crossing_fraction = static_cast<double>(result.crossings) / static_cast<double>(samples);
    result.mean_step_estimate =
        static_cast<double>(result.total_displacement) / (static_cast<double>(samples) * static_cast<double>(horizon));
    return result;
}

double a0_polynomial(double a) { return 54.0 * a * a * a - 27.0 * a * a - 1.0; }

double a0_root() {
    double lo = 0.5;
    double hi = 1.0;
    // f(1/2) = -1 < 0 < 26 = f(1); f is increasing on [1/3, 1].
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) {
            break;
        }
        const double f = a0_polynomial(mid);
        if (f == 0.0) {
            return mid;
        }
        (f < 0.0 ? lo : hi) = mid;
    }
    return std::abs(a0_polynomial(lo)) <= std::abs(a0_polynomial(hi)) ? lo : hi;
}

std::vector<std::vector<Digit>> frequency_set_members(const FrequencyTriple& p, std::size_t count, std::size_t length,
                                                      std::uint64_t seed) {
    validate(p);
    std::vector<std::vector<Digit>> out;
    out.reserve(count);
    const double cut0 = p.p0;
    const double cut1 = p.p0 + p.p1;
    for (std::size_t i = 0; i < count; ++i) {
        auto engine = substream(seed, i);
        std::vector<Digit> digits;
        digits.reserve(length);
        for (std::size_t k = 0; k < length; ++k) {
            const double u = uniform_unit(engine);
            digits.push_back(u < cut0 ? 0 : u < cut1 ? 1 : 2);
        }
        out.push_back(std::move(digits));
    }
    return out;
}

}  // namespace okamoto
