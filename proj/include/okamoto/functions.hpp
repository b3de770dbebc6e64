#pragma once

#include <cstddef>
#include <functional>

#include "okamoto/rational.hpp"
#include "okamoto/ternary.hpp"

namespace okamoto {

/// Parameter of the Okamoto family, 0 < a < 1.
///
/// Digit weights of the Kobayashi representation: the vertical scale
/// p(e) = (a, 1-2a, a) and offset q(e) = (0, a, 1-a) of the three affine
/// pieces of the graph.
class OkamotoParams {
public:
    explicit OkamotoParams(double a);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double scale(Digit d) const noexcept { return d == 1 ? 1.0 - 2.0 * a_ : a_; }
    [[nodiscard]] double offset(Digit d) const noexcept { return d == 0 ? 0.0 : d == 1 ? a_ : 1.0 - a_; }
    /// max(a, |1-2a|), the largest vertical contraction.
    [[nodiscard]] double contraction() const noexcept;

private:
    double a_;
};

/// Number of series terms kept together with a proven bound on the omitted
/// remainder. Construct through the per-series factories so the bound always
/// matches the series it is used with.
struct SeriesTruncation {
    std::size_t terms = 0;
    double tail_bound = 0.0;

    /// Takagi series: sum_{n>=N} 2^-n phi <= 2^-N.
    static SeriesTruncation takagi(std::size_t terms = 50);
    /// K as sum 3^-n Phi(3^n x): |Phi| <= 1 gives (3/2) 3^-N.
    static SeriesTruncation k_phi(std::size_t terms = 40);
    /// K digit series: |term_n| <= 3^-n (1 + 4n).
    static SeriesTruncation k_digits(std::size_t terms = 40);
    /// Kobayashi series for F_a: r^(N-1) max(a,1-a) / (1-r), r = max(a,|1-2a|).
    static SeriesTruncation okamoto(const OkamotoParams& params, std::size_t terms);
    /// Smallest Kobayashi truncation whose tail bound is <= tolerance.
    static SeriesTruncation okamoto_for_tolerance(const OkamotoParams& params, double tolerance);
};

// Elementary pieces.

/// Distance to the nearest integer.
double tent_phi(double x);
/// The ternary zigzag 3x | 3(1-2x) | 3(x-1) on [0,1], extended with period 1.
double big_phi(double x);
/// Exact rational counterpart of big_phi.
ExactRational big_phi(const ExactRational& x);
/// Branchwise 3x mod 1 on [0,1]; the first matching branch wins, so
/// shift_psi(1/3) == 1 and shift_psi(1) == 1.
double shift_psi(double x);

// Binary-expansion functions.

double takagi(double x, const SeriesTruncation& trunc = SeriesTruncation::takagi());

/// De Rham / Lebesgue singular function L_a, unrolled depth binary levels.
/// The innermost call is replaced by the identity, so the result is the
/// level-depth piecewise linear interpolant (monotone, error <= max(a,1-a)^depth).
double lebesgue_L(double a, double x, std::size_t depth = 50);

/// Error bound of lebesgue_L at the given depth.
double lebesgue_L_bound(double a, std::size_t depth);

// Okamoto's family F_a.

/// Kobayashi digit series on an exact expansion.
double okamoto_series(const OkamotoParams& params, const DigitSeq& x, const SeriesTruncation& trunc);
/// Same series on the exact ternary digits of a double.
double okamoto_series(const OkamotoParams& params, double x, const SeriesTruncation& trunc);
/// Self-affine functional equation unrolled depth levels on the exact value
/// of x. Base case is the identity pushed through the accumulated affine maps.
double okamoto_fe(const OkamotoParams& params, double x, std::size_t depth);
double okamoto_fe(const OkamotoParams& params, const ExactRational& x, std::size_t depth);
/// Error bound of okamoto_fe: contraction()^depth.
double okamoto_fe_bound(const OkamotoParams& params, std::size_t depth);
/// Smallest depth with okamoto_fe_bound <= tolerance.
std::size_t okamoto_fe_depth_for_tolerance(const OkamotoParams& params, double tolerance);

// K = dF_a/da at a = 1/3.

double k_series_phi(double x, const SeriesTruncation& trunc = SeriesTruncation::k_phi());
double k_series_digits(const DigitSeq& x, const SeriesTruncation& trunc = SeriesTruncation::k_digits());
double k_series_digits(double x, const SeriesTruncation& trunc = SeriesTruncation::k_digits());
/// Exact K(k/3^m) as the finite sum of m terms. Throws domain_error if x is
/// outside [0,1] or its denominator is not a power of 3.
ExactRational k_exact(const ExactRational& x);
/// Functional equation for K unrolled depth levels; error <= (3/2) 3^-depth.
double k_fe(double x, std::size_t depth = 40);
/// Partial sum K_n = sum_{k=0}^{n} 3^-k Phi(3^k x).
double k_partial(double x, std::size_t n);

/// Bounded function with a known sup-norm bound.
struct BoundedFunction {
    std::function<double(double)> fn;
    double bound = 0.0;
};

/// sum_{n<N} t^n g(psi^n(x)), the bounded solution of F(x) - t F(psi(x)) = g(x).
/// Throws contraction_error if |t| >= 1.
double yamaguti_hata_solve(double t, const BoundedFunction& g, const std::function<double(double)>& psi, double x,
                           std::size_t terms);
/// Omitted remainder bound M |t|^N / (1 - |t|).
double yamaguti_hata_bound(double t, double g_bound, std::size_t terms);

/// Central difference (F_{a+h}(x) - F_{a-h}(x)) / 2h on the Kobayashi
/// series. With richardson set, combines steps h and h/2 to cancel the h^2 term.
double dFa_da_fd(double a, double x, double h, bool richardson = false);

}  // namespace okamoto
