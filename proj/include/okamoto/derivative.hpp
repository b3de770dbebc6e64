#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "okamoto/rational.hpp"
#include "okamoto/ternary.hpp"

namespace okamoto {

enum class Verdict {
    PlusInfinity,
    MinusInfinity,
    NoInfiniteDerivative,
    Indeterminate,  // only from the frequency criterion at p1 = 1/3
};

std::string_view to_string(Verdict verdict);

/// W(1..horizon) for an expansion, with the per-period drift L - 3m.
struct WalkTrace {
    DigitSeq x;
    std::uint64_t horizon = 0;
    std::vector<std::int64_t> values;
    std::int64_t period_drift = 0;
};

WalkTrace walk_trace(const DigitSeq& x, std::uint64_t horizon);

/// Change of W over one period of the expansion.
std::int64_t period_drift(const DigitSeq& x);

/// Decides whether n - 3 I_1(n) tends to +inf, -inf or neither. For an
/// eventually periodic expansion this is the sign of the period drift;
/// zero drift leaves W bounded.
Verdict classify_point(const DigitSeq& x);

/// Frequency criterion: p1 < 1/3 gives +inf, p1 > 1/3 gives -inf, p1 = 1/3
/// is undecided. Throws domain_error unless 0 <= p1 <= 1.
Verdict classify_by_frequency(const ExactRational& p1);
Verdict classify_by_frequency(double p1);

/// Exact slope of K over [u_n, v_n], the level-n ternary interval
/// containing x (u_n <= x < v_n under the canonical expansion).
ExactRational secant_slope(const DigitSeq& x, std::uint64_t n);

/// Partial sums S_j = secant_slope(x, j), j = 1..n, and their increments
/// S_j - S_{j-1} (S_0 = 0). Every increment is 3 or -6, so the slopes
/// never settle to a finite limit.
struct DivergenceWitness {
    std::vector<ExactRational> partial_sums;
    std::vector<ExactRational> differences;
    bool steps_valid = true;
};

DivergenceWitness billingsley_divergence_witness(const DigitSeq& x, std::uint64_t n);

enum class SigmaCase {
    Separated,     // k0 <= p - 3
    OneBelow,      // k0 == p - 2
    AtThreshold,   // k0 == p - 1
};

std::string_view to_string(SigmaCase c);

/// Split of (K(x+h) - K(x)) / h into the sums over n in [0, k0-1], {k0},
/// [k0+1, p-2] and [max(p-1, k0+1), inf) of
///   D_n = (Phi(3^n (x+h)) - Phi(3^n x)) / (3^n h),
/// where 3^-p <= h < 3^-p+1 and k0 is the length of the common digit
/// prefix of x and x+h. All values are exact.
struct SigmaDecomposition {
    ExactRational x;
    ExactRational h;
    std::int64_t p = 0;
    std::int64_t k0 = 0;
    ExactRational sigma1;
    ExactRational sigma2;
    ExactRational sigma3;
    ExactRational sigma4;
    ExactRational quotient;
    SigmaCase case_tag = SigmaCase::Separated;
    /// f(1, p-1) for Separated and AtThreshold, f(1, p-2) for OneBelow.
    std::int64_t reference_weight = 0;
    /// Sandwich offsets: -27/+18 when separated, -15/+12 otherwise.
    std::int64_t lower_offset = 0;
    std::int64_t upper_offset = 0;
    /// Names of violated invariants; empty when every bound holds.
    std::vector<std::string> violations;
};

/// Throws domain_error unless x and x+h are ternary rationals with
/// 0 <= x < x+h < 1.
SigmaDecomposition sigma_decompose(const ExactRational& x, const ExactRational& h);

}  // namespace okamoto
