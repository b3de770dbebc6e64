#include "okamoto/derivative.hpp"

#include <algorithm>
#include <string>

#include "okamoto/errors.hpp"
#include "okamoto/functions.hpp"

namespace okamoto {

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::PlusInfinity: return "PLUS_INFINITY";
        case Verdict::MinusInfinity: return "MINUS_INFINITY";
        case Verdict::NoInfiniteDerivative: return "NO_INFINITE_DERIVATIVE";
        case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "UNKNOWN";
}

std::string_view to_string(SigmaCase c) {
    switch (c) {
        case SigmaCase::Separated: return "k0<=p-3";
        case SigmaCase::OneBelow: return "k0=p-2";
        case SigmaCase::AtThreshold: return "k0=p-1";
    }
    return "unknown";
}

std::int64_t period_drift(const DigitSeq& x) {
    const auto& period = x.period();
    const auto ones = std::count(period.begin(), period.end(), Digit{1});
    return static_cast<std::int64_t>(period.size()) - 3 * static_cast<std::int64_t>(ones);
}

WalkTrace walk_trace(const DigitSeq& x, std::uint64_t horizon) {
    if (horizon < 1) {
        throw range_error("walk_trace: horizon must be >= 1");
    }
    WalkTrace trace{x, horizon, {}, period_drift(x)};
    trace.values.reserve(horizon);
    std::int64_t w = 0;
    for (std::uint64_t k = 1; k <= horizon; ++k) {
        w += x.digit_at(k) == 1 ? -2 : 1;
        trace.values.push_back(w);
    }
    return trace;
}

Verdict classify_point(const DigitSeq& x) {
    const auto drift = period_drift(x);
    if (drift > 0) {
        return Verdict::PlusInfinity;
    }
    if (drift < 0) {
        return Verdict::MinusInfinity;
    }
    return Verdict::NoInfiniteDerivative;
}

Verdict classify_by_frequency(const ExactRational& p1) {
    if (p1.sign() < 0 || p1 > ExactRational(1)) {
        throw domain_error("classify_by_frequency: p1 outside [0,1]");
    }
    const ExactRational third(1, 3);
    if (p1 < third) {
        return Verdict::PlusInfinity;
    }
    if (p1 > third) {
        return Verdict::MinusInfinity;
    }
    return Verdict::Indeterminate;
}

Verdict classify_by_frequency(double p1) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw domain_error("classify_by_frequency: p1 outside [0,1]");
    }
    if (p1 == 1.0 / 3.0) {
        return Verdict::Indeterminate;
    }
    return classify_by_frequency(ExactRational::from_double(p1));
}

ExactRational secant_slope(const DigitSeq& x, std::uint64_t n) {
    if (n < 1) {
        throw range_error("secant_slope: level must be >= 1");
    }
    mpz_class index = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        index = 3 * index + x.digit_at(k);
    }
    const mpz_class scale = ExactRational::pow3(n);
    const ExactRational u(index, scale);
    const ExactRational v(index + 1, scale);
    return (k_exact(v) - k_exact(u)) * ExactRational(scale, mpz_class(1));
}

DivergenceWitness billingsley_divergence_witness(const DigitSeq& x, std::uint64_t n) {
    if (n < 2) {
        throw range_error("billingsley_divergence_witness: horizon must be >= 2");
    }
    DivergenceWitness witness;
    ExactRational previous;
    const ExactRational up(3);
    const ExactRational down(-6);
    for (std::uint64_t j = 1; j <= n; ++j) {
        ExactRational slope = secant_slope(x, j);
        ExactRational step = slope - previous;
        if (step != up && step != down) {
            witness.steps_valid = false;
        }
        witness.differences.push_back(step);
        previous = slope;
        witness.partial_sums.push_back(std::move(slope));
    }
    return witness;
}

namespace {

// f(a, b), with an empty range counting as zero.
std::int64_t weight_or_zero(const DigitSeq& x, std::int64_t a, std::int64_t b) {
    if (a > b) {
        return 0;
    }
    return f_weight(x, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

ExactRational sum_range(const std::vector<ExactRational>& terms, std::int64_t first, std::int64_t last) {
    ExactRational total;
    const auto end = std::min<std::int64_t>(last, static_cast<std::int64_t>(terms.size()) - 1);
    for (std::int64_t n = std::max<std::int64_t>(first, 0); n <= end; ++n) {
        total += terms[static_cast<std::size_t>(n)];
    }
    return total;
}

}  // namespace

SigmaDecomposition sigma_decompose(const ExactRational& x, const ExactRational& h) {
    const ExactRational right = x + h;
    if (x.sign() < 0 || h.sign() <= 0 || right >= ExactRational(1)) {
        throw domain_error("sigma_decompose: need 0 <= x < x+h < 1");
    }
    const long order_x = x.ternary_order();
    const long order_right = right.ternary_order();
    if (order_x < 0 || order_right < 0) {
        throw domain_error("sigma_decompose: x and x+h must be ternary rationals");
    }

    SigmaDecomposition out;
    out.x = x;
    out.h = h;

    // 3^-p <= h < 3^-p+1
    std::int64_t p = 1;
    ExactRational threshold(1, 3);
    while (h < threshold) {
        ++p;
        threshold *= ExactRational(1, 3);
    }
    out.p = p;

    const DigitSeq left_digits = DigitSeq::expand(x);
    const DigitSeq right_digits = DigitSeq::expand(right);
    std::int64_t k0 = 0;
    while (left_digits.digit_at(static_cast<std::uint64_t>(k0 + 1)) ==
           right_digits.digit_at(static_cast<std::uint64_t>(k0 + 1))) {
        ++k0;
    }
    out.k0 = k0;

    // D_n vanishes once both 3^n x and 3^n (x+h) are integers.
    const auto nonzero_terms = static_cast<std::int64_t>(std::max(order_x, order_right));
    const auto term_count = std::max<std::int64_t>(nonzero_terms, p + 1);
    std::vector<ExactRational> d;
    d.reserve(static_cast<std::size_t>(term_count));
    ExactRational scale(1);
    for (std::int64_t n = 0; n < term_count; ++n) {
        d.push_back((big_phi(scale * right) - big_phi(scale * x)) / (scale * h));
        scale *= ExactRational(3);
    }

    out.sigma1 = sum_range(d, 0, k0 - 1);
    out.sigma2 = d[static_cast<std::size_t>(k0)];
    out.sigma3 = sum_range(d, k0 + 1, p - 2);
    out.sigma4 = sum_range(d, std::max(p - 1, k0 + 1), term_count - 1);
    out.quotient = (k_exact(right) - k_exact(x)) / h;

    if (k0 <= p - 3) {
        out.case_tag = SigmaCase::Separated;
        out.reference_weight = weight_or_zero(left_digits, 1, p - 1);
        out.lower_offset = -27;
        out.upper_offset = 18;
    } else if (k0 == p - 2) {
        out.case_tag = SigmaCase::OneBelow;
        out.reference_weight = weight_or_zero(left_digits, 1, p - 2);
        out.lower_offset = -15;
        out.upper_offset = 12;
    } else {
        out.case_tag = SigmaCase::AtThreshold;
        out.reference_weight = weight_or_zero(left_digits, 1, p - 1);
        out.lower_offset = -15;
        out.upper_offset = 12;
    }

    if (k0 > p - 1) {
        out.violations.emplace_back("k0 <= p-1");
    }
    if (out.sigma1 + out.sigma2 + out.sigma3 + out.sigma4 != out.quotient) {
        out.violations.emplace_back("sigma sum == quotient");
    }
    if (out.sigma1 != ExactRational(weight_or_zero(left_digits, 1, k0))) {
        out.violations.emplace_back("sigma1 == f(1,k0)");
    }
    if (out.sigma2 < ExactRational(-6) || out.sigma2 > ExactRational(3)) {
        out.violations.emplace_back("-6 <= sigma2 <= 3");
    }
    if (out.sigma4 < ExactRational(-9) || out.sigma4 > ExactRational(9)) {
        out.violations.emplace_back("|sigma4| <= 9");
    }
    const ExactRational reference(out.reference_weight);
    if (out.quotient < reference + ExactRational(out.lower_offset) ||
        out.quotient > reference + ExactRational(out.upper_offset)) {
        out.violations.emplace_back("sandwich");
    }
    return out;
}

}  // namespace okamoto
