#include "okamoto/functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "okamoto/errors.hpp"

namespace okamoto {

namespace {

void require_unit_interval(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw domain_error(std::string(who) + ": x = " + std::to_string(x) + " is outside [0,1]");
    }
}

double frac(double x) { return x - std::floor(x); }

// Remainder y = r/q of the functional-equation recursion, held exactly.
struct Remainder {
    mpz_class r;
    mpz_class q;

    explicit Remainder(const ExactRational& exact) : r(exact.numerator()), q(exact.denominator()) {}
};

double okamoto_fe_exact(const OkamotoParams& params, Remainder y, std::size_t depth) {
    double offset = 0.0;
    double scale = 1.0;
    mpz_class triple;
    for (std::size_t level = 0; level < depth; ++level) {
        if (y.r == 0) {
            return offset;
        }
        if (y.r == y.q) {
            return offset + scale;
        }
        triple = 3 * y.r;
        Digit branch = 2;
        if (triple <= y.q) {
            branch = 0;
        } else if (triple <= 2 * y.q) {
            branch = 1;
        }
        offset += scale * params.offset(branch);
        scale *= params.scale(branch);
        y.r = triple - branch * y.q;
    }
    return offset + scale * ExactRational(y.r, y.q).to_double();
}

}  // namespace

OkamotoParams::OkamotoParams(double a) : a_(a) {
    if (!(a > 0.0 && a < 1.0)) {
        throw domain_error("OkamotoParams: a = " + std::to_string(a) + " is outside (0,1)");
    }
}

double OkamotoParams::contraction() const noexcept { return std::max(a_, std::abs(1.0 - 2.0 * a_)); }

SeriesTruncation SeriesTruncation::takagi(std::size_t terms) {
    return {terms, std::ldexp(1.0, -static_cast<int>(terms))};
}

SeriesTruncation SeriesTruncation::k_phi(std::size_t terms) {
    return {terms, 1.5 * std::pow(3.0, -static_cast<double>(terms))};
}

SeriesTruncation SeriesTruncation::k_digits(std::size_t terms) {
    // sum_{n>=N} (1 + 4n) r^n with r = 1/3:
    //   r^N / (1-r) + 4 r^N (N (1-r) + r) / (1-r)^2
    const double r = 1.0 / 3.0;
    const double n = static_cast<double>(terms);
    const double rn = std::pow(r, n);
    return {terms, rn / (1.0 - r) + 4.0 * rn * (n * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r))};
}

SeriesTruncation SeriesTruncation::okamoto(const OkamotoParams& params, std::size_t terms) {
    if (terms == 0) {
        throw domain_error("SeriesTruncation::okamoto: need at least one term");
    }
    const double r = params.contraction();
    const double peak = std::max(params.a(), 1.0 - params.a());
    return {terms, std::pow(r, static_cast<double>(terms - 1)) * peak / (1.0 - r)};
}

SeriesTruncation SeriesTruncation::okamoto_for_tolerance(const OkamotoParams& params, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw domain_error("SeriesTruncation::okamoto_for_tolerance: tolerance must be positive");
    }
    const double r = params.contraction();
    const double peak = std::max(params.a(), 1.0 - params.a());
    std::size_t terms = 1;
    if (r > 0.0) {
        const double needed = std::log(tolerance * (1.0 - r) / peak) / std::log(r);
        terms = static_cast<std::size_t>(std::max(0.0, std::ceil(needed))) + 1;
    }
    auto trunc = okamoto(params, terms);
    while (trunc.tail_bound > tolerance) {
        trunc = okamoto(params, ++terms);
    }
    return trunc;
}

double tent_phi(double x) {
    const double f = frac(x);
    return std::min(f, 1.0 - f);
}

double big_phi(double x) {
    const double f = frac(x);
    if (f <= 1.0 / 3.0) {
        return 3.0 * f;
    }
    if (f <= 2.0 / 3.0) {
        return 3.0 * (1.0 - 2.0 * f);
    }
    return 3.0 * (f - 1.0);
}

ExactRational big_phi(const ExactRational& x) {
    const ExactRational f = x.fractional_part();
    const ExactRational third(1, 3);
    if (f <= third) {
        return ExactRational(3) * f;
    }
    if (f <= ExactRational(2, 3)) {
        return ExactRational(3) * (ExactRational(1) - ExactRational(2) * f);
    }
    return ExactRational(3) * (f - ExactRational(1));
}

double shift_psi(double x) {
    require_unit_interval(x, "shift_psi");
    if (x <= 1.0 / 3.0) {
        return 3.0 * x;
    }
    if (x <= 2.0 / 3.0) {
        return 3.0 * x - 1.0;
    }
    return 3.0 * x - 2.0;
}

double takagi(double x, const SeriesTruncation& trunc) {
    require_unit_interval(x, "takagi");
    double sum = 0.0;
    double weight = 1.0;
    double y = x;
    for (std::size_t n = 0; n < trunc.terms; ++n) {
        sum += weight * tent_phi(y);
        y = frac(2.0 * y);  // exact in binary floating point
        weight *= 0.5;
    }
    return sum;
}

double lebesgue_L(double a, double x, std::size_t depth) {
    if (!(a > 0.0 && a < 1.0)) {
        throw domain_error("lebesgue_L: a outside (0,1)");
    }
    require_unit_interval(x, "lebesgue_L");
    double offset = 0.0;
    double scale = 1.0;
    double y = x;
    for (std::size_t level = 0; level < depth; ++level) {
        if (y == 0.0) {
            return offset;
        }
        if (y == 1.0) {
            return offset + scale;
        }
        if (y <= 0.5) {
            scale *= a;
            y = 2.0 * y;
        } else {
            offset += scale * a;
            scale *= 1.0 - a;
            y = 2.0 * y - 1.0;
        }
    }
    return offset + scale * y;
}

double lebesgue_L_bound(double a, std::size_t depth) {
    return std::pow(std::max(a, 1.0 - a), static_cast<double>(depth));
}

double okamoto_series(const OkamotoParams& params, const DigitSeq& x, const SeriesTruncation& trunc) {
    double sum = 0.0;
    double product = 1.0;
    const std::size_t significant = x.terminates() ? x.preperiod().size() : trunc.terms;
    const std::size_t last = std::min(trunc.terms, significant);
    for (std::size_t n = 1; n <= last; ++n) {
        const Digit d = x.digit_at(n);
        sum += product * params.offset(d);
        product *= params.scale(d);
    }
    return sum;
}

double okamoto_series(const OkamotoParams& params, double x, const SeriesTruncation& trunc) {
    const auto digits = ternary_prefix(x, trunc.terms);
    double sum = 0.0;
    double product = 1.0;
    for (Digit d : digits) {
        sum += product * params.offset(d);
        product *= params.scale(d);
    }
    return sum;
}

double okamoto_fe(const OkamotoParams& params, double x, std::size_t depth) {
    require_unit_interval(x, "okamoto_fe");
    return okamoto_fe_exact(params, Remainder(ExactRational::from_double(x)), depth);
}

double okamoto_fe(const OkamotoParams& params, const ExactRational& x, std::size_t depth) {
    if (x.sign() < 0 || x > ExactRational(1)) {
        throw domain_error("okamoto_fe: x = " + x.to_string() + " is outside [0,1]");
    }
    return okamoto_fe_exact(params, Remainder(x), depth);
}

double okamoto_fe_bound(const OkamotoParams& params, std::size_t depth) {
    return std::pow(params.contraction(), static_cast<double>(depth));
}

std::size_t okamoto_fe_depth_for_tolerance(const OkamotoParams& params, double tolerance) {
    std::size_t depth = 0;
    while (okamoto_fe_bound(params, depth) > tolerance) {
        ++depth;
    }
    return depth;
}

double k_series_phi(double x, const SeriesTruncation& trunc) {
    require_unit_interval(x, "k_series_phi");
    double sum = 0.0;
    double weight = 1.0;
    double y = x;
    for (std::size_t n = 0; n < trunc.terms; ++n) {
        sum += weight * big_phi(y);
        y = frac(3.0 * y);
        weight /= 3.0;
    }
    return sum;
}

namespace {

// sum_{n<N} 3^-n { s(e_{n+1}) + (n - 3 I_1(n)) e_{n+1} }, s = (0, 1, -1).
template <typename DigitSource>
double k_digit_sum(DigitSource&& digit, std::size_t terms) {
    double sum = 0.0;
    double weight = 1.0;
    std::int64_t walk = 0;  // n - 3 I_1(n)
    for (std::size_t n = 0; n < terms; ++n) {
        const Digit e = digit(n + 1);
        const double s = e == 0 ? 0.0 : e == 1 ? 1.0 : -1.0;
        sum += weight * (s + static_cast<double>(walk * e));
        walk += e == 1 ? -2 : 1;
        weight /= 3.0;
    }
    return sum;
}

}  // namespace

double k_series_digits(const DigitSeq& x, const SeriesTruncation& trunc) {
    return k_digit_sum([&x](std::size_t k) { return x.digit_at(k); }, trunc.terms);
}

double k_series_digits(double x, const SeriesTruncation& trunc) {
    const auto digits = ternary_prefix(x, trunc.terms);
    return k_digit_sum([&digits](std::size_t k) { return digits[k - 1]; }, trunc.terms);
}

ExactRational k_exact(const ExactRational& x) {
    if (x.sign() < 0 || x > ExactRational(1)) {
        throw domain_error("k_exact: x = " + x.to_string() + " is outside [0,1]");
    }
    const long order = x.ternary_order();
    if (order < 0) {
        throw domain_error("k_exact: x = " + x.to_string() + " is not a ternary rational k/3^m");
    }
    // Phi(3^n x) vanishes for n >= order since 3^n x is then an integer.
    ExactRational sum;
    ExactRational weight(1);
    ExactRational y = x;
    const ExactRational third(1, 3);
    for (long n = 0; n < order; ++n) {
        sum += weight * big_phi(y);
        y = (ExactRational(3) * y).fractional_part();
        weight *= third;
    }
    return sum;
}

double k_fe(double x, std::size_t depth) {
    require_unit_interval(x, "k_fe");
    double sum = 0.0;
    double weight = 1.0;
    double y = x;
    for (std::size_t level = 0; level < depth; ++level) {
        if (y == 0.0 || y == 1.0) {
            return sum;  // K(0) = K(1) = 0
        }
        sum += weight * big_phi(y);
        y = shift_psi(std::clamp(y, 0.0, 1.0));
        weight /= 3.0;
    }
    return sum;
}

double k_partial(double x, std::size_t n) { return k_series_phi(x, SeriesTruncation{n + 1, 0.0}); }

double yamaguti_hata_solve(double t, const BoundedFunction& g, const std::function<double(double)>& psi, double x,
                           std::size_t terms) {
    if (!(std::abs(t) < 1.0)) {
        throw contraction_error("yamaguti_hata_solve: need |t| < 1, got t = " + std::to_string(t));
    }
    double sum = 0.0;
    double weight = 1.0;
    double y = x;
    for (std::size_t n = 0; n < terms; ++n) {
        sum += weight * g.fn(y);
        y = psi(y);
        weight *= t;
    }
    return sum;
}

double yamaguti_hata_bound(double t, double g_bound, std::size_t terms) {
    const double r = std::abs(t);
    return g_bound * std::pow(r, static_cast<double>(terms)) / (1.0 - r);
}

double dFa_da_fd(double a, double x, double h, bool richardson) {
    if (!(h > 0.0 && a - h > 0.0 && a + h < 1.0)) {
        throw domain_error("dFa_da_fd: need 0 < a-h and a+h < 1");
    }
    const auto central = [x, a](double step) {
        const OkamotoParams lo(a - step);
        const OkamotoParams hi(a + step);
        constexpr double tolerance = 1e-17;
        const double upper = okamoto_series(hi, x, SeriesTruncation::okamoto_for_tolerance(hi, tolerance));
        const double lower = okamoto_series(lo, x, SeriesTruncation::okamoto_for_tolerance(lo, tolerance));
        return (upper - lower) / (2.0 * step);
    };
    if (!richardson) {
        return central(h);
    }
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace okamoto
