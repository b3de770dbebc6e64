#include "okamoto/ternary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "okamoto/errors.hpp"

namespace okamoto {

namespace {

std::array<std::uint64_t, 3> tally(std::span<const Digit> digits) {
    std::array<std::uint64_t, 3> counts{};
    for (Digit d : digits) {
        ++counts[d];
    }
    return counts;
}

mpz_class base3_integer(std::span<const Digit> digits) {
    mpz_class value = 0;
    for (Digit d : digits) {
        value = value * 3 + d;
    }
    return value;
}

}  // namespace

DigitSeq::DigitSeq(std::vector<Digit> preperiod, std::vector<Digit> period, ExactRational value)
    : preperiod_(std::move(preperiod)),
      period_(std::move(period)),
      value_(std::move(value)),
      preperiod_counts_(tally(preperiod_)),
      period_counts_(tally(period_)) {}

DigitSeq DigitSeq::expand(const ExactRational& x) {
    if (x.sign() < 0 || x > ExactRational(1)) {
        throw domain_error("expand_rational: x = " + x.to_string() + " is outside [0,1]");
    }
    if (x == ExactRational(1)) {
        return DigitSeq({}, {2}, x);
    }

    // Long division of p by q in base 3. The preperiod length is the 3-adic
    // valuation of q; after that the remainders cycle back to the first
    // periodic remainder, and the tail of digits from any position is
    // determined by (and determines) the remainder, so both parts are minimal.
    const mpz_class q = x.denominator();
    mpz_class r = x.numerator();
    mpz_class cofactor = q;
    std::size_t preperiod_length = 0;
    while (mpz_divisible_ui_p(cofactor.get_mpz_t(), 3) != 0) {
        mpz_divexact_ui(cofactor.get_mpz_t(), cofactor.get_mpz_t(), 3);
        ++preperiod_length;
    }

    auto next_digit = [&]() {
        r *= 3;
        mpz_class d;
        mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
        return static_cast<Digit>(d.get_ui());
    };

    std::vector<Digit> preperiod;
    preperiod.reserve(preperiod_length);
    for (std::size_t i = 0; i < preperiod_length; ++i) {
        preperiod.push_back(next_digit());
    }
    const mpz_class cycle_start = r;
    std::vector<Digit> period;
    do {
        period.push_back(next_digit());
    } while (r != cycle_start);

    return DigitSeq(std::move(preperiod), std::move(period), x);
}

DigitSeq DigitSeq::from_digits(std::span<const Digit> preperiod, std::span<const Digit> period) {
    if (period.empty()) {
        throw domain_error("DigitSeq::from_digits: empty period");
    }
    const auto bad = [](Digit d) { return d > 2; };
    if (std::any_of(preperiod.begin(), preperiod.end(), bad) || std::any_of(period.begin(), period.end(), bad)) {
        throw domain_error("DigitSeq::from_digits: digit outside {0,1,2}");
    }
    return expand(reconstruct(preperiod, period));
}

ExactRational reconstruct(std::span<const Digit> preperiod, std::span<const Digit> period) {
    const mpz_class head = base3_integer(preperiod);
    const mpz_class scale = ExactRational::pow3(preperiod.size());
    ExactRational value(head, scale);
    if (!period.empty()) {
        const mpz_class cycle = base3_integer(period);
        const mpz_class cycle_den = ExactRational::pow3(period.size()) - 1;
        value += ExactRational(cycle, cycle_den * scale);
    }
    return value;
}

Digit DigitSeq::digit_at(std::uint64_t k) const {
    if (k == 0) {
        throw range_error("digit_at: digit indices start at 1");
    }
    if (k <= preperiod_.size()) {
        return preperiod_[k - 1];
    }
    return period_[(k - preperiod_.size() - 1) % period_.size()];
}

std::vector<Digit> DigitSeq::prefix(std::size_t n) const {
    std::vector<Digit> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(digit_at(k));
    }
    return out;
}

std::uint64_t DigitSeq::prefix_count(Digit digit, std::uint64_t n) const {
    const std::uint64_t pre = preperiod_.size();
    if (n <= pre) {
        return static_cast<std::uint64_t>(std::count(preperiod_.begin(), preperiod_.begin() + static_cast<std::ptrdiff_t>(n), digit));
    }
    const std::uint64_t tail = n - pre;
    const std::uint64_t full = tail / period_.size();
    const auto partial = static_cast<std::ptrdiff_t>(tail % period_.size());
    return preperiod_counts_[digit] + full * period_counts_[digit] +
           static_cast<std::uint64_t>(std::count(period_.begin(), period_.begin() + partial, digit));
}

std::uint64_t count_digit(const DigitSeq& x, Digit i, std::uint64_t a, std::uint64_t b) {
    if (a < 1 || a > b) {
        throw range_error("count_digit: need 1 <= a <= b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
    return x.prefix_count(i, b) - x.prefix_count(i, a - 1);
}

std::int64_t walk_value(const DigitSeq& x, std::uint64_t n) {
    return static_cast<std::int64_t>(n) - 3 * static_cast<std::int64_t>(x.prefix_count(1, n));
}

std::int64_t f_weight(const DigitSeq& x, std::uint64_t a, std::uint64_t b) {
    const auto i0 = static_cast<std::int64_t>(count_digit(x, 0, a, b));
    const auto i1 = static_cast<std::int64_t>(count_digit(x, 1, a, b));
    const auto i2 = static_cast<std::int64_t>(count_digit(x, 2, a, b));
    return 3 * i0 - 6 * i1 + 3 * i2;
}

DigitStats digit_stats(const DigitSeq& x, std::uint64_t n) {
    return DigitStats{n, {x.prefix_count(0, n), x.prefix_count(1, n), x.prefix_count(2, n)}};
}

DigitFrequency digit_frequency(const DigitSeq& x) {
    const auto length = static_cast<std::int64_t>(x.period().size());
    const auto counts = tally(x.period());
    return DigitFrequency{ExactRational(static_cast<std::int64_t>(counts[0]), length),
                          ExactRational(static_cast<std::int64_t>(counts[1]), length),
                          ExactRational(static_cast<std::int64_t>(counts[2]), length)};
}

std::vector<Digit> ternary_prefix(double x, std::size_t n) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw domain_error("ternary_prefix: x outside [0,1]");
    }
    if (x == 1.0) {
        return std::vector<Digit>(n, 2);
    }
    // x = m / 2^e exactly; run the long division on integers.
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    const int shift = 53 - exponent;
    mpz_class r(std::ldexp(mantissa, 53));
    mpz_class q = 1;
    if (shift >= 0) {
        mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    std::vector<Digit> out;
    out.reserve(n);
    mpz_class d;
    for (std::size_t k = 0; k < n; ++k) {
        r *= 3;
        mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
        out.push_back(static_cast<Digit>(d.get_ui()));
    }
    return out;
}

}  // namespace okamoto
