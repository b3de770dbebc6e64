#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "okamoto/rational.hpp"

namespace okamoto {

using Digit = std::uint8_t;

/// Eventually periodic ternary expansion 0.(preperiod)(period)(period)... of
/// a rational in [0,1].
///
/// Always held in normal form: the canonical expansion (terminating values
/// end in period {0}; only x = 1 ends in period {2}), minimal period, and no
/// preperiod suffix that could be rotated into the period. Digit indices are
/// 1-based, matching epsilon_1, epsilon_2, ...
class DigitSeq {
public:
    /// Canonical expansion of x. Throws domain_error unless 0 <= x <= 1.
    static DigitSeq expand(const ExactRational& x);

    /// Normalizes an arbitrary (preperiod, period) pair, e.g. {1},{2}
    /// becomes {2},{0}. Throws domain_error on an empty period or digits > 2.
    static DigitSeq from_digits(std::span<const Digit> preperiod, std::span<const Digit> period);

    [[nodiscard]] const std::vector<Digit>& preperiod() const noexcept { return preperiod_; }
    [[nodiscard]] const std::vector<Digit>& period() const noexcept { return period_; }
    [[nodiscard]] const ExactRational& value() const noexcept { return value_; }

    /// epsilon_k for k >= 1. Throws range_error for k == 0.
    [[nodiscard]] Digit digit_at(std::uint64_t k) const;

    /// First n digits.
    [[nodiscard]] std::vector<Digit> prefix(std::size_t n) const;

    /// Number of positions j in [1, n] with epsilon_j == digit; n may be 0.
    [[nodiscard]] std::uint64_t prefix_count(Digit digit, std::uint64_t n) const;

    /// True iff the expansion is eventually all zeros (x is a ternary rational).
    [[nodiscard]] bool terminates() const noexcept { return period_.size() == 1 && period_[0] == 0; }

    friend bool operator==(const DigitSeq& lhs, const DigitSeq& rhs) {
        return lhs.preperiod_ == rhs.preperiod_ && lhs.period_ == rhs.period_;
    }

private:
    DigitSeq(std::vector<Digit> preperiod, std::vector<Digit> period, ExactRational value);

    std::vector<Digit> preperiod_;
    std::vector<Digit> period_;
    ExactRational value_;
    std::array<std::uint64_t, 3> preperiod_counts_{};
    std::array<std::uint64_t, 3> period_counts_{};
};

/// Value of 0.(preperiod)(period)... computed directly from the digits.
ExactRational reconstruct(std::span<const Digit> preperiod, std::span<const Digit> period);

inline DigitSeq expand_rational(const ExactRational& x) { return DigitSeq::expand(x); }

inline Digit digit_at(const DigitSeq& x, std::uint64_t k) { return x.digit_at(k); }

/// I_i(a, b) = #{ j : a <= j <= b, epsilon_j = i }. Throws range_error unless 1 <= a <= b.
std::uint64_t count_digit(const DigitSeq& x, Digit i, std::uint64_t a, std::uint64_t b);

/// W(n) = n - 3 I_1(n).
std::int64_t walk_value(const DigitSeq& x, std::uint64_t n);

/// f(a, b) = 3 I_0(a,b) - 6 I_1(a,b) + 3 I_2(a,b). Throws range_error unless 1 <= a <= b.
std::int64_t f_weight(const DigitSeq& x, std::uint64_t a, std::uint64_t b);

struct DigitStats {
    std::uint64_t n = 0;
    std::array<std::uint64_t, 3> counts{};
};

DigitStats digit_stats(const DigitSeq& x, std::uint64_t n);

struct DigitFrequency {
    ExactRational p0;
    ExactRational p1;
    ExactRational p2;
};

/// Limit digit frequencies, read off the period block. Always defined for
/// eventually periodic input.
DigitFrequency digit_frequency(const DigitSeq& x);

/// First n ternary digits of the exact value of a double in [0,1], under
/// the same convention as DigitSeq (x == 1 gives all 2's).
std::vector<Digit> ternary_prefix(double x, std::size_t n);

}  // namespace okamoto
