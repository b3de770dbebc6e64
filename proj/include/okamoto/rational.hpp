#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace okamoto {

/// Arbitrary-precision rational in lowest terms with a positive denominator.
///
/// This is the exact oracle type for every value the library can compute
/// without rounding: ternary rationals, ordinates of the f_n approximants,
/// exact values of K at k/3^m and the secant slopes built from them.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    ExactRational(std::int64_t numerator, std::int64_t denominator);
    ExactRational(const mpz_class& numerator, const mpz_class& denominator);
    explicit ExactRational(mpq_class value);

    /// Exact value of a finite double (every finite double is a dyadic rational).
    static ExactRational from_double(double value);

    /// Parses "p/q" or "p". Throws parse_error on malformed input or q == 0.
    static ExactRational parse(std::string_view text);

    /// 3^exponent as an integer.
    static mpz_class pow3(unsigned long exponent);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }

    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    /// floor(x) as an integer.
    [[nodiscard]] mpz_class floor() const;
    /// x - floor(x), in [0, 1).
    [[nodiscard]] ExactRational fractional_part() const;

    /// If the denominator is 3^m, returns m; otherwise -1.
    [[nodiscard]] long ternary_order() const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    friend ExactRational operator-(const ExactRational& x) { return ExactRational(mpq_class(-x.value_)); }

    friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

}  // namespace okamoto
