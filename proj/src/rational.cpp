#include "okamoto/rational.hpp"

#include <cmath>
#include <string>

#include "okamoto/errors.hpp"

namespace okamoto {

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator)
    : ExactRational(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))) {}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) {
        throw domain_error("ExactRational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRational ExactRational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw domain_error("ExactRational::from_double: non-finite input");
    }
    // mpq_set_d is exact for finite doubles.
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return ExactRational(std::move(q));
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
    if (text.empty()) {
        return false;
    }
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    const bool ok = slash == std::string_view::npos
                        ? parse_integer(text, num)
                        : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
    if (!ok) {
        throw parse_error("malformed rational '" + std::string(text) + "', expected p/q");
    }
    if (den == 0) {
        throw parse_error("malformed rational '" + std::string(text) + "': zero denominator");
    }
    return ExactRational(num, den);
}

mpz_class ExactRational::pow3(unsigned long exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, exponent);
    return r;
}

std::string ExactRational::to_string() const { return value_.get_str(10); }

mpz_class ExactRational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

ExactRational ExactRational::fractional_part() const { return *this - ExactRational(floor(), mpz_class(1)); }

long ExactRational::ternary_order() const {
    mpz_class den = value_.get_den();
    long order = 0;
    while (den > 1) {
        if (mpz_divisible_ui_p(den.get_mpz_t(), 3) == 0) {
            return -1;
        }
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 3);
        ++order;
    }
    return order;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.value_ == 0) {
        throw domain_error("ExactRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

}  // namespace okamoto
