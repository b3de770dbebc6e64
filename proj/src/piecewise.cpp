#include "okamoto/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "okamoto/errors.hpp"

namespace okamoto {

PiecewiseLinear::PiecewiseLinear(std::size_t level, std::vector<ExactRational> ordinates)
    : level_(level), ordinates_(std::move(ordinates)) {
    std::size_t expected = 1;
    for (std::size_t i = 0; i < level_; ++i) {
        expected *= 3;
    }
    if (ordinates_.size() != expected + 1) {
        throw domain_error("PiecewiseLinear: level " + std::to_string(level_) + " needs " +
                           std::to_string(expected + 1) + " ordinates");
    }
    rounded_.reserve(ordinates_.size());
    for (const auto& y : ordinates_) {
        rounded_.push_back(y.to_double());
    }
}

ExactRational PiecewiseLinear::breakpoint(std::size_t k) const {
    return ExactRational(mpz_class(static_cast<unsigned long>(k)), ExactRational::pow3(level_));
}

ExactRational PiecewiseLinear::evaluate(const ExactRational& x) const {
    if (x.sign() < 0 || x > ExactRational(1)) {
        throw domain_error("PiecewiseLinear::evaluate: x outside [0,1]");
    }
    const ExactRational scaled = x * ExactRational(ExactRational::pow3(level_), mpz_class(1));
    const auto k = std::min<std::size_t>(scaled.floor().get_ui(), intervals() - 1);
    const ExactRational t = scaled - ExactRational(static_cast<std::int64_t>(k));
    return ordinates_[k] + t * (ordinates_[k + 1] - ordinates_[k]);
}

double PiecewiseLinear::operator()(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw domain_error("PiecewiseLinear: x outside [0,1]");
    }
    const double scaled = x * static_cast<double>(intervals());
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(scaled), intervals() - 1);
    const double t = scaled - static_cast<double>(k);
    return rounded_[k] + t * (rounded_[k + 1] - rounded_[k]);
}

PiecewiseLinear okamoto_iterative(const ExactRational& a, std::size_t level, std::size_t max_ordinates) {
    if (a.sign() <= 0 || a >= ExactRational(1)) {
        throw domain_error("okamoto_iterative: a = " + a.to_string() + " is outside (0,1)");
    }
    std::size_t intervals = 1;
    for (std::size_t i = 0; i < level; ++i) {
        if (intervals > (max_ordinates - 1) / 3) {
            throw resource_error("okamoto_iterative: level " + std::to_string(level) + " exceeds cap of " +
                                 std::to_string(max_ordinates) + " ordinates");
        }
        intervals *= 3;
    }

    const ExactRational complement = ExactRational(1) - a;
    std::vector<ExactRational> current{ExactRational(0), ExactRational(1)};
    for (std::size_t n = 0; n < level; ++n) {
        std::vector<ExactRational> next;
        next.reserve(3 * (current.size() - 1) + 1);
        for (std::size_t k = 0; k + 1 < current.size(); ++k) {
            const ExactRational rise = current[k + 1] - current[k];
            next.push_back(current[k]);
            next.push_back(current[k] + a * rise);
            next.push_back(current[k] + complement * rise);
        }
        next.push_back(current.back());
        current = std::move(next);
    }
    return PiecewiseLinear(level, std::move(current));
}

}  // namespace okamoto
