#pragma once

#include <cstddef>
#include <vector>

#include "okamoto/rational.hpp"

namespace okamoto {

/// Level-n approximant f_n of F_a: linear on each [k/3^n, (k+1)/3^n], with
/// exact rational ordinates y_k = f_n(k/3^n), k = 0..3^n.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::size_t level, std::vector<ExactRational> ordinates);

    [[nodiscard]] std::size_t level() const noexcept { return level_; }
    [[nodiscard]] std::size_t intervals() const noexcept { return ordinates_.size() - 1; }
    [[nodiscard]] const std::vector<ExactRational>& ordinates() const noexcept { return ordinates_; }
    [[nodiscard]] const ExactRational& at(std::size_t k) const { return ordinates_.at(k); }

    /// Breakpoint k / 3^level.
    [[nodiscard]] ExactRational breakpoint(std::size_t k) const;

    /// Exact value at a rational x in [0,1].
    [[nodiscard]] ExactRational evaluate(const ExactRational& x) const;
    /// Interpolated value at a double x in [0,1].
    [[nodiscard]] double operator()(double x) const;

private:
    std::size_t level_;
    std::vector<ExactRational> ordinates_;
    std::vector<double> rounded_;
};

/// Default cap on 3^n + 1 ordinates (level 14).
inline constexpr std::size_t kDefaultMaxOrdinates = 4782970;

/// Builds f_n by the ternary subdivision rule starting from f_0(x) = x.
/// Throws domain_error unless 0 < a < 1, resource_error if 3^n + 1 > max_ordinates.
PiecewiseLinear okamoto_iterative(const ExactRational& a, std::size_t level,
                                  std::size_t max_ordinates = kDefaultMaxOrdinates);

}  // namespace okamoto
