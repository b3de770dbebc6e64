#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "okamoto/derivative.hpp"
#include "okamoto/dimension.hpp"
#include "okamoto/experiments.hpp"
#include "okamoto/piecewise.hpp"
#include "okamoto/ternary.hpp"

namespace okamoto::report {

inline constexpr int kSchemaVersion = 1;

using Sample = std::pair<double, double>;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// {"preperiod": [...], "period": [...]}
nlohmann::json to_json(const DigitSeq& x);

/// {schema_version, x, expansion, drift, verdict, walk_prefix}; walk_prefix
/// holds W(1..prefix_length).
nlohmann::json classification(const ExactRational& x, std::size_t prefix_length = 20);

std::string samples_csv(const std::vector<Sample>& samples);
nlohmann::json samples_json(const std::vector<Sample>& samples, const std::string& function_name);

/// SVG 1.1 document, 800x800 viewport, polyline through the samples with
/// x in [0,1] and y in [y_min, y_max] mapped onto the square.
std::string samples_svg(const std::vector<Sample>& samples, double y_min, double y_max, const std::string& title);

/// Breakpoints k/3^n and exact ordinates.
std::string construction_csv(const PiecewiseLinear& f);
nlohmann::json construction_json(const ExactRational& a, const PiecewiseLinear& f);

/// scale,count rows.
std::string box_count_csv(const BoxCountResult& result);
nlohmann::json box_count_json(const ExactRational& a, const BoxCountResult& result);

nlohmann::json walk_json(const WalkExperiment& experiment);
nlohmann::json sigma_fuzz_json(const SigmaFuzzReport& report);
nlohmann::json hata_yamaguti_json(const HataYamagutiReport& report);

}  // namespace okamoto::report
