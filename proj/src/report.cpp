#include "okamoto/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "okamoto/functions.hpp"

namespace okamoto::report {

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";  // also folds -0
    }
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

nlohmann::json to_json(const DigitSeq& x) {
    nlohmann::json out;
    out["preperiod"] = nlohmann::json::array();
    out["period"] = nlohmann::json::array();
    for (Digit d : x.preperiod()) {
        out["preperiod"].push_back(d);
    }
    for (Digit d : x.period()) {
        out["period"].push_back(d);
    }
    return out;
}

nlohmann::json classification(const ExactRational& x, std::size_t prefix_length) {
    const DigitSeq digits = DigitSeq::expand(x);
    const WalkTrace trace = walk_trace(digits, prefix_length);
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["x"] = x.to_string();
    out["expansion"] = to_json(digits);
    out["drift"] = trace.period_drift;
    out["verdict"] = std::string(to_string(classify_point(digits)));
    out["walk_prefix"] = trace.values;
    return out;
}

std::string samples_csv(const std::vector<Sample>& samples) {
    std::string out = "x,value\n";
    for (const auto& [x, y] : samples) {
        out += format_double(x);
        out += ',';
        out += format_double(y);
        out += '\n';
    }
    return out;
}

nlohmann::json samples_json(const std::vector<Sample>& samples, const std::string& function_name) {
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["function"] = function_name;
    out["samples"] = nlohmann::json::array();
    for (const auto& [x, y] : samples) {
        out["samples"].push_back({x, y});
    }
    return out;
}

std::string samples_svg(const std::vector<Sample>& samples, double y_min, double y_max, const std::string& title) {
    constexpr double size = 800.0;
    const auto map_x = [](double x) { return x * size; };
    const auto map_y = [&](double y) { return size - (y - y_min) / (y_max - y_min) * size; };
    char buffer[128];
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\" stroke=\"black\"/>\n";
    if (y_min < 0.0 && y_max > 0.0) {
        std::snprintf(buffer, sizeof(buffer), "%.3f", map_y(0.0));
        svg << "<line x1=\"0\" y1=\"" << buffer << "\" x2=\"800\" y2=\"" << buffer
            << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::snprintf(buffer, sizeof(buffer), "%s%.3f,%.3f", i == 0 ? "" : " ", map_x(samples[i].first),
                      map_y(samples[i].second));
        svg << buffer;
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

std::string construction_csv(const PiecewiseLinear& f) {
    std::string out = "x,value\n";
    for (std::size_t k = 0; k < f.ordinates().size(); ++k) {
        out += f.breakpoint(k).to_string();
        out += ',';
        out += f.at(k).to_string();
        out += '\n';
    }
    return out;
}

nlohmann::json construction_json(const ExactRational& a, const PiecewiseLinear& f) {
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["a"] = a.to_string();
    out["level"] = f.level();
    out["breakpoints"] = nlohmann::json::array();
    out["ordinates"] = nlohmann::json::array();
    for (std::size_t k = 0; k < f.ordinates().size(); ++k) {
        out["breakpoints"].push_back(f.breakpoint(k).to_string());
        out["ordinates"].push_back(f.at(k).to_string());
    }
    return out;
}

std::string box_count_csv(const BoxCountResult& result) {
    std::string out = "scale,count\n";
    for (std::size_t i = 0; i < result.counts.size(); ++i) {
        out += format_double(result.scales[i]);
        out += ',';
        out += std::to_string(result.counts[i]);
        out += '\n';
    }
    return out;
}

nlohmann::json box_count_json(const ExactRational& a, const BoxCountResult& result) {
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["experiment"] = "box-dim";
    out["a"] = a.to_string();
    out["levels"] = result.levels;
    out["scales"] = result.scales;
    out["counts"] = result.counts;
    out["fit_first_level"] = result.fit_first_level;
    out["fitted_dimension"] = result.fitted_dimension;
    out["residual"] = result.residual;
    out["formula_dimension"] = box_dimension_formula(a.to_double());
    return out;
}

nlohmann::json walk_json(const WalkExperiment& experiment) {
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["experiment"] = "walk-mc";
    out["sample_count"] = experiment.sample_count;
    out["horizon"] = experiment.horizon;
    out["seed"] = experiment.seed;
    out["crossings"] = experiment.crossings;
    out["crossing_fraction"] = experiment.crossing_fraction;
    out["total_displacement"] = experiment.total_displacement;
    out["mean_step_estimate"] = experiment.mean_step_estimate;
    return out;
}

nlohmann::json sigma_fuzz_json(const SigmaFuzzReport& report) {
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["experiment"] = "sigma-fuzz";
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["violations"] = report.violations;
    out["violations_by_invariant"] = report.violations_by_invariant;
    out["case_counts"] = {{std::string(to_string(SigmaCase::Separated)), report.case_counts[0]},
                          {std::string(to_string(SigmaCase::OneBelow)), report.case_counts[1]},
                          {std::string(to_string(SigmaCase::AtThreshold)), report.case_counts[2]}};
    out["sigma2_min"] = report.sigma2_min;
    out["sigma2_max"] = report.sigma2_max;
    out["sigma4_abs_max"] = report.sigma4_abs_max;
    out["lower_margin_min"] = report.lower_margin_min;
    out["upper_margin_min"] = report.upper_margin_min;
    return out;
}

nlohmann::json hata_yamaguti_json(const HataYamagutiReport& report) {
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["experiment"] = "hata-yamaguti";
    out["grid_points"] = report.grid_points;
    out["step"] = report.step;
    out["max_error"] = report.max_error;
    out["worst_x"] = report.worst_x;
    return out;
}

}  // namespace okamoto::report
