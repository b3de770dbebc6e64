// okamoto: evaluate the Okamoto family and K, classify points of infinite
// derivative, and run the dimension / measure experiments.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 resource cap.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "okamoto/derivative.hpp"
#include "okamoto/dimension.hpp"
#include "okamoto/errors.hpp"
#include "okamoto/experiments.hpp"
#include "okamoto/functions.hpp"
#include "okamoto/piecewise.hpp"
#include "okamoto/report.hpp"

namespace {

using namespace okamoto;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string function = "K";
    std::string a_text = "1/3";
    std::optional<std::size_t> truncation;
    std::size_t samples = 1001;
    std::string format = "csv";
    std::uint64_t seed = 1;
    std::string out;
    // construct
    std::size_t level = 2;
    // classify
    std::string x_text;
    // experiments
    std::string experiment;
    std::size_t levels = 8;
    std::size_t fit_from = 3;
    std::uint64_t horizon = 10000;
    std::uint64_t trials = 10000;
    unsigned max_order = 16;
    unsigned workers = 1;
    std::uint64_t grid = 100;
    double step = 1e-6;
};

std::filesystem::path resolve_output(const std::string& out) {
    std::filesystem::path path(out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("OKAMOTO_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    return path;
}

// Content is fully built before anything is opened, so a failing command
// never leaves a partial file behind.
void emit(const RunConfig& config, const std::string& content) {
    if (config.out.empty() || config.out == "-") {
        std::cout << content;
        return;
    }
    const auto path = resolve_output(config.out);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw UsageError("cannot open output file '" + path.string() + "'");
    }
    file << content;
    if (!file.flush()) {
        throw UsageError("failed writing output file '" + path.string() + "'");
    }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (format == f) {
            return;
        }
    }
    throw UsageError("unsupported --format '" + format + "' for this command");
}

double parse_real(const std::string& text) {
    // Accepts decimals ("0.25") and rationals ("1/3").
    if (text.find('/') != std::string::npos) {
        return ExactRational::parse(text).to_double();
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw parse_error("malformed number '" + text + "'");
    }
    if (used != text.size()) {
        throw parse_error("malformed number '" + text + "'");
    }
    return value;
}

std::vector<report::Sample> sample_grid(std::size_t count, const std::function<double(double)>& f) {
    std::vector<report::Sample> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        samples.emplace_back(x, f(x));
    }
    return samples;
}

std::string cmd_eval(const RunConfig& config) {
    require_format(config.format, {"csv", "json", "svg"});
    if (config.samples < 1) {
        throw UsageError("--samples must be >= 1");
    }
    std::function<double(double)> f;
    double y_min = 0.0;
    double y_max = 1.0;
    std::string title;
    if (config.function == "takagi") {
        const auto trunc = SeriesTruncation::takagi(config.truncation.value_or(50));
        f = [trunc](double x) { return takagi(x, trunc); };
        title = "Takagi function T";
    } else if (config.function == "lebesgue") {
        const double a = parse_real(config.a_text);
        if (!(a > 0.0 && a < 1.0)) {
            throw domain_error("--a must lie in (0,1)");
        }
        const std::size_t depth = config.truncation.value_or(50);
        f = [a, depth](double x) { return lebesgue_L(a, x, depth); };
        title = "Lebesgue singular function L_a, a = " + config.a_text;
    } else if (config.function == "okamoto") {
        const OkamotoParams params(parse_real(config.a_text));
        const std::size_t depth = config.truncation.value_or(okamoto_fe_depth_for_tolerance(params, 1e-12));
        f = [params, depth](double x) { return okamoto_fe(params, x, depth); };
        title = "Okamoto function F_a, a = " + config.a_text;
    } else if (config.function == "K") {
        const auto trunc = SeriesTruncation::k_phi(config.truncation.value_or(40));
        f = [trunc](double x) { return k_series_phi(x, trunc); };
        y_min = -1.5;
        y_max = 1.5;
        title = "K = dF_a/da at a = 1/3";
    } else if (config.function == "Kn") {
        const std::size_t n = config.truncation.value_or(5);
        f = [n](double x) { return k_partial(x, n); };
        y_min = -1.5;
        y_max = 1.5;
        title = "partial sum K_" + std::to_string(n);
    } else {
        throw UsageError("unknown --fn '" + config.function + "' (takagi | lebesgue | okamoto | K | Kn)");
    }
    const auto samples = sample_grid(config.samples, f);
    if (config.format == "csv") {
        return report::samples_csv(samples);
    }
    if (config.format == "json") {
        return report::samples_json(samples, config.function).dump(2) + "\n";
    }
    return report::samples_svg(samples, y_min, y_max, title);
}

std::string cmd_construct(const RunConfig& config) {
    require_format(config.format, {"csv", "json", "svg"});
    const ExactRational a = ExactRational::parse(config.a_text);
    const PiecewiseLinear f = okamoto_iterative(a, config.level);
    if (config.format == "csv") {
        return report::construction_csv(f);
    }
    if (config.format == "json") {
        return report::construction_json(a, f).dump(2) + "\n";
    }
    std::vector<report::Sample> vertices;
    vertices.reserve(f.ordinates().size());
    for (std::size_t k = 0; k < f.ordinates().size(); ++k) {
        vertices.emplace_back(f.breakpoint(k).to_double(), f.at(k).to_double());
    }
    return report::samples_svg(vertices, 0.0, 1.0,
                               "f_" + std::to_string(config.level) + " for a = " + a.to_string());
}

std::string cmd_classify(const RunConfig& config) {
    if (config.x_text.empty()) {
        throw UsageError("classify needs a rational x as p/q");
    }
    return report::classification(ExactRational::parse(config.x_text)).dump(2) + "\n";
}

std::string cmd_experiment(const RunConfig& config) {
    const std::string& name = config.experiment;
    if (name == "box-dim") {
        require_format(config.format, {"json", "csv"});
        const ExactRational a = ExactRational::parse(config.a_text);
        const auto result = box_dimension_estimate(a, config.levels, config.fit_from);
        return config.format == "csv" ? report::box_count_csv(result) : report::box_count_json(a, result).dump(2) + "\n";
    }
    require_format(config.format, {"json"});
    if (name == "walk-mc") {
        return report::walk_json(walk_monte_carlo(config.samples, config.horizon, config.seed, config.workers)).dump(2) +
               "\n";
    }
    if (name == "sigma-fuzz") {
        return report::sigma_fuzz_json(sigma_fuzz(config.trials, config.seed, config.max_order)).dump(2) + "\n";
    }
    if (name == "hata-yamaguti") {
        return report::hata_yamaguti_json(hata_yamaguti_scan(config.grid, config.step)).dump(2) + "\n";
    }
    throw UsageError("unknown experiment '" + name + "' (box-dim | walk-mc | sigma-fuzz | hata-yamaguti)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Okamoto family, K = dF_a/da at a = 1/3, and its infinite-derivative set"};
    app.require_subcommand(1);
    RunConfig config;

    auto* eval = app.add_subcommand("eval", "Sample a function on a uniform grid of [0,1]");
    eval->add_option("--fn", config.function, "takagi | lebesgue | okamoto | K | Kn")->required();
    eval->add_option("--a", config.a_text, "Parameter a (decimal or p/q)");
    eval->add_option("--N", config.truncation, "Series terms / recursion depth (Kn: partial sum index)");
    eval->add_option("--samples", config.samples, "Number of grid points");
    eval->add_option("--format", config.format, "csv | json | svg");
    eval->add_option("--out", config.out, "Output file (default stdout)");

    auto* construct = app.add_subcommand("construct", "Exact ordinates of the level-n approximant f_n");
    construct->add_option("--a", config.a_text, "Rational parameter p/q")->required();
    construct->add_option("--level", config.level, "Subdivision level n");
    construct->add_option("--format", config.format, "csv | json | svg");
    construct->add_option("--out", config.out, "Output file (default stdout)");

    auto* classify = app.add_subcommand("classify", "Infinite-derivative verdict for a rational x");
    classify->add_option("x,--x", config.x_text, "Rational x = p/q in [0,1]");
    classify->add_option("--out", config.out, "Output file (default stdout)");

    auto* experiment = app.add_subcommand("experiment", "Run an experiment and write a JSON report");
    experiment->add_option("name", config.experiment, "box-dim | walk-mc | sigma-fuzz | hata-yamaguti")->required();
    experiment->add_option("--a", config.a_text, "box-dim: rational parameter p/q");
    experiment->add_option("--levels", config.levels, "box-dim: finest level m");
    experiment->add_option("--fit-from", config.fit_from, "box-dim: first level in the fit");
    experiment->add_option("--samples", config.samples, "walk-mc: number of paths");
    experiment->add_option("--horizon", config.horizon, "walk-mc: steps per path");
    experiment->add_option("--workers", config.workers, "walk-mc: worker threads");
    experiment->add_option("--trials", config.trials, "sigma-fuzz: random pairs");
    experiment->add_option("--max-order", config.max_order, "sigma-fuzz: largest ternary order of x, h");
    experiment->add_option("--seed", config.seed, "walk-mc, sigma-fuzz: RNG seed");
    experiment->add_option("--grid", config.grid, "hata-yamaguti: grid points");
    experiment->add_option("--step", config.step, "hata-yamaguti: finite-difference step");
    experiment->add_option("--format", config.format, "json (box-dim also csv)");
    experiment->add_option("--out", config.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    // Per-command defaults that differ from eval's.
    if (experiment->parsed()) {
        if (experiment->count("--format") == 0) {
            config.format = "json";
        }
        if (experiment->count("--a") == 0) {
            config.a_text = "2/3";
        }
        if (experiment->count("--samples") == 0) {
            config.samples = 10000;
        }
    }

    try {
        std::string content;
        if (eval->parsed()) {
            content = cmd_eval(config);
        } else if (construct->parsed()) {
            content = cmd_construct(config);
        } else if (classify->parsed()) {
            content = cmd_classify(config);
        } else {
            content = cmd_experiment(config);
        }
        emit(config, content);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::logic_error& e) {
        // domain_error, range_error, contraction_error
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
