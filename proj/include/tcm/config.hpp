#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcm/analysis.hpp"
#include "tcm/model.hpp"

namespace tcm {

class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, std::string key, const std::string& message);

    int line() const { return line_; }
    const std::string& key() const { return key_; }

private:
    int line_;
    std::string key_;
};

struct RunConfig {
    Family family = Family::Psi;
    std::vector<double> alpha_list;
    std::vector<std::string> alpha_labels;  // as written, e.g. "pi/8"
    bool alpha_from_defaults = true;
    std::vector<double> epsilon_list;
    std::vector<std::string> epsilon_labels;
    double T_max = 20.0;
    std::size_t n_points = 2000;
    std::vector<Path> paths{Path::Analytic};  // BOTH expands to {Analytic, Oracle}
    std::filesystem::path output_dir = ".";
    bool emit_svg = false;
    double zero_threshold = kDefaultZeroThreshold;
    double lambda = kDefaultLambda;
    int n_max = ModelParams::kDefaultNMax;

    RunConfig();

    // Defaults used by the figure commands: alpha in {pi/12, pi/8, pi/4},
    // eps in {0, 2}, SVG output on.
    static RunConfig figure_defaults(Family family);
};

// Parses an angle: a decimal number or a multiple of pi such as "pi", "pi/8",
// "3pi/8" or "3*pi/8". Throws std::invalid_argument on malformed input.
double parse_angle(std::string_view text);

// Line-oriented `key = value` text with `#` comments and comma-separated lists.
// Keys: family, alpha, epsilon, T_max, n_points, path, output_dir, emit_svg,
// zero_threshold, lambda, n_max. Keys absent from the text keep their value in
// `base`. Throws ConfigError naming the line and key.
RunConfig parse_config(std::string_view text, const RunConfig& base = RunConfig{});

RunConfig load_config(const std::filesystem::path& file, const RunConfig& base = RunConfig{});

}  // namespace tcm
