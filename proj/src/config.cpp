#include "tcm/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tcm {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) items.push_back(trim(item));
    return items;
}

bool parse_number(std::string_view text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    const char* begin = t.data();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), out);
    return ec == std::errc{} && ptr == t.data() + t.size() && std::isfinite(out);
}

std::string label_of(double value) {
    std::ostringstream os;
    os.precision(15);
    os << value;
    return os.str();
}

}  // namespace

ConfigError::ConfigError(int line, std::string key, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", key '" + key + "': " + message),
      line_(line),
      key_(std::move(key)) {}

RunConfig::RunConfig()
    : alpha_list{std::numbers::pi / 4}, alpha_labels{"pi/4"}, epsilon_list{0.0}, epsilon_labels{"0"} {}

RunConfig RunConfig::figure_defaults(Family family) {
    RunConfig c;
    c.family = family;
    c.alpha_list = {std::numbers::pi / 12, std::numbers::pi / 8, std::numbers::pi / 4};
    c.alpha_labels = {"pi/12", "pi/8", "pi/4"};
    c.epsilon_list = {0.0, 2.0};
    c.epsilon_labels = {"0", "2"};
    c.emit_svg = true;
    return c;
}

double parse_angle(std::string_view text) {
    std::string t = trim(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    const auto pos = t.find("pi");
    double value = 0.0;
    if (pos == std::string::npos) {
        if (!parse_number(t, value)) throw std::invalid_argument("not a number: '" + t + "'");
        return value;
    }
    std::string factor = trim(t.substr(0, pos));
    if (!factor.empty() && factor.back() == '*') factor = trim(factor.substr(0, factor.size() - 1));
    double multiple = 1.0;
    if (!factor.empty() && !parse_number(factor, multiple))
        throw std::invalid_argument("bad multiple of pi: '" + t + "'");
    const std::string rest = trim(t.substr(pos + 2));
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/' || !parse_number(rest.substr(1), divisor) || divisor == 0.0)
            throw std::invalid_argument("bad pi expression: '" + t + "'");
    }
    return multiple * std::numbers::pi / divisor;
}

RunConfig parse_config(std::string_view text, const RunConfig& base) {
    RunConfig cfg = base;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(line_no, line, "expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        auto fail = [&](const std::string& msg) { throw ConfigError(line_no, key, msg); };
        if (value.empty()) fail("missing value");

        auto number = [&](const std::string& v) {
            double x = 0.0;
            if (!parse_number(v, x)) fail("not a number: '" + v + "'");
            return x;
        };

        if (key == "family") {
            const auto f = family_from_string(value);
            if (!f) fail("expected PSI or PHI");
            cfg.family = *f;
        } else if (key == "alpha") {
            cfg.alpha_list.clear();
            cfg.alpha_labels.clear();
            for (const auto& item : split_list(value)) {
                double a = 0.0;
                try {
                    a = parse_angle(item);
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
                if (!(a >= 0.0 && a <= std::numbers::pi / 2)) fail("value " + item + " out of range [0, pi/2]");
                cfg.alpha_list.push_back(a);
                cfg.alpha_labels.push_back(item);
            }
            cfg.alpha_from_defaults = false;
        } else if (key == "epsilon") {
            cfg.epsilon_list.clear();
            cfg.epsilon_labels.clear();
            for (const auto& item : split_list(value)) {
                const double e = number(item);
                if (e < 0.0) fail("value " + item + " must be non-negative");
                cfg.epsilon_list.push_back(e);
                cfg.epsilon_labels.push_back(item);
            }
        } else if (key == "T_max") {
            cfg.T_max = number(value);
            if (!(cfg.T_max > 0.0)) fail("must be positive");
        } else if (key == "n_points") {
            const double n = number(value);
            if (n < 2 || n != std::floor(n) || n > 1e8) fail("must be an integer >= 2");
            cfg.n_points = static_cast<std::size_t>(n);
        } else if (key == "path") {
            if (value == "BOTH" || value == "both") {
                cfg.paths = {Path::Analytic, Path::Oracle};
            } else {
                const auto p = path_from_string(value);
                if (!p) fail("expected ANALYTIC, ORACLE, BOTH or PUBLISHED");
                cfg.paths = {*p};
            }
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "emit_svg") {
            if (value == "true" || value == "1" || value == "yes") cfg.emit_svg = true;
            else if (value == "false" || value == "0" || value == "no") cfg.emit_svg = false;
            else fail("expected true or false");
        } else if (key == "zero_threshold") {
            cfg.zero_threshold = number(value);
            if (!(cfg.zero_threshold > 0.0)) fail("must be positive");
        } else if (key == "lambda") {
            cfg.lambda = number(value);
        } else if (key == "n_max") {
            const double n = number(value);
            if (n < 2 || n != std::floor(n) || n > 64) fail("must be an integer in [2, 64]");
            cfg.n_max = static_cast<int>(n);
        } else {
            fail("unknown key");
        }
    }
    if (cfg.alpha_list.empty()) throw ConfigError(0, "alpha", "empty list");
    if (cfg.epsilon_list.empty()) throw ConfigError(0, "epsilon", "empty list");
    if (cfg.epsilon_labels.size() != cfg.epsilon_list.size()) {
        cfg.epsilon_labels.clear();
        for (double e : cfg.epsilon_list) cfg.epsilon_labels.push_back(label_of(e));
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& file, const RunConfig& base) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read config file " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), base);
}

}  // namespace tcm
