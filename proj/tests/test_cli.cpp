#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "tcm/commands.hpp"
#include "tcm/config.hpp"
#include "tcm/output.hpp"

using namespace tcm;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("tcm_test_" + name + "_" + std::to_string(std::random_device{}()));
    fs::remove_all(dir);
    return dir;
}

CsvTable load(const fs::path& file) {
    std::ifstream in(file);
    return read_csv(in);
}

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_ext(const FileList& files, const std::string& ext) {
    std::size_t n = 0;
    for (const auto& f : files) n += f.extension() == ext;
    return n;
}

std::size_t column(const CsvTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.header.size(); ++i)
        if (t.header[i] == name) return i;
    FAIL("missing column " << name);
    return 0;
}

}  // namespace

TEST_CASE("parse_angle") {
    CHECK(parse_angle("pi/8") == doctest::Approx(pi / 8).epsilon(1e-15));
    CHECK(parse_angle("3pi/8") == doctest::Approx(3 * pi / 8).epsilon(1e-15));
    CHECK(parse_angle("3*pi/8") == doctest::Approx(3 * pi / 8).epsilon(1e-15));
    CHECK(parse_angle(" pi ") == doctest::Approx(pi).epsilon(1e-15));
    CHECK(parse_angle("0.25") == 0.25);
    CHECK_THROWS_AS(parse_angle("pie"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("pi/0"), std::invalid_argument);
}

TEST_CASE("parse_config: examples") {
    const auto cfg = parse_config("family = PHI\nalpha = pi/8, pi/4\nepsilon = 0, 2\nT_max = 20\nn_points = 2000\n"
                                  "path = ANALYTIC\n");
    CHECK(cfg.family == Family::Phi);
    REQUIRE(cfg.alpha_list.size() == 2);
    CHECK(cfg.alpha_list[0] == doctest::Approx(pi / 8));
    CHECK(cfg.alpha_labels[0] == "pi/8");
    CHECK_FALSE(cfg.alpha_from_defaults);
    CHECK(cfg.epsilon_list == std::vector<double>{0.0, 2.0});
    CHECK(cfg.paths == std::vector<Path>{Path::Analytic});

    const auto empty = parse_config("# nothing here\n\n");
    CHECK(empty.family == Family::Psi);
    REQUIRE(empty.alpha_list.size() == 1);
    CHECK(empty.alpha_list[0] == doctest::Approx(pi / 4));
    CHECK(empty.epsilon_list == std::vector<double>{0.0});
    CHECK(empty.T_max == 20.0);
    CHECK(empty.n_points == 2000);

    CHECK(parse_config("path = BOTH").paths == std::vector<Path>{Path::Analytic, Path::Oracle});
    CHECK(parse_config("path = PUBLISHED").paths == std::vector<Path>{Path::Published});
    CHECK(parse_config("emit_svg = true\nlambda = 4\nn_max = 3").n_max == 3);

    const auto fig = RunConfig::figure_defaults(Family::Psi);
    const auto overridden = parse_config("epsilon = 1", fig);
    CHECK(overridden.alpha_list.size() == 3);
    CHECK(overridden.alpha_from_defaults);
    CHECK(overridden.epsilon_list == std::vector<double>{1.0});
}

TEST_CASE("parse_config: errors name line and key") {
    auto expect_error = [](const std::string& text, int line, const std::string& key) {
        try {
            parse_config(text);
            FAIL("no error for: " << text);
        } catch (const ConfigError& e) {
            CHECK(e.line() == line);
            CHECK(e.key() == key);
            CHECK(std::string(e.what()).find(key) != std::string::npos);
        }
    };
    expect_error("alpha = 3.0", 1, "alpha");
    expect_error("family = PSI\nalpha = -0.1", 2, "alpha");
    expect_error("\nfamily = CHI", 2, "family");
    expect_error("epsilon = -1", 1, "epsilon");
    expect_error("n_points = 1", 1, "n_points");
    expect_error("T_max = 0", 1, "T_max");
    expect_error("path = SOMETIMES", 1, "path");
    expect_error("colour = blue", 1, "colour");
    expect_error("just words", 1, "just words");
    expect_error("n_max = 1", 1, "n_max");
}

TEST_CASE("fig1 with figure defaults") {
    auto cfg = RunConfig::figure_defaults(Family::Psi);
    cfg.output_dir = scratch_dir("fig1");
    const auto files = cmd_fig1(cfg);
    CHECK(count_ext(files, ".csv") == 6);
    CHECK(count_ext(files, ".svg") == 2);
    for (const auto& f : files) CHECK(fs::exists(f));
    CHECK(slurp(cfg.output_dir / "run_info.txt").find("alpha_source = default") != std::string::npos);

    for (const auto& f : files) {
        if (f.extension() != ".csv") continue;
        const auto t = load(f);
        REQUIRE(t.header == std::vector<std::string>{"T", "C", "signed_C", "x1_abs", "x2_abs", "x3_abs"});
        CHECK(t.rows.size() == 2000);
    }
    const auto t = load(cfg.output_dir / "fig1_analytic_alpha-pi_8_eps-0.csv");
    CHECK(std::stod(t.rows[0][1]) == doctest::Approx(std::sin(pi / 4)).epsilon(1e-9));
    double hi = 0.0, lo = 1.0, signed_lo = 1.0;
    for (const auto& row : t.rows) {
        hi = std::max(hi, std::stod(row[1]));
        lo = std::min(lo, std::stod(row[1]));
        signed_lo = std::min(signed_lo, std::stod(row[2]));
    }
    CHECK(hi == doctest::Approx(0.7071).epsilon(1e-4));
    CHECK(lo <= 1e-2);
    CHECK(signed_lo == doctest::Approx(-0.1464).epsilon(1e-3));

    const auto svg = slurp(cfg.output_dir / "fig1_analytic_eps-0.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t polylines = 0;
    for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
    CHECK(polylines == 3);

    auto phi = cfg;
    phi.family = Family::Phi;
    CHECK_THROWS_AS(cmd_fig1(phi), std::invalid_argument);
    fs::remove_all(cfg.output_dir);
}

TEST_CASE("fig2 intervals and CSV round trip") {
    auto cfg = parse_config("alpha = pi/6, pi/4\nepsilon = 0\npath = PUBLISHED\n",
                            RunConfig::figure_defaults(Family::Phi));
    cfg.output_dir = scratch_dir("fig2");
    cmd_fig2(cfg);
    const auto intervals = load(cfg.output_dir / "intervals.csv");
    REQUIRE(intervals.header ==
            std::vector<std::string>{"path", "alpha", "epsilon", "T_start", "T_end", "length", "refined"});
    REQUIRE(intervals.rows.size() >= 1);
    const auto& first = intervals.rows[0];
    CHECK(first[0] == "PUBLISHED");
    CHECK(std::stod(first[3]) == doctest::Approx(0.8637).epsilon(1e-3));
    CHECK(std::stod(first[4]) == doctest::Approx(2.2779).epsilon(1e-3));
    for (const auto& row : intervals.rows) {
        CHECK(row[0] == "PUBLISHED");
        CHECK(std::stod(row[1]) == doctest::Approx(pi / 6));
    }

    const auto trace = load(cfg.output_dir / "fig2_published_alpha-pi_6_eps-0.csv");
    REQUIRE(trace.header ==
            std::vector<std::string>{"T", "C", "x1_abs", "x2_abs", "x3_abs", "x5_abs", "in_death_window"});
    const auto window_col = column(trace, "in_death_window");
    std::size_t inside = 0;
    for (const auto& row : trace.rows) {
        const double T = std::stod(row[0]);
        const bool flagged = row[window_col] == "1";
        inside += flagged;
        if (T > 0.9 && T < 2.2) CHECK(flagged);
        if (T < 0.8 || (T > 2.4 && T < 3.9)) CHECK_FALSE(flagged);
        for (std::size_t c = 0; c + 1 < row.size(); ++c) CHECK(format_number(std::stod(row[c])) == row[c]);
    }
    CHECK(inside > 0);
    fs::remove_all(cfg.output_dir);
}

TEST_CASE("output is deterministic") {
    auto cfg = parse_config("family = PHI\nalpha = 0.1\nepsilon = 0, 2\nn_points = 500\npath = BOTH\nemit_svg = true");
    const auto a = scratch_dir("det_a"), b = scratch_dir("det_b");
    cfg.output_dir = a;
    const auto files_a = cmd_sweep(cfg);
    cfg.output_dir = b;
    const auto files_b = cmd_sweep(cfg);
    REQUIRE(files_a.size() == files_b.size());
    for (std::size_t i = 0; i < files_a.size(); ++i) {
        if (files_a[i].filename() == "run_info.txt") continue;
        CHECK(slurp(files_a[i]) == slurp(files_b[i]));
    }
    std::size_t analytic = 0, oracle = 0;
    for (const auto& row : load(a / "intervals.csv").rows) {
        analytic += row[0] == "ANALYTIC";
        oracle += row[0] == "ORACLE";
    }
    CHECK(analytic > 0);
    CHECK(analytic == oracle);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("unwritable output directory") {
    const auto blocker = scratch_dir("blocker");
    std::ofstream(blocker) << "file";
    auto cfg = parse_config("n_points = 10");
    cfg.output_dir = blocker / "sub";
    CHECK_THROWS_AS(cmd_sweep(cfg), std::runtime_error);
    fs::remove(blocker);
}

TEST_CASE("format_number") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("verify") {
    std::ostringstream out;
    CHECK(cmd_verify({}, out) == 0);
    const std::string text = out.str();
    std::istringstream lines(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        ++count;
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
        CHECK(line.substr(line.size() - 5) == ",PASS");
    }
    CHECK(count >= 10);
    CHECK(text.find("hermiticity,") != std::string::npos);
    CHECK(text.find("fidelity,") != std::string::npos);

    std::ostringstream faulty;
    VerifyOptions fault;
    fault.inject_hamiltonian_fault = true;
    CHECK(cmd_verify(fault, faulty) != 0);
    CHECK(faulty.str().find("conservation,") != std::string::npos);
    std::istringstream fl(faulty.str());
    while (std::getline(fl, line))
        if (line.rfind("conservation,", 0) == 0) CHECK(line.substr(line.size() - 5) == ",FAIL");
}
