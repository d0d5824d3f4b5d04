#include "tcm/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "tcm/entanglement.hpp"
#include "tcm/hamiltonian.hpp"
#include "tcm/output.hpp"
#include "tcm/propagator.hpp"

namespace tcm {

namespace {

std::string file_label(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '/') out += '_';
        else if (c == '*' || c == ' ') continue;
        else out += c;
    }
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::ofstream open_output(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    return out;
}

void prepare_output_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw std::runtime_error("output directory is not writable: " + dir.string());
}

FileList run_curves(const RunConfig& config, const std::string& prefix) {
    prepare_output_dir(config.output_dir);
    const auto grid = uniform_grid(config.T_max, config.n_points);
    FileList files;
    std::vector<IntervalRecord> intervals;

    for (const Path path : config.paths) {
        for (std::size_t e = 0; e < config.epsilon_list.size(); ++e) {
            const ModelParams params = ModelParams::dimensionless(config.epsilon_list[e], config.lambda, config.n_max);
            std::vector<SvgSeries> series;
            for (std::size_t a = 0; a < config.alpha_list.size(); ++a) {
                const InitialStateSpec spec{config.family, config.alpha_list[a]};
                const ConcurrenceTrace trace = concurrence_trace(spec, params, grid, path);
                std::vector<DeathInterval> windows;
                if (config.family == Family::Phi) {
                    windows = detect_death_intervals(trace, config.zero_threshold);
                    for (const auto& w : windows)
                        intervals.push_back({path, config.alpha_list[a], config.epsilon_list[e], w});
                }
                const auto file = config.output_dir / (prefix + "_" + lower(to_string(path)) + "_alpha-" +
                                                       file_label(config.alpha_labels[a]) + "_eps-" +
                                                       file_label(config.epsilon_labels[e]) + ".csv");
                auto out = open_output(file);
                write_trace_csv(out, trace, windows);
                files.push_back(file);
                series.push_back({"alpha = " + config.alpha_labels[a], trace.T, trace.C});
            }
            if (config.emit_svg) {
                const auto file = config.output_dir / (prefix + "_" + lower(to_string(path)) + "_eps-" +
                                                       file_label(config.epsilon_labels[e]) + ".svg");
                auto out = open_output(file);
                write_svg_chart(out,
                                to_string(config.family) + " family, eps = " + config.epsilon_labels[e] + " (" +
                                    lower(to_string(path)) + ")",
                                "T = g t", "C", series);
                files.push_back(file);
            }
        }
    }

    if (config.family == Family::Phi) {
        const auto file = config.output_dir / "intervals.csv";
        auto out = open_output(file);
        write_intervals_csv(out, intervals);
        files.push_back(file);
    }

    const auto info = config.output_dir / "run_info.txt";
    auto out = open_output(info);
    out << "command = " << prefix << "\nfamily = " << to_string(config.family) << "\npath = ";
    for (std::size_t i = 0; i < config.paths.size(); ++i) out << (i ? "," : "") << to_string(config.paths[i]);
    out << "\nalpha = ";
    for (std::size_t i = 0; i < config.alpha_labels.size(); ++i) out << (i ? "," : "") << config.alpha_labels[i];
    out << "\nalpha_source = " << (config.alpha_from_defaults ? "default" : "config");
    out << "\nepsilon = ";
    for (std::size_t i = 0; i < config.epsilon_labels.size(); ++i) out << (i ? "," : "") << config.epsilon_labels[i];
    out << "\nT_max = " << format_number(config.T_max) << "\nn_points = " << config.n_points
        << "\nlambda = " << format_number(config.lambda) << "\nn_max = " << config.n_max
        << "\nzero_threshold = " << format_number(config.zero_threshold) << '\n';
    files.push_back(info);
    return files;
}

// ---- verify -----------------------------------------------------------------

struct Suite {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;

    bool pass() const { return residual <= threshold; }
    void record(double r) { residual = std::max(residual, r); }
};

std::array<std::array<Complex, 2>, 2> random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double theta = std::acos(std::sqrt(unit(rng)));
    const double a = angle(rng), b = angle(rng), c = angle(rng);
    const Complex u00 = std::polar(std::cos(theta), a), u01 = std::polar(std::sin(theta), b);
    const Complex phase = std::polar(1.0, c);
    return {{{u00, u01}, {-phase * std::conj(u01), phase * std::conj(u00)}}};
}

AtomDensityMatrix local_rotate(const AtomDensityMatrix& rho, const std::array<std::array<Complex, 2>, 2>& ua,
                               const std::array<std::array<Complex, 2>, 2>& ub) {
    SquareMatrix u(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) u(i, j) = ua[i / 2][j / 2] * ub[i % 2][j % 2];
    const SquareMatrix r = u * rho.as_matrix() * u.adjoint();
    AtomDensityMatrix out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = r(i, j);
    return out;
}

}  // namespace

FileList cmd_fig1(const RunConfig& config) {
    if (config.family != Family::Psi) throw std::invalid_argument("fig1 requires family PSI");
    return run_curves(config, "fig1");
}

FileList cmd_fig2(const RunConfig& config) {
    if (config.family != Family::Phi) throw std::invalid_argument("fig2 requires family PHI");
    return run_curves(config, "fig2");
}

FileList cmd_sweep(const RunConfig& config) {
    return run_curves(config, config.family == Family::Psi ? "psi" : "phi");
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
    std::vector<double> alphas = standard_alpha_grid();
    std::vector<double> epsilons = standard_epsilon_grid();
    std::vector<double> times = standard_time_grid();
    double lambda = kDefaultLambda;
    int n_max = ModelParams::kDefaultNMax;
    if (options.config) {
        alphas = options.config->alpha_list;
        epsilons = options.config->epsilon_list;
        times = uniform_grid(options.config->T_max, options.config->n_points);
        lambda = options.config->lambda;
        n_max = options.config->n_max;
    }

    Suite hermiticity{"hermiticity", 0, 0};
    Suite conservation{"conservation", 0, 0};
    Suite sector{"sector_spectrum", 0, 1e-10};
    Suite unitarity{"unitarity", 0, 1e-12};
    Suite energy{"energy_conservation", 0, 1e-10};
    Suite fidelity{"fidelity", 0, 1e-9};
    Suite paths{"concurrence_paths", 0, 1e-9};
    Suite initial{"initial_concurrence", 0, 1e-9};
    Suite density{"density_matrix", 0, 1e-12};
    Suite psd{"psd", 0, 1e-10};
    Suite routes{"route_agreement", 0, 1e-10};
    Suite local{"local_unitary", 0, 1e-10};
    Suite published_fidelity{"published_fidelity", 0, 1e-9};

    for (int n : {2, 3, 4}) {
        const Basis basis(n);
        for (double eps : epsilons) {
            HermitianMatrix H = build_hamiltonian(ModelParams::dimensionless(eps, lambda, n), basis);
            if (options.inject_hamiltonian_fault) {
                const auto i = basis.index_of("eg00"), j = basis.index_of("ee00");
                H(i, j) += 1e-3;
                H(j, i) += 1e-3;
            }
            hermiticity.record(hermiticity_defect(H));
            for (std::size_t i = 0; i < H.dim(); ++i)
                for (std::size_t j = 0; j < H.dim(); ++j)
                    if (excitation_number(basis.state(i)) != excitation_number(basis.state(j)))
                        conservation.record(std::abs(H(i, j)));
        }
    }

    std::mt19937_64 rng(20240917);
    std::vector<std::array<std::array<std::array<Complex, 2>, 2>, 2>> unitaries;
    for (int k = 0; k < 20; ++k) unitaries.push_back({random_unitary(rng), random_unitary(rng)});

    const Basis basis(n_max);
    for (double eps : epsilons) {
        const ModelParams params = ModelParams::dimensionless(eps, lambda, n_max);
        const HermitianMatrix H = build_hamiltonian(params, basis).scaled(1.0 / params.g());
        const SpectralDecomposition decomp = spectral_decompose(H);

        const auto block = restrict_to_sector(H, basis, 2, 0);
        const auto spectrum = spectral_decompose(block.matrix).eigenvalues;
        const double kappa = std::sqrt(8.0 + eps * eps);
        std::vector<double> expected{-eps, 0.5 * (eps + kappa), 0.5 * (eps - kappa)};
        std::sort(expected.begin(), expected.end());
        for (std::size_t k = 0; k < 3; ++k) sector.record(std::abs(spectrum[k] - expected[k]));

        for (const Family family : {Family::Psi, Family::Phi}) {
            for (double alpha : alphas) {
                const StateVector psi0 = initial_state({family, alpha}, basis);
                const double e0 = expectation(H, psi0);
                const auto states = evolve_grid(psi0, decomp, times);
                for (std::size_t t = 0; t < times.size(); ++t) {
                    const StateVector& oracle = states[t];
                    const auto coefs = coefficients(family, ClosedForm::Exact, alpha, eps, lambda, times[t]);
                    const StateVector analytic = assemble_state(coefs, basis);
                    unitarity.record(std::abs(norm(oracle) - 1.0));
                    energy.record(std::abs(expectation(H, oracle) - e0) / H.max_abs());
                    fidelity.record(1.0 - std::abs(inner_product(analytic, oracle)));
                    if (options.include_published) {
                        const auto pub = coefficients(family, ClosedForm::Published, alpha, eps, lambda, times[t]);
                        published_fidelity.record(1.0 - std::abs(inner_product(assemble_state(pub, basis), oracle)));
                    }

                    const AtomDensityMatrix rho_o = reduce_to_atoms(oracle, basis);
                    const AtomDensityMatrix rho_a = reduce_to_atoms(analytic, basis);
                    const double c_oracle = concurrence(rho_o);
                    const double c_analytic = concurrence(rho_a);
                    paths.record(std::abs(c_oracle - c_analytic));
                    if (t == 0) initial.record(std::abs(c_analytic - std::sin(2.0 * alpha)));

                    density.record(std::max(hermiticity_defect(rho_o.as_matrix()), std::abs(rho_o.trace() - 1.0)));
                    psd.record(std::max(0.0, -spectral_decompose(rho_o.as_matrix()).eigenvalues.front()));
                    routes.record(std::abs(wootters_concurrence(rho_o) - xstate_concurrence(rho_o)));
                    routes.record(std::abs(wootters_concurrence(rho_a) - xstate_concurrence(rho_a)));
                    if (t % 40 == 7) {
                        for (const auto& [ua, ub] : unitaries)
                            local.record(std::abs(wootters_concurrence(local_rotate(rho_o, ua, ub)) - c_oracle));
                    }
                }
            }
        }
    }

    std::vector<Suite> suites{hermiticity, conservation, sector, unitarity, energy, fidelity, paths,
                              initial,     density,      psd,    routes,    local};
    if (options.include_published) suites.push_back(published_fidelity);

    bool all = true;
    char buf[64], tbuf[32];
    for (const auto& s : suites) {
        std::snprintf(buf, sizeof(buf), "%.3e", s.residual);
        std::snprintf(tbuf, sizeof(tbuf), "%g", s.threshold);
        std::string threshold = tbuf;
        if (const auto e = threshold.find("e-0"); e != std::string::npos) threshold.erase(e + 2, 1);
        out << s.name << ',' << buf << ',' << threshold << ',' << (s.pass() ? "PASS" : "FAIL") << '\n';
        all = all && s.pass();
    }
    return all ? 0 : 1;
}

}  // namespace tcm
