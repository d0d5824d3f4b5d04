#include "tcm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>

#include "tcm/entanglement.hpp"
#include "tcm/propagator.hpp"

namespace tcm {

namespace {

constexpr double kBisectionTolerance = 1e-10;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

struct TraceContext {
    InitialStateSpec spec;
    double epsilon;
    double lambda;
    Path path;
    Basis basis;
    StateVector psi0;
    SpectralDecomposition decomp;  // oracle path only
};

TraceContext make_context(const InitialStateSpec& spec, const ModelParams& params,
                          const std::vector<double>& T_grid, Path path) {
    check_alpha(spec.alpha);
    for (std::size_t i = 1; i < T_grid.size(); ++i)
        if (!(T_grid[i] > T_grid[i - 1]))
            throw std::invalid_argument("concurrence_trace: time grid must be strictly ascending");

    TraceContext ctx{spec, params.epsilon(), params.lambda(), path, Basis(params.n_max()), {}, {}};
    if (path == Path::Oracle) {
        ctx.psi0 = initial_state(spec, ctx.basis);
        ctx.decomp = make_propagator(params, ctx.basis);
    }
    return ctx;
}

ConcurrenceTrace empty_trace(const TraceContext& ctx, const std::vector<double>& T_grid) {
    ConcurrenceTrace t;
    t.family = ctx.spec.family;
    t.alpha = ctx.spec.alpha;
    t.epsilon = ctx.epsilon;
    t.lambda = ctx.lambda;
    t.path = ctx.path;
    t.T = T_grid;
    t.C.resize(T_grid.size());
    if (t.family == Family::Psi) t.signed_C.resize(T_grid.size());
    t.amplitude_abs.resize(T_grid.size());
    return t;
}

// Basis labels carrying x1..x5 for each family.
std::array<const char*, 5> amplitude_labels(Family f) {
    if (f == Family::Psi) return {"eg00", "ge00", "gg11", nullptr, nullptr};
    return {"ee00", "gg00", "ge11", "eg11", "gg22"};
}

void evaluate_point(const TraceContext& ctx, ConcurrenceTrace& out, std::size_t i) {
    const double T = out.T[i];
    StateVector psi;
    if (ctx.path == Path::Oracle) {
        psi = evolve(ctx.psi0, ctx.decomp, T);
    } else {
        const auto form = ctx.path == Path::Analytic ? ClosedForm::Exact : ClosedForm::Published;
        psi = assemble_state(coefficients(ctx.spec.family, form, ctx.spec.alpha, ctx.epsilon, ctx.lambda, T),
                             ctx.basis);
    }
    out.C[i] = concurrence(reduce_to_atoms(psi, ctx.basis));

    const auto labels = amplitude_labels(ctx.spec.family);
    for (std::size_t k = 0; k < 5; ++k)
        out.amplitude_abs[i][k] = labels[k] ? std::abs(psi[ctx.basis.index_of(labels[k])]) : 0.0;
    if (ctx.spec.family == Family::Psi) {
        const Complex x1 = psi[ctx.basis.index_of("eg00")];
        const Complex x2 = psi[ctx.basis.index_of("ge00")];
        out.signed_C[i] = 2.0 * (x1 * std::conj(x2)).real();
    }
}

double golden_section_max(const auto& f, double lo, double hi, double tol, double& arg) {
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    arg = 0.5 * (a + b);
    return f(arg);
}

// Shrinks [alive, dead] (either order) to width kBisectionTolerance.
double bisect(const auto& is_dead, double alive, double dead) {
    while (std::abs(dead - alive) > kBisectionTolerance) {
        const double mid = 0.5 * (alive + dead);
        (is_dead(mid) ? dead : alive) = mid;
    }
    return 0.5 * (alive + dead);
}

}  // namespace

std::string to_string(Path p) {
    switch (p) {
        case Path::Analytic: return "ANALYTIC";
        case Path::Oracle: return "ORACLE";
        case Path::Published: return "PUBLISHED";
    }
    return "?";
}

std::optional<Path> path_from_string(const std::string& s) {
    if (s == "ANALYTIC" || s == "analytic") return Path::Analytic;
    if (s == "ORACLE" || s == "oracle") return Path::Oracle;
    if (s == "PUBLISHED" || s == "published") return Path::Published;
    return std::nullopt;
}

ClosedForm refinement_form(Path p) { return p == Path::Published ? ClosedForm::Published : ClosedForm::Exact; }

std::vector<double> uniform_grid(double T_max, std::size_t n_points) {
    if (n_points < 2 || !(T_max > 0.0)) throw std::invalid_argument("uniform_grid: need n_points >= 2, T_max > 0");
    std::vector<double> grid(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        grid[i] = T_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
    return grid;
}

std::vector<double> standard_alpha_grid() {
    std::vector<double> a(9);
    for (std::size_t i = 0; i < 9; ++i) a[i] = std::numbers::pi / 2 * static_cast<double>(i) / 8.0;
    return a;
}

std::vector<double> standard_epsilon_grid() { return {0.0, 0.1, 1.0, 2.0, 5.0}; }

std::vector<double> standard_time_grid() { return uniform_grid(20.0, 400); }

ConcurrenceTrace concurrence_trace(const InitialStateSpec& spec, const ModelParams& params,
                                   const std::vector<double>& T_grid, Path path) {
    const TraceContext ctx = make_context(spec, params, T_grid, path);
    ConcurrenceTrace out = empty_trace(ctx, T_grid);
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(T_grid.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            evaluate_point(ctx, out, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(tcm_trace_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

ConcurrenceTrace concurrence_trace_serial(const InitialStateSpec& spec, const ModelParams& params,
                                          const std::vector<double>& T_grid, Path path) {
    const TraceContext ctx = make_context(spec, params, T_grid, path);
    ConcurrenceTrace out = empty_trace(ctx, T_grid);
    for (std::size_t i = 0; i < T_grid.size(); ++i) evaluate_point(ctx, out, i);
    return out;
}

double closed_form_concurrence(Family family, ClosedForm form, double alpha, double epsilon, double lambda,
                               double T) {
    return xstate_concurrence(reduce_coefficients(coefficients(family, form, alpha, epsilon, lambda, T)));
}

double closed_form_branch(Family family, ClosedForm form, double alpha, double epsilon, double lambda,
                          double T) {
    return xstate_branch(reduce_coefficients(coefficients(family, form, alpha, epsilon, lambda, T)));
}

std::vector<DeathInterval> detect_death_intervals(const ConcurrenceTrace& trace, double zero_threshold) {
    const ClosedForm form = refinement_form(trace.path);
    auto branch = [&](double T) {
        return closed_form_branch(trace.family, form, trace.alpha, trace.epsilon, trace.lambda, T);
    };
    auto exactly_dead = [&](double T) { return branch(T) <= 0.0; };
    auto below_threshold = [&](double T) { return branch(T) < zero_threshold; };

    std::vector<DeathInterval> out;
    const std::size_t n = trace.C.size();
    std::size_t i = 0;
    while (i < n) {
        if (!(trace.C[i] < zero_threshold)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && trace.C[j] < zero_threshold) ++j;
        const std::size_t first = i, last = j - 1;
        i = j;
        if (last - first + 1 < 3) continue;

        // Grid values below threshold may still carry a tiny positive branch
        // (floating-point dust); bisect towards the first exact zero when one exists.
        auto refine_edge = [&](std::size_t alive_idx, std::size_t inner_idx, bool forward) {
            std::size_t k = inner_idx;
            while (true) {
                if (exactly_dead(trace.T[k])) return bisect(exactly_dead, trace.T[alive_idx], trace.T[k]);
                if (k == (forward ? last : first)) break;
                forward ? ++k : --k;
            }
            return bisect(below_threshold, trace.T[alive_idx], trace.T[inner_idx]);
        };

        DeathInterval interval{trace.T[first], trace.T[last], true};
        if (first > 0)
            interval.T_start = refine_edge(first - 1, first, true);
        else
            interval.refined = false;
        if (last + 1 < n)
            interval.T_end = refine_edge(last + 1, last, false);
        else
            interval.refined = false;
        out.push_back(interval);
    }
    return out;
}

Maximum max_concurrence(const ConcurrenceTrace& trace) {
    if (trace.C.empty()) throw std::invalid_argument("max_concurrence: empty trace");
    const auto it = std::max_element(trace.C.begin(), trace.C.end());
    const auto k = static_cast<std::size_t>(it - trace.C.begin());
    Maximum best{*it, trace.T[k]};
    if (trace.T.size() < 2) return best;

    const ClosedForm form = refinement_form(trace.path);
    auto C = [&](double T) {
        return closed_form_concurrence(trace.family, form, trace.alpha, trace.epsilon, trace.lambda, T);
    };
    const double lo = trace.T[k == 0 ? 0 : k - 1];
    const double hi = trace.T[std::min(k + 1, trace.T.size() - 1)];
    double arg = best.T;
    const double refined = golden_section_max(C, lo, hi, 1e-12, arg);
    if (refined > best.C) best = {refined, arg};
    return best;
}

double estimate_period(const ConcurrenceTrace& trace) {
    const std::size_t n = trace.C.size();
    const double kappa = std::sqrt(8.0 + trace.epsilon * trace.epsilon);
    if (n < 16) throw std::invalid_argument("estimate_period: trace too short");
    const double span = trace.T.back() - trace.T.front();
    if (span < 3.0 * 2.0 * std::numbers::pi / kappa)
        throw std::invalid_argument("estimate_period: trace must span at least three periods");

    double mean = 0.0;
    for (double c : trace.C) mean += c;
    mean /= static_cast<double>(n);
    std::vector<double> windowed(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                               static_cast<double>(n - 1)));
        windowed[i] = (trace.C[i] - mean) * w;
    }
    auto magnitude = [&](double omega) {
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            re += windowed[i] * std::cos(omega * trace.T[i]);
            im -= windowed[i] * std::sin(omega * trace.T[i]);
        }
        return std::hypot(re, im);
    };

    const double step = 2.0 * std::numbers::pi / span / 8.0;
    const double omega_min = 3.0 * 2.0 * std::numbers::pi / span;
    const double omega_max = std::numbers::pi * static_cast<double>(n - 1) / span;
    const auto count = static_cast<std::ptrdiff_t>((omega_max - omega_min) / step) + 1;
    if (count < 3) throw std::invalid_argument("estimate_period: grid too coarse");
    std::vector<double> spectrum(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k)
        spectrum[static_cast<std::size_t>(k)] = magnitude(omega_min + step * static_cast<double>(k));

    const auto peak = static_cast<std::size_t>(std::max_element(spectrum.begin(), spectrum.end()) -
                                               spectrum.begin());
    const double centre = omega_min + step * static_cast<double>(peak);
    double omega = centre;
    golden_section_max(magnitude, std::max(omega_min, centre - step), centre + step, 1e-12, omega);
    return 2.0 * std::numbers::pi / omega;
}

}  // namespace tcm
