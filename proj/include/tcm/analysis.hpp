#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tcm/analytic.hpp"
#include "tcm/model.hpp"

namespace tcm {

enum class Path {
    Analytic,   // exact closed forms
    Oracle,     // numerical propagation of the full Hamiltonian
    Published,  // closed forms as commonly quoted (figure comparison)
};

std::string to_string(Path p);
std::optional<Path> path_from_string(const std::string& s);

// Closed form used when a path needs refinement between grid points.
ClosedForm refinement_form(Path p);

struct ConcurrenceTrace {
    Family family = Family::Psi;
    double alpha = 0.0;
    double epsilon = 0.0;
    double lambda = 0.0;
    Path path = Path::Analytic;
    std::vector<double> T;
    std::vector<double> C;
    std::vector<double> signed_C;                   // PSI only: 2 Re(x1 x2*)
    std::vector<std::array<double, 5>> amplitude_abs;  // |x1| .. |x5| (PSI: last two zero)
};

struct DeathInterval {
    double T_start;
    double T_end;
    bool refined;  // both endpoints bisection-refined on the closed form

    double length() const { return T_end - T_start; }
};

constexpr double kDefaultZeroThreshold = 1e-9;
constexpr double kDefaultLambda = 10.0;

std::vector<double> uniform_grid(double T_max, std::size_t n_points);

// Grid used for cross-path verification: 9 alphas on [0, pi/2], eps in
// {0, 0.1, 1, 2, 5}, 400 times on [0, 20].
std::vector<double> standard_alpha_grid();
std::vector<double> standard_epsilon_grid();
std::vector<double> standard_time_grid();

// Throws std::invalid_argument for a non-ascending grid. Grid points are
// distributed over OpenMP threads.
ConcurrenceTrace concurrence_trace(const InitialStateSpec& spec, const ModelParams& params,
                                   const std::vector<double>& T_grid, Path path);

// Single-threaded reference; bitwise identical to concurrence_trace.
ConcurrenceTrace concurrence_trace_serial(const InitialStateSpec& spec, const ModelParams& params,
                                          const std::vector<double>& T_grid, Path path);

// Concurrence and its signed X-state branch from the closed form at one time.
double closed_form_concurrence(Family family, ClosedForm form, double alpha, double epsilon, double lambda,
                               double T);
double closed_form_branch(Family family, ClosedForm form, double alpha, double epsilon, double lambda,
                          double T);

// Maximal runs of at least three grid points with C < zero_threshold. Endpoints
// are located to 1e-10 in T by bisection on the closed-form branch.
std::vector<DeathInterval> detect_death_intervals(const ConcurrenceTrace& trace,
                                                  double zero_threshold = kDefaultZeroThreshold);

struct Maximum {
    double C;
    double T;
};

// Grid argmax refined by golden-section search on the closed form inside the
// neighbouring grid cells.
Maximum max_concurrence(const ConcurrenceTrace& trace);

// Dominant period of C(T): peak of the Hann-windowed power spectrum, located
// by golden-section search on the continuous transform. Throws
// std::invalid_argument unless the trace spans three periods of 2 pi / kappa.
double estimate_period(const ConcurrenceTrace& trace);

}  // namespace tcm
