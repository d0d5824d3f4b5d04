#pragma once

// Two two-level atoms (A, B) coupled to two cavity modes (a, b) through a
// non-degenerate two-photon interaction. Time is dimensionless throughout:
// T = g t, and every public API takes T.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcm/matrix.hpp"

namespace tcm {

// Physical constants. Resonance omega_0 = omega_a + omega_b is required; the
// closed-form solutions assume it.
class ModelParams {
public:
    static constexpr int kDefaultNMax = 2;

    // Throws std::invalid_argument unless g > 0, Omega >= 0, n_max >= 2 and
    // omega_0 equals omega_a + omega_b (relative tolerance 1e-12).
    ModelParams(double omega_a, double omega_b, double omega_0, double g, double Omega,
                int n_max = kDefaultNMax);

    // g = 1, Omega = epsilon, omega_0 = lambda, modes split evenly.
    static ModelParams dimensionless(double epsilon, double lambda, int n_max = kDefaultNMax);

    double omega_a() const { return omega_a_; }
    double omega_b() const { return omega_b_; }
    double omega_0() const { return omega_0_; }
    double g() const { return g_; }
    double Omega() const { return Omega_; }
    int n_max() const { return n_max_; }

    double epsilon() const { return Omega_ / g_; }
    double lambda() const { return omega_0_ / g_; }

private:
    double omega_a_, omega_b_, omega_0_, g_, Omega_;
    int n_max_;
};

// Constants entering the closed-form amplitudes.
struct DerivedConstants {
    double kappa;        // sqrt(8 + eps^2)
    double eta;          // sqrt(16 + eps^2), the published PHI-sector frequency
    double zeta;         // sqrt(40 + eps^2), the exact PHI-sector frequency
    double L_plus;       // eps/kappa + 1
    double L_minus;      // eps/kappa - 1
    double theta_plus;   // cos(alpha) + sin(alpha)
    double theta_minus;  // cos(alpha) - sin(alpha)

    static DerivedConstants compute(double epsilon, double alpha);
};

enum class Family { Psi, Phi };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

// PSI: cos(alpha)|eg> + sin(alpha)|ge>; PHI: cos(alpha)|ee> + sin(alpha)|gg>.
// Both modes start in vacuum.
struct InitialStateSpec {
    Family family = Family::Psi;
    double alpha = 0.0;
};

enum class Level { Excited, Ground };

struct BasisState {
    Level atom_A;
    Level atom_B;
    int n_a;
    int n_b;

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

// Parses labels such as "eg00" or "gg22" (single-digit photon numbers).
BasisState parse_basis_label(const std::string& label);
std::string to_label(const BasisState& s);

// Product basis truncated at n_max photons per mode. Ordering: atom A slowest,
// then atom B (excited before ground), then n_a, then n_b. The flat index is
// ((A * 2 + B) * (n_max + 1) + n_a) * (n_max + 1) + n_b with e = 0, g = 1.
class Basis {
public:
    explicit Basis(int n_max);

    int n_max() const { return n_max_; }
    std::size_t size() const { return states_.size(); }
    // Number of photon configurations per atomic configuration, (n_max + 1)^2.
    std::size_t photon_block() const { return photon_block_; }

    const BasisState& state(std::size_t index) const { return states_.at(index); }
    const std::vector<BasisState>& states() const { return states_; }

    // Throws std::out_of_range for states outside the truncation.
    std::size_t index_of(const BasisState& s) const;
    std::size_t index_of(const std::string& label) const { return index_of(parse_basis_label(label)); }

private:
    int n_max_;
    std::size_t photon_block_;
    std::vector<BasisState> states_;
};

Basis enumerate_basis(int n_max);

// N = n_a + n_b + 2 * (number of excited atoms); conserved by the Hamiltonian.
int excitation_number(const BasisState& s);

using StateVector = std::vector<Complex>;

double norm(const StateVector& psi);
Complex inner_product(const StateVector& bra, const StateVector& ket);

// Throws std::domain_error when alpha is outside [0, pi/2].
StateVector initial_state(const InitialStateSpec& spec, const Basis& basis);

void check_alpha(double alpha);

}  // namespace tcm
