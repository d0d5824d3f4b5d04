#include "tcm/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcm {

ModelParams::ModelParams(double omega_a, double omega_b, double omega_0, double g, double Omega,
                         int n_max)
    : omega_a_(omega_a), omega_b_(omega_b), omega_0_(omega_0), g_(g), Omega_(Omega), n_max_(n_max) {
    if (!(g > 0.0)) throw std::invalid_argument("ModelParams: g must be positive");
    if (!(Omega >= 0.0)) throw std::invalid_argument("ModelParams: Omega must be non-negative");
    if (n_max < 2) throw std::invalid_argument("ModelParams: n_max must be at least 2");
    const double scale = std::max({1.0, std::abs(omega_a), std::abs(omega_b), std::abs(omega_0)});
    if (std::abs(omega_0 - (omega_a + omega_b)) > 1e-12 * scale)
        throw std::invalid_argument("ModelParams: resonance omega_0 = omega_a + omega_b required");
}

ModelParams ModelParams::dimensionless(double epsilon, double lambda, int n_max) {
    return ModelParams(0.5 * lambda, 0.5 * lambda, lambda, 1.0, epsilon, n_max);
}

DerivedConstants DerivedConstants::compute(double epsilon, double alpha) {
    DerivedConstants d{};
    d.kappa = std::sqrt(8.0 + epsilon * epsilon);
    d.eta = std::sqrt(16.0 + epsilon * epsilon);
    d.zeta = std::sqrt(40.0 + epsilon * epsilon);
    d.L_plus = epsilon / d.kappa + 1.0;
    d.L_minus = epsilon / d.kappa - 1.0;
    d.theta_plus = std::cos(alpha) + std::sin(alpha);
    d.theta_minus = std::cos(alpha) - std::sin(alpha);
    return d;
}

std::string to_string(Family f) { return f == Family::Psi ? "PSI" : "PHI"; }

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "PSI" || s == "psi") return Family::Psi;
    if (s == "PHI" || s == "phi") return Family::Phi;
    return std::nullopt;
}

BasisState parse_basis_label(const std::string& label) {
    auto level = [&](char c) {
        if (c == 'e') return Level::Excited;
        if (c == 'g') return Level::Ground;
        throw std::invalid_argument("bad basis label: " + label);
    };
    if (label.size() != 4 || !std::isdigit(static_cast<unsigned char>(label[2])) ||
        !std::isdigit(static_cast<unsigned char>(label[3])))
        throw std::invalid_argument("bad basis label: " + label);
    return {level(label[0]), level(label[1]), label[2] - '0', label[3] - '0'};
}

std::string to_label(const BasisState& s) {
    std::string out;
    out += s.atom_A == Level::Excited ? 'e' : 'g';
    out += s.atom_B == Level::Excited ? 'e' : 'g';
    out += std::to_string(s.n_a);
    out += std::to_string(s.n_b);
    return out;
}

Basis::Basis(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("Basis: n_max must be non-negative");
    const auto levels = {Level::Excited, Level::Ground};
    photon_block_ = static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(n_max + 1);
    states_.reserve(4 * photon_block_);
    for (Level a : levels)
        for (Level b : levels)
            for (int na = 0; na <= n_max; ++na)
                for (int nb = 0; nb <= n_max; ++nb) states_.push_back({a, b, na, nb});
}

std::size_t Basis::index_of(const BasisState& s) const {
    if (s.n_a < 0 || s.n_b < 0 || s.n_a > n_max_ || s.n_b > n_max_)
        throw std::out_of_range("basis state outside truncation: " + to_label(s));
    const std::size_t atoms = (s.atom_A == Level::Ground ? 2u : 0u) + (s.atom_B == Level::Ground ? 1u : 0u);
    const auto stride = static_cast<std::size_t>(n_max_ + 1);
    return (atoms * stride + static_cast<std::size_t>(s.n_a)) * stride + static_cast<std::size_t>(s.n_b);
}

Basis enumerate_basis(int n_max) { return Basis(n_max); }

int excitation_number(const BasisState& s) {
    return s.n_a + s.n_b + 2 * ((s.atom_A == Level::Excited) + (s.atom_B == Level::Excited));
}

double norm(const StateVector& psi) {
    double s = 0.0;
    for (const auto& z : psi) s += std::norm(z);
    return std::sqrt(s);
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
    if (bra.size() != ket.size()) throw std::invalid_argument("inner_product: size mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2))
        throw std::domain_error("alpha must lie in [0, pi/2]");
}

StateVector initial_state(const InitialStateSpec& spec, const Basis& basis) {
    check_alpha(spec.alpha);
    StateVector psi(basis.size());
    if (spec.family == Family::Psi) {
        psi[basis.index_of("eg00")] = std::cos(spec.alpha);
        psi[basis.index_of("ge00")] = std::sin(spec.alpha);
    } else {
        psi[basis.index_of("ee00")] = std::cos(spec.alpha);
        psi[basis.index_of("gg00")] = std::sin(spec.alpha);
    }
    return psi;
}

}  // namespace tcm
