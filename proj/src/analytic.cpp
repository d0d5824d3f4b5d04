#include "tcm/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace tcm {

namespace {

Complex cis(double phase) { return std::polar(1.0, phase); }

void check_domain(double alpha, double epsilon) {
    check_alpha(alpha);
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw std::domain_error("epsilon must be finite and >= 0");
}

CoefficientSet make_set(Family family, double alpha, double epsilon, double lambda, double T) {
    CoefficientSet c;
    c.family = family;
    c.alpha = alpha;
    c.epsilon = epsilon;
    c.lambda = lambda;
    c.T = T;
    return c;
}

}  // namespace

double CoefficientSet::norm_squared() const {
    double s = 0.0;
    for (const auto& z : amplitudes()) s += std::norm(z);
    return s;
}

CoefficientSet psi_coefficients(double alpha, double epsilon, double T) {
    check_domain(alpha, epsilon);
    const auto d = DerivedConstants::compute(epsilon, alpha);
    const Complex Lambda = cis(-d.kappa * d.L_plus * T / 2.0);
    const Complex Xi = cis((3.0 * d.L_plus - 2.0) * d.kappa * T / 2.0);
    const Complex e_kT = cis(d.kappa * T);

    const Complex symmetric = d.theta_plus * (d.L_plus - d.L_minus * e_kT);
    const Complex antisymmetric = 2.0 * Xi * d.theta_minus;

    auto c = make_set(Family::Psi, alpha, epsilon, 0.0, T);
    c.x[0] = Lambda / 4.0 * (symmetric + antisymmetric);
    c.x[1] = Lambda / 4.0 * (symmetric - antisymmetric);
    c.x[2] = Lambda * d.theta_plus / d.kappa * (1.0 - e_kT);
    return c;
}

CoefficientSet phi_coefficients(double alpha, double epsilon, double lambda, double T) {
    check_domain(alpha, epsilon);
    const auto d = DerivedConstants::compute(epsilon, alpha);
    const Complex Gamma = std::cos(alpha) * cis(-lambda * T);
    const Complex p_plus = cis(-(epsilon + d.zeta) * T / 2.0);
    const Complex p_minus = cis(-(epsilon - d.zeta) * T / 2.0);
    const Complex oscillating = (1.0 - epsilon / d.zeta) * p_plus + (1.0 + epsilon / d.zeta) * p_minus;

    auto c = make_set(Family::Phi, alpha, epsilon, lambda, T);
    c.x[0] = Gamma * (0.8 + oscillating / 10.0);
    c.x[1] = cis(lambda * T) * std::sin(alpha);
    c.x[2] = Gamma / d.zeta * (p_plus - p_minus);
    c.x[3] = c.x[2];
    c.x[4] = Gamma * (-0.4 + oscillating / 5.0);
    return c;
}

namespace published {

CoefficientSet psi_coefficients(double alpha, double epsilon, double T) {
    check_domain(alpha, epsilon);
    const auto d = DerivedConstants::compute(epsilon, alpha);
    const Complex Lambda = cis(-d.kappa * d.L_plus * T / 2.0);
    const Complex Xi = cis((3.0 * d.L_plus - 2.0) * d.kappa * T / 2.0);
    const Complex e_kT = cis(d.kappa * T);

    const Complex symmetric = d.theta_plus * (d.L_plus * e_kT - d.L_minus);
    const Complex antisymmetric = 2.0 * Xi * d.theta_minus;

    auto c = make_set(Family::Psi, alpha, epsilon, 0.0, T);
    c.x[0] = Lambda / 4.0 * (symmetric + antisymmetric);
    c.x[1] = Lambda / 4.0 * (symmetric - antisymmetric);
    c.x[2] = Lambda * d.theta_plus / d.kappa * (1.0 - e_kT);
    return c;
}

CoefficientSet phi_coefficients(double alpha, double epsilon, double lambda, double T) {
    check_domain(alpha, epsilon);
    const auto d = DerivedConstants::compute(epsilon, alpha);
    const Complex Gamma = std::cos(alpha) * cis(-(2.0 * lambda + epsilon + d.eta) * T / 2.0);
    const Complex M_plus = 1.0 + cis(d.eta * T);
    const Complex M_minus = 1.0 - cis(d.eta * T);
    const Complex half_phase = 2.0 * cis((epsilon + d.eta) * T / 2.0);

    auto c = make_set(Family::Phi, alpha, epsilon, lambda, T);
    c.x[0] = Gamma / 4.0 * (epsilon / d.eta * M_minus + M_plus + half_phase);
    c.x[1] = cis(lambda * T) * std::sin(alpha);
    c.x[2] = Gamma * M_minus / d.eta;
    c.x[3] = c.x[2];
    c.x[4] = Gamma / 4.0 * (epsilon / d.eta * M_minus + M_plus - half_phase);
    return c;
}

}  // namespace published

CoefficientSet coefficients(Family family, ClosedForm form, double alpha, double epsilon, double lambda,
                            double T) {
    if (form == ClosedForm::Exact)
        return family == Family::Psi ? psi_coefficients(alpha, epsilon, T)
                                     : phi_coefficients(alpha, epsilon, lambda, T);
    return family == Family::Psi ? published::psi_coefficients(alpha, epsilon, T)
                                 : published::phi_coefficients(alpha, epsilon, lambda, T);
}

StateVector assemble_state(const CoefficientSet& coefs, const Basis& basis) {
    if (basis.n_max() < 2) throw std::invalid_argument("assemble_state: basis needs n_max >= 2");
    StateVector psi(basis.size());
    if (coefs.family == Family::Psi) {
        psi[basis.index_of("eg00")] = coefs.x[0];
        psi[basis.index_of("ge00")] = coefs.x[1];
        psi[basis.index_of("gg11")] = coefs.x[2];
    } else {
        psi[basis.index_of("ee00")] = coefs.x[0];
        psi[basis.index_of("gg00")] = coefs.x[1];
        psi[basis.index_of("ge11")] = coefs.x[2];
        psi[basis.index_of("eg11")] = coefs.x[3];
        psi[basis.index_of("gg22")] = coefs.x[4];
    }
    return psi;
}

}  // namespace tcm
