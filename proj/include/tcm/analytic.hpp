#pragma once

// Closed-form amplitudes for the two initial-state families at resonance.
//
// PSI:  |psi(T)> = x1|eg00> + x2|ge00> + x3|gg11>
// PHI:  |phi(T)> = x1|ee00> + x2|gg00> + x3|ge11> + x4|eg11> + x5|gg22>

#include <array>
#include <span>

#include "tcm/model.hpp"

namespace tcm {

struct CoefficientSet {
    Family family = Family::Psi;
    std::array<Complex, 5> x{};  // x[0] = x1 ... x[4] = x5; PSI uses x1..x3
    double alpha = 0.0;
    double epsilon = 0.0;
    double lambda = 0.0;
    double T = 0.0;

    std::size_t count() const { return family == Family::Psi ? 3 : 5; }
    std::span<const Complex> amplitudes() const { return {x.data(), count()}; }
    double norm_squared() const;
};

enum class ClosedForm {
    Exact,      // solves the Schroedinger equation of the model Hamiltonian
    Published,  // the amplitude formulas as commonly quoted, see namespace published
};

// Lambda = e^{-i kappa L+ T/2}, Xi = e^{i(3L+ - 2) kappa T/2}:
//   x1,2 = (Lambda/4) [theta+ (L+ - L- e^{i kappa T}) +/- 2 Xi theta-]
//   x3   = (Lambda theta+ / kappa)(1 - e^{i kappa T})
// The sector has no lambda dependence at resonance (its diagonal vanishes).
CoefficientSet psi_coefficients(double alpha, double epsilon, double T);

// With zeta = sqrt(40 + eps^2), Gamma = cos(alpha) e^{-i lambda T} and
// p+- = e^{-i (eps +- zeta) T / 2}:
//   x1      = Gamma [4/5 + ((1 - eps/zeta) p+ + (1 + eps/zeta) p-) / 10]
//   x2      = e^{i lambda T} sin(alpha)
//   x3 = x4 = (Gamma / zeta)(p+ - p-)
//   x5      = Gamma [-2/5 + ((1 - eps/zeta) p+ + (1 + eps/zeta) p-) / 5]
// The symmetric N = 4 block couples |ee00> -> (|eg11>+|ge11>)/sqrt2 with
// strength sqrt2 and on to |gg22> with 2 sqrt2 (bosonic factor sqrt2 * sqrt2).
CoefficientSet phi_coefficients(double alpha, double epsilon, double lambda, double T);

namespace published {

// x1,2 = (Lambda/4)[theta+ (L+ e^{i kappa T} - L-) +/- 2 Xi theta-], x3 as above.
// Identical to the exact form at eps = 0 and equal in magnitude at alpha = pi/4;
// otherwise the eps-dependent weights sit on the wrong eigenfrequencies.
CoefficientSet psi_coefficients(double alpha, double epsilon, double T);

// eta = sqrt(16 + eps^2), Gamma = cos(alpha) e^{-i(2 lambda + eps + eta)T/2},
// M+- = 1 +- e^{i eta T}:
//   x1 = (Gamma/4)(eps M-/eta + M+ + 2 e^{i(eps+eta)T/2}),  x2 = e^{i lambda T} sin(alpha)
//   x3 = x4 = Gamma M-/eta,  x5 = (Gamma/4)(eps M-/eta + M+ - 2 e^{i(eps+eta)T/2})
// This is the solution for unit-strength pair transitions |eg11> <-> |gg22>,
// i.e. without the sqrt2 * sqrt2 bosonic factor; it is normalized but does not
// follow the model Hamiltonian.
CoefficientSet phi_coefficients(double alpha, double epsilon, double lambda, double T);

}  // namespace published

CoefficientSet coefficients(Family family, ClosedForm form, double alpha, double epsilon, double lambda,
                            double T);

// Places the amplitudes on their basis states. Throws std::invalid_argument if
// the basis cannot hold them (n_max < 2).
StateVector assemble_state(const CoefficientSet& coefs, const Basis& basis);

}  // namespace tcm
