#pragma once

#include <array>

#include "tcm/analytic.hpp"
#include "tcm/matrix.hpp"
#include "tcm/model.hpp"

namespace tcm {

// Two-atom reduced state in the fixed basis {|ee>, |eg>, |ge>, |gg>} (index 0..3).
struct AtomDensityMatrix {
    std::array<std::array<Complex, 4>, 4> rho{};

    Complex& operator()(std::size_t i, std::size_t j) { return rho[i][j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return rho[i][j]; }

    SquareMatrix as_matrix() const;
    Complex trace() const;
    double purity() const;  // Tr rho^2
};

// Throws std::domain_error unless rho is Hermitian (1e-12), unit trace (1e-12)
// and has no eigenvalue below -1e-10.
void validate_density_matrix(const AtomDensityMatrix& rho);

// Partial trace over both cavity modes.
AtomDensityMatrix reduce_to_atoms(const StateVector& psi, const Basis& basis);

// Same partial trace taken directly on closed-form amplitudes. PSI gives the
// {eg, ge} block plus |x3|^2 on gg; PHI gives the X shape with |x2|^2 + |x5|^2 on gg.
AtomDensityMatrix reduce_coefficients(const CoefficientSet& coefs);

// max{0, s1 - s2 - s3 - s4} where s_i are the square roots of the eigenvalues of
// rho (sy x sy) rho* (sy x sy), descending. They are computed as the singular
// values of W^T (sy x sy) W for rho = W W^+, which avoids squaring small values.
double wootters_concurrence(const AtomDensityMatrix& rho);

bool is_x_shaped(const AtomDensityMatrix& rho, double tolerance = 1e-12);

// 2 max{0, |rho_eg,ge| - sqrt(rho_ee,ee rho_gg,gg), |rho_ee,gg| - sqrt(rho_eg,eg rho_ge,ge)}.
// Throws std::invalid_argument for non-X input.
double xstate_concurrence(const AtomDensityMatrix& rho);

// Larger of the two X-state branches before clipping at zero; it is <= 0
// exactly when the state is separable. Used for root refinement.
double xstate_branch(const AtomDensityMatrix& rho);

// X-state closed form when applicable, eigenvalue route otherwise.
double concurrence(const AtomDensityMatrix& rho);

// 2 Re(x1 x2*) for the PSI family. At eps = 0 the product is real and this is
// the signed quantity whose absolute value is the concurrence.
double signed_psi_concurrence(const CoefficientSet& coefs);

}  // namespace tcm
