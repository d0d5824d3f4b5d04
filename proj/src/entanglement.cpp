#include "tcm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "tcm/propagator.hpp"

namespace tcm {

namespace {

constexpr double kNegativeEigenvalueTolerance = 1e-10;
// Eigenvalues of rho below this (relative to the trace) are rounding noise from
// the Jacobi sweep; taking their square root would inject ~1e-8 errors.
constexpr double kRankTolerance = 1e-14;

// sy x sy in the {ee, eg, ge, gg} basis.
constexpr std::array<double, 4> kSpinFlipAntiDiagonal{-1.0, 1.0, 1.0, -1.0};

}  // namespace

SquareMatrix AtomDensityMatrix::as_matrix() const {
    SquareMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = rho[i][j];
    return m;
}

Complex AtomDensityMatrix::trace() const { return rho[0][0] + rho[1][1] + rho[2][2] + rho[3][3]; }

double AtomDensityMatrix::purity() const {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) s += std::norm(rho[i][j]);
    return s;
}

void validate_density_matrix(const AtomDensityMatrix& rho) {
    const SquareMatrix m = rho.as_matrix();
    if (hermiticity_defect(m) > 1e-12) throw std::domain_error("density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-12) throw std::domain_error("density matrix trace differs from 1");
    const auto decomp = spectral_decompose(m);
    if (decomp.eigenvalues.front() < -kNegativeEigenvalueTolerance)
        throw std::domain_error("density matrix is not positive semidefinite");
}

AtomDensityMatrix reduce_to_atoms(const StateVector& psi, const Basis& basis) {
    if (psi.size() != basis.size()) throw std::invalid_argument("reduce_to_atoms: size mismatch");
    const std::size_t block = basis.photon_block();
    AtomDensityMatrix out;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a; b < 4; ++b) {
            Complex acc{};
            for (std::size_t k = 0; k < block; ++k) acc += psi[a * block + k] * std::conj(psi[b * block + k]);
            out(a, b) = acc;
            out(b, a) = std::conj(acc);
        }
    for (std::size_t a = 0; a < 4; ++a) out(a, a) = out(a, a).real();
    return out;
}

AtomDensityMatrix reduce_coefficients(const CoefficientSet& coefs) {
    const auto& x = coefs.x;
    AtomDensityMatrix out;
    auto set = [&](std::size_t i, std::size_t j, Complex v) {
        out(i, j) = v;
        out(j, i) = std::conj(v);
    };
    if (coefs.family == Family::Psi) {
        set(1, 1, std::norm(x[0]));
        set(2, 2, std::norm(x[1]));
        set(1, 2, x[0] * std::conj(x[1]));
        set(3, 3, std::norm(x[2]));
    } else {
        // x3 on ge11, x4 on eg11.
        set(0, 0, std::norm(x[0]));
        set(0, 3, x[0] * std::conj(x[1]));
        set(1, 1, std::norm(x[3]));
        set(2, 2, std::norm(x[2]));
        set(1, 2, x[3] * std::conj(x[2]));
        set(3, 3, std::norm(x[1]) + std::norm(x[4]));
    }
    return out;
}

double wootters_concurrence(const AtomDensityMatrix& rho) {
    const SquareMatrix m = rho.as_matrix();
    if (hermiticity_defect(m) > 1e-12) throw std::domain_error("wootters_concurrence: rho is not Hermitian");
    const auto decomp = spectral_decompose(m);
    const double scale = std::max(1.0, std::abs(rho.trace()));
    if (decomp.eigenvalues.front() < -kNegativeEigenvalueTolerance * scale)
        throw std::domain_error("wootters_concurrence: rho is not positive semidefinite");

    // W = V diag(sqrt(p)), tau = W^T (sy x sy) W.
    SquareMatrix w(4);
    for (std::size_t k = 0; k < 4; ++k) {
        const double p = decomp.eigenvalues[k];
        const double root = p > kRankTolerance * scale ? std::sqrt(p) : 0.0;
        for (std::size_t i = 0; i < 4; ++i) w(i, k) = decomp.eigenvectors(i, k) * root;
    }
    SquareMatrix tau(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < 4; ++k) acc += w(k, i) * kSpinFlipAntiDiagonal[k] * w(3 - k, j);
            tau(i, j) = acc;
        }

    // Singular values of tau from the Hermitian dilation [[0, tau], [tau^+, 0]].
    SquareMatrix dilation(8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            dilation(i, 4 + j) = tau(i, j);
            dilation(4 + j, i) = std::conj(tau(i, j));
        }
    const auto sv = spectral_decompose(dilation);
    std::array<double, 4> s{};
    for (std::size_t k = 0; k < 4; ++k) s[k] = std::max(0.0, sv.eigenvalues[7 - k]);
    std::sort(s.begin(), s.end(), std::greater<>());
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

bool is_x_shaped(const AtomDensityMatrix& rho, double tolerance) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool on_x = i == j || i + j == 3;
            if (!on_x && std::abs(rho(i, j)) > tolerance) return false;
        }
    return true;
}

double xstate_branch(const AtomDensityMatrix& rho) {
    const double p00 = rho(0, 0).real(), p11 = rho(1, 1).real(), p22 = rho(2, 2).real(), p33 = rho(3, 3).real();
    const double flip = std::abs(rho(1, 2)) - std::sqrt(std::max(0.0, p00 * p33));
    const double pair = std::abs(rho(0, 3)) - std::sqrt(std::max(0.0, p11 * p22));
    return 2.0 * std::max(flip, pair);
}

double xstate_concurrence(const AtomDensityMatrix& rho) {
    if (!is_x_shaped(rho)) throw std::invalid_argument("xstate_concurrence: matrix is not X-shaped");
    return std::max(0.0, xstate_branch(rho));
}

double concurrence(const AtomDensityMatrix& rho) {
    return is_x_shaped(rho) ? xstate_concurrence(rho) : wootters_concurrence(rho);
}

double signed_psi_concurrence(const CoefficientSet& coefs) {
    if (coefs.family != Family::Psi) throw std::invalid_argument("signed_psi_concurrence: PSI family only");
    return 2.0 * (coefs.x[0] * std::conj(coefs.x[1])).real();
}

}  // namespace tcm
