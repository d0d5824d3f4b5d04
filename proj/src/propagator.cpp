#include "tcm/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tcm {

namespace {

double off_diagonal_norm(const SquareMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Rotates rows/columns p, q of a by U = D P where D = diag(1, e^{-i phi}) makes
// a(p, q) real and P is the real Jacobi rotation that annihilates it.
void rotate(SquareMatrix& a, SquareMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    const Complex phase = std::conj(apq) / r;  // e^{-i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex u_pp = c, u_pq = s, u_qp = -s * phase, u_qq = c * phase;
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * u_pp + akq * u_qp;
        a(k, q) = akp * u_pq + akq * u_qq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
        a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * u_pp + vkq * u_qp;
        v(k, q) = vkp * u_pq + vkq * u_qq;
    }
    a(p, q) = a(q, p) = 0.0;
    a(p, p) = app - t * r;
    a(q, q) = aqq + t * r;
}

void evolve_into(std::span<const Complex> coeffs, const SpectralDecomposition& decomp, double T,
                 StateVector& out) {
    const std::size_t n = coeffs.size();
    StateVector phased(n);
    for (std::size_t k = 0; k < n; ++k)
        phased[k] = coeffs[k] * std::polar(1.0, -decomp.eigenvalues[k] * T);
    out.assign(n, Complex{});
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc{};
        for (std::size_t k = 0; k < n; ++k) acc += decomp.eigenvectors(i, k) * phased[k];
        out[i] = acc;
    }
}

StateVector eigenbasis_coefficients(const StateVector& psi0, const SpectralDecomposition& decomp) {
    const std::size_t n = decomp.eigenvalues.size();
    if (psi0.size() != n) throw std::invalid_argument("evolve: state and decomposition sizes differ");
    StateVector c(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t i = 0; i < n; ++i) acc += std::conj(decomp.eigenvectors(i, k)) * psi0[i];
        c[k] = acc;
    }
    return c;
}

}  // namespace

SpectralDecomposition spectral_decompose(const HermitianMatrix& H, JacobiOptions options) {
    const std::size_t n = H.dim();
    if (hermiticity_defect(H) > 1e-12 * std::max(1.0, H.max_abs()))
        throw std::invalid_argument("spectral_decompose: matrix is not Hermitian");

    SquareMatrix a = H;
    SquareMatrix v = SquareMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

    const double target = options.relative_tolerance * H.frobenius_norm();
    bool converged = false;
    for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        if (sweep == options.max_sweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // Below rounding level relative to both diagonals: drop instead of rotating.
                const double guard = 100.0 * r;
                if (sweep > 3 && std::abs(a(p, p)) + guard == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + guard == std::abs(a(q, q))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                rotate(a, v, p, q);
            }
    }
    if (!converged) throw std::runtime_error("spectral_decompose: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = SquareMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

SpectralDecomposition make_propagator(const ModelParams& params, const Basis& basis) {
    return spectral_decompose(build_hamiltonian(params, basis).scaled(1.0 / params.g()));
}

StateVector evolve(const StateVector& psi0, const SpectralDecomposition& decomp, double T) {
    const StateVector c = eigenbasis_coefficients(psi0, decomp);
    StateVector out;
    evolve_into(c, decomp, T, out);
    return out;
}

std::vector<StateVector> evolve_grid(const StateVector& psi0, const SpectralDecomposition& decomp,
                                     std::span<const double> T_grid) {
    const StateVector c = eigenbasis_coefficients(psi0, decomp);
    std::vector<StateVector> out(T_grid.size());
    const auto count = static_cast<std::ptrdiff_t>(T_grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) evolve_into(c, decomp, T_grid[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<StateVector> evolve_grid_serial(const StateVector& psi0, const SpectralDecomposition& decomp,
                                            std::span<const double> T_grid) {
    const StateVector c = eigenbasis_coefficients(psi0, decomp);
    std::vector<StateVector> out(T_grid.size());
    for (std::size_t i = 0; i < T_grid.size(); ++i) evolve_into(c, decomp, T_grid[i], out[i]);
    return out;
}

double expectation(const HermitianMatrix& H, const StateVector& psi) {
    return inner_product(psi, multiply(H, psi)).real();
}

}  // namespace tcm
