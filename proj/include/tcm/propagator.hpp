#pragma once

#include <span>
#include <vector>

#include "tcm/hamiltonian.hpp"
#include "tcm/matrix.hpp"
#include "tcm/model.hpp"

namespace tcm {

// H = V diag(eigenvalues) V^+, eigenvalues ascending, V unitary (columns are
// eigenvectors). Degenerate subspaces get an arbitrary orthonormal basis.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    SquareMatrix eigenvectors;
};

struct JacobiOptions {
    double relative_tolerance = 1e-14;  // stop when off-diagonal Frobenius norm <= tol * ||H||_F
    int max_sweeps = 100;
};

// Cyclic complex Jacobi. Throws std::invalid_argument for non-Hermitian input
// and std::runtime_error if max_sweeps is exhausted.
SpectralDecomposition spectral_decompose(const HermitianMatrix& H, JacobiOptions options = {});

// Decomposition of H/g, so that evolve() can be driven directly by T = g t.
SpectralDecomposition make_propagator(const ModelParams& params, const Basis& basis);

// psi(T) = V diag(exp(-i e_k T)) V^+ psi0 with e_k the decomposition's eigenvalues.
StateVector evolve(const StateVector& psi0, const SpectralDecomposition& decomp, double T);

// Each point is evaluated from the decomposition directly, so there is no
// step-to-step accumulation. Grid points are distributed over OpenMP threads.
std::vector<StateVector> evolve_grid(const StateVector& psi0, const SpectralDecomposition& decomp,
                                     std::span<const double> T_grid);

// Single-threaded reference for evolve_grid; results are bitwise identical.
std::vector<StateVector> evolve_grid_serial(const StateVector& psi0, const SpectralDecomposition& decomp,
                                            std::span<const double> T_grid);

// <psi|H|psi>
double expectation(const HermitianMatrix& H, const StateVector& psi);

}  // namespace tcm
