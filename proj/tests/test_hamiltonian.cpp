#include <doctest.h>

#include <cmath>
#include <sstream>

#include "tcm/hamiltonian.hpp"
#include "tcm/propagator.hpp"
#include "test_support.hpp"

using namespace tcm;
using namespace tcm::testing;

namespace {

// Independent construction: Kronecker products of single-body operators in the
// order atom A, atom B, mode a, mode b (atom basis {e, g}).
SquareMatrix hamiltonian_by_composition(const ModelParams& p) {
    const std::size_t m = static_cast<std::size_t>(p.n_max()) + 1;
    SquareMatrix create(m), id_mode = SquareMatrix::identity(m), number(m);
    for (std::size_t n = 0; n + 1 < m; ++n) create(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
    for (std::size_t n = 0; n < m; ++n) number(n, n) = static_cast<double>(n);
    const SquareMatrix annihilate = create.adjoint();

    SquareMatrix sigma_plus(2), sigma_z(2), id_atom = SquareMatrix::identity(2);
    sigma_plus(0, 1) = 1.0;  // |e><g|
    sigma_z(0, 0) = 1.0;
    sigma_z(1, 1) = -1.0;
    const SquareMatrix sigma_minus = sigma_plus.adjoint();

    auto op = [&](const SquareMatrix& A, const SquareMatrix& B, const SquareMatrix& a, const SquareMatrix& b) {
        return kron(kron(kron(A, B), a), b);
    };
    SquareMatrix H = op(id_atom, id_atom, number, id_mode).scaled(p.omega_a());
    H = add(H, op(id_atom, id_atom, id_mode, number), p.omega_b());
    H = add(H, op(sigma_z, id_atom, id_mode, id_mode), 0.5 * p.omega_0());
    H = add(H, op(id_atom, sigma_z, id_mode, id_mode), 0.5 * p.omega_0());
    H = add(H, op(sigma_minus, id_atom, create, create), p.g());
    H = add(H, op(sigma_plus, id_atom, annihilate, annihilate), p.g());
    H = add(H, op(id_atom, sigma_minus, create, create), p.g());
    H = add(H, op(id_atom, sigma_plus, annihilate, annihilate), p.g());
    H = add(H, op(sigma_plus, sigma_minus, id_mode, id_mode), p.Omega());
    H = add(H, op(sigma_minus, sigma_plus, id_mode, id_mode), p.Omega());
    return H;
}

// det(M - x I) via the characteristic polynomial.
Complex char_poly_at(const SquareMatrix& M, double x) {
    const auto c = characteristic_polynomial(M);
    Complex acc = 1.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

}  // namespace

TEST_CASE("build_hamiltonian matches operator composition") {
    for (int n_max : {2, 3}) {
        const ModelParams p(0.8, 1.7, 2.5, 0.7, 1.3, n_max);
        const Basis basis(n_max);
        const auto H = build_hamiltonian(p, basis);
        const auto oracle = hamiltonian_by_composition(p);
        CHECK((H - oracle).max_abs() <= 1e-14);
    }
}

TEST_CASE("build_hamiltonian: named matrix elements") {
    const double g = 0.7, Omega = 1.3;
    const ModelParams p(0.8, 1.7, 2.5, g, Omega);
    const Basis b(2);
    const auto H = build_hamiltonian(p, b);
    CHECK(H(b.index_of("gg11"), b.index_of("eg00")).real() == doctest::Approx(g));
    CHECK(H(b.index_of("gg22"), b.index_of("eg11")).real() == doctest::Approx(2 * g));
    CHECK(H(b.index_of("ge00"), b.index_of("eg00")).real() == doctest::Approx(Omega));
    CHECK(std::abs(H(b.index_of("gg11"), b.index_of("gg11"))) <= 1e-15);
    CHECK(hermiticity_defect(H) == 0.0);

    CHECK_THROWS_AS(build_hamiltonian(p, Basis(3)), std::invalid_argument);
}

TEST_CASE("check_conservation") {
    const Basis b(2);
    auto H = build_hamiltonian(ModelParams::dimensionless(2.0, 5.0), b);
    CHECK(check_conservation(H, b));
    H(b.index_of("eg00"), b.index_of("ee00")) = 1e-9;
    CHECK_FALSE(check_conservation(H, b));
    CHECK(check_conservation(HermitianMatrix(b.size()), b));
}

TEST_CASE("conservation and Hermiticity hold for n_max 2..4") {
    for (int n : {2, 3, 4})
        for (double eps : {0.0, 0.5, 2.0, 10.0}) {
            const Basis b(n);
            const auto H = build_hamiltonian(ModelParams::dimensionless(eps, 3.0, n), b);
            CHECK(check_conservation(H, b));
            CHECK(hermiticity_defect(H) == 0.0);
        }
}

TEST_CASE("restrict_to_sector: N = 2 block and its spectrum") {
    for (double eps : {0.0, 0.5, 2.0, 10.0}) {
        const Basis b(2);
        const auto H = build_hamiltonian(ModelParams::dimensionless(eps, 7.0), b);

        const auto full = restrict_to_sector(H, b, 2);
        CHECK(full.indices.size() == 5);  // eg00, ge00, gg20, gg11, gg02

        const auto block = restrict_to_sector(H, b, 2, 0);
        REQUIRE(block.indices == std::vector<std::size_t>{b.index_of("eg00"), b.index_of("ge00"), b.index_of("gg11")});
        const double expected[3][3] = {{0, eps, 1}, {eps, 0, 1}, {1, 1, 0}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(std::abs(block.matrix(i, j) - expected[i][j]) <= 1e-15);

        const double kappa = std::sqrt(8 + eps * eps);
        for (double ev : {-eps, (eps + kappa) / 2, (eps - kappa) / 2})
            CHECK(std::abs(char_poly_at(block.matrix, ev)) <= 1e-10);
        auto spectrum = spectral_decompose(block.matrix).eigenvalues;
        std::vector<double> expect{-eps, (eps + kappa) / 2, (eps - kappa) / 2};
        std::sort(expect.begin(), expect.end());
        for (int k = 0; k < 3; ++k) CHECK(std::abs(spectrum[k] - expect[k]) <= 1e-10);
    }
}

TEST_CASE("restrict_to_sector: N = 4 block carries the sqrt2*sqrt2 pair factor") {
    const double lambda = 7.0;
    for (double eps : {0.0, 2.0}) {
        const Basis b(2);
        const auto H = build_hamiltonian(ModelParams::dimensionless(eps, lambda), b);
        const auto block = restrict_to_sector(H, b, 4, 0);
        REQUIRE(block.indices == std::vector<std::size_t>{b.index_of("ee00"), b.index_of("eg11"), b.index_of("ge11"),
                                                          b.index_of("gg22")});
        for (int i = 0; i < 4; ++i) CHECK(block.matrix(i, i).real() == doctest::Approx(lambda));

        // Relative to the common diagonal: antisymmetric -eps, a dark 0, and (eps +- zeta)/2.
        const double zeta = std::sqrt(40 + eps * eps);
        const double eta = std::sqrt(16 + eps * eps);
        for (double ev : {-eps, 0.0, (eps + zeta) / 2, (eps - zeta) / 2})
            CHECK(std::abs(char_poly_at(block.matrix, lambda + ev)) <= 1e-9);
        CHECK(std::abs(char_poly_at(block.matrix, lambda + (eps + eta) / 2)) > 1.0);
    }
}

TEST_CASE("restrict_to_sector: N = 0 and empty sectors") {
    const Basis b(2);
    const ModelParams p = ModelParams::dimensionless(1.0, 4.0);
    const auto H = build_hamiltonian(p, b);
    const auto zero = restrict_to_sector(H, b, 0);
    REQUIRE(zero.matrix.dim() == 1);
    CHECK(zero.matrix(0, 0).real() == -p.omega_0());
    CHECK(restrict_to_sector(H, b, 99).matrix.dim() == 0);
}

TEST_CASE("write_matrix_csv") {
    const Basis b(2);
    const auto H = build_hamiltonian(ModelParams::dimensionless(0.5, 2.0), b);
    std::ostringstream os;
    write_matrix_csv(os, H, b);
    const std::string text = os.str();
    CHECK(text.rfind("state,ee00,ee01", 0) == 0);
    CHECK(text.find("\neg00,") != std::string::npos);
    CHECK(text.find("1+0i") != std::string::npos);
    CHECK(text.find("0.5+0i") != std::string::npos);
}
