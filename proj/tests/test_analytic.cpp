#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tcm/analysis.hpp"
#include "tcm/analytic.hpp"
#include "tcm/entanglement.hpp"
#include "tcm/propagator.hpp"

using namespace tcm;
using std::numbers::pi;

namespace {

double propagation_gap(const CoefficientSet& c, double lambda) {
    const Basis b(2);
    const auto d = make_propagator(ModelParams::dimensionless(c.epsilon, lambda), b);
    const auto psi = evolve(initial_state({c.family, c.alpha}, b), d, c.T);
    const auto closed = assemble_state(c, b);
    double m = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) m = std::max(m, std::abs(psi[i] - closed[i]));
    return m;
}

}  // namespace

TEST_CASE("psi_coefficients: examples") {
    const double r = 1 / std::sqrt(2.0);
    auto c = psi_coefficients(pi / 4, 0.0, 0.0);
    CHECK(std::abs(c.x[0] - r) <= 1e-15);
    CHECK(std::abs(c.x[1] - r) <= 1e-15);
    CHECK(std::abs(c.x[2]) <= 1e-15);

    c = psi_coefficients(pi / 4, 0.0, pi / std::sqrt(8.0));
    CHECK(std::abs(c.x[0]) <= 1e-15);
    CHECK(std::abs(c.x[1]) <= 1e-15);
    CHECK(std::abs(c.x[2] - Complex(0, -1)) <= 1e-15);

    CHECK_THROWS_AS(psi_coefficients(-0.1, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(psi_coefficients(0.1, -1.0, 1.0), std::domain_error);
}

TEST_CASE("phi_coefficients: examples") {
    const auto c = phi_coefficients(pi / 3, 0.0, 10.0, 0.0);
    CHECK(std::abs(c.x[0] - 0.5) <= 1e-15);
    CHECK(std::abs(c.x[1] - std::sqrt(3.0) / 2) <= 1e-15);
    for (int k : {2, 3, 4}) CHECK(std::abs(c.x[k]) <= 1e-15);
    CHECK_THROWS_AS(phi_coefficients(2.0, 0.0, 10.0, 1.0), std::domain_error);
}

TEST_CASE("exact closed forms reproduce numerical propagation") {
    CHECK(propagation_gap(psi_coefficients(pi / 8, 2.0, 1.0), 10.0) <= 1e-10);
    CHECK(propagation_gap(phi_coefficients(pi / 6, 2.0, 10.0, 0.7), 10.0) <= 1e-10);
    for (double alpha : standard_alpha_grid())
        for (double eps : standard_epsilon_grid())
            for (double T : {0.37, 4.1, 19.9}) {
                CHECK(propagation_gap(psi_coefficients(alpha, eps, T), 10.0) <= 1e-10);
                CHECK(propagation_gap(phi_coefficients(alpha, eps, 10.0, T), 10.0) <= 1e-10);
            }
}

TEST_CASE("exact PHI magnitudes at eps = 0 follow the hand-derived cosines") {
    const double w = std::sqrt(10.0);
    for (double alpha : {0.2, pi / 6})
        for (double T : {0.0, 0.5, 1.7, 6.0}) {
            const auto c = phi_coefficients(alpha, 0.0, 10.0, T);
            const double cw = std::cos(w * T), ca = std::cos(alpha);
            CHECK(std::abs(c.x[0]) == doctest::Approx(ca * std::abs(4 + cw) / 5).epsilon(1e-13));
            CHECK(std::abs(c.x[2]) == doctest::Approx(ca * std::abs(std::sin(w * T)) / w).epsilon(1e-13));
            CHECK(std::abs(c.x[4]) == doctest::Approx(ca * 2 * (1 - cw) / 5).epsilon(1e-13));
        }
}

TEST_CASE("published forms: reductions and where they diverge") {
    for (double T : {0.0, 0.4, pi / 2, 2.9}) {
        const auto c = published::phi_coefficients(pi / 3, 0.0, 10.0, T);
        const double ca = std::cos(pi / 3), cT = std::cos(T), sT = std::sin(T);
        CHECK(std::abs(std::abs(c.x[0]) - ca * cT * cT) <= 1e-14);
        CHECK(std::abs(std::abs(c.x[2]) - ca * std::abs(sT * cT)) <= 1e-14);
        CHECK(std::abs(std::abs(c.x[4]) - ca * sT * sT) <= 1e-14);
        CHECK(std::abs(c.norm_squared() - 1.0) <= 1e-12);
    }
    const auto at_half_pi = published::phi_coefficients(pi / 3, 0.0, 10.0, pi / 2);
    CHECK(std::abs(at_half_pi.x[0]) <= 1e-15);
    CHECK(std::abs(at_half_pi.x[4]) == doctest::Approx(0.5).epsilon(1e-14));

    for (double T : {0.3, 1.1, 5.0}) {
        const auto a = published::psi_coefficients(0.5, 0.0, T), b = psi_coefficients(0.5, 0.0, T);
        const auto sym_a = published::psi_coefficients(pi / 4, 3.0, T), sym_b = psi_coefficients(pi / 4, 3.0, T);
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(a.x[k] - b.x[k]) <= 1e-14);
            CHECK(std::abs(std::abs(sym_a.x[k]) - std::abs(sym_b.x[k])) <= 1e-14);
        }
    }
    CHECK(propagation_gap(published::psi_coefficients(pi / 8, 2.0, 1.0), 10.0) > 1e-2);
    CHECK(propagation_gap(published::phi_coefficients(pi / 6, 0.0, 10.0, 0.7), 10.0) > 1e-2);
}

TEST_CASE("closed-form invariants") {
    for (ClosedForm form : {ClosedForm::Exact, ClosedForm::Published})
        for (double alpha : {0.0, 0.3, pi / 4, 1.1, pi / 2})
            for (double eps : {0.0, 0.1, 2.0, 5.0})
                for (double T : {0.0, 0.8, 3.3, 17.0}) {
                    const auto psi = coefficients(Family::Psi, form, alpha, eps, 10.0, T);
                    const auto phi = coefficients(Family::Phi, form, alpha, eps, 10.0, T);
                    CHECK(std::abs(psi.norm_squared() - 1.0) <= 1e-12);
                    CHECK(std::abs(phi.norm_squared() - 1.0) <= 1e-12);
                    CHECK(phi.x[2] == phi.x[3]);
                    if (eps == 0.0) CHECK(std::abs((psi.x[0] * std::conj(psi.x[1])).imag()) <= 1e-12);
                    const auto other_lambda = coefficients(Family::Phi, form, alpha, eps, 3.0, T);
                    for (int k = 0; k < 5; ++k)
                        CHECK(std::abs(std::abs(phi.x[k]) - std::abs(other_lambda.x[k])) <= 1e-13);
                }
}

TEST_CASE("PSI periodicity in 2 pi / kappa") {
    // With eps = 0 the antisymmetric eigenvalue sits midway between the other
    // two, so |x1|, |x2| repeat only after 4 pi / kappa while |x3| and the
    // concurrence repeat after 2 pi / kappa. At alpha = pi/4 every magnitude does.
    for (double alpha : {0.3, 1.0}) {
        const double period = 2 * pi / std::sqrt(8.0);
        for (double T : {0.2, 1.9, 7.3}) {
            const auto a = psi_coefficients(alpha, 0.0, T), b = psi_coefficients(alpha, 0.0, T + period);
            const auto c = psi_coefficients(alpha, 0.0, T + 2 * period);
            CHECK(std::abs(std::abs(a.x[2]) - std::abs(b.x[2])) <= 1e-10);
            CHECK(std::abs(signed_psi_concurrence(a) - signed_psi_concurrence(b)) <= 1e-10);
            for (int k = 0; k < 3; ++k) CHECK(std::abs(std::abs(a.x[k]) - std::abs(c.x[k])) <= 1e-10);
        }
    }
    for (double eps : {2.0, 5.0}) {
        const double period = 2 * pi / std::sqrt(8 + eps * eps);
        for (double T : {0.2, 1.9, 7.3}) {
            const auto a = psi_coefficients(pi / 4, eps, T), b = psi_coefficients(pi / 4, eps, T + period);
            for (int k = 0; k < 3; ++k) CHECK(std::abs(std::abs(a.x[k]) - std::abs(b.x[k])) <= 1e-10);
        }
    }
}

TEST_CASE("assemble_state") {
    const Basis b(2);
    const auto c = phi_coefficients(0.4, 1.0, 10.0, 2.0);
    const auto psi = assemble_state(c, b);
    CHECK(psi[b.index_of("ee00")] == c.x[0]);
    CHECK(psi[b.index_of("gg00")] == c.x[1]);
    CHECK(psi[b.index_of("ge11")] == c.x[2]);
    CHECK(psi[b.index_of("eg11")] == c.x[3]);
    CHECK(psi[b.index_of("gg22")] == c.x[4]);
    CHECK(std::abs(norm(psi) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(assemble_state(c, Basis(1)), std::invalid_argument);
}
