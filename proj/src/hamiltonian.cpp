#include "tcm/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace tcm {

namespace {

double sz(Level l) { return l == Level::Excited ? 1.0 : -1.0; }

}  // namespace

HermitianMatrix build_hamiltonian(const ModelParams& params, const Basis& basis) {
    if (basis.n_max() != params.n_max())
        throw std::invalid_argument("build_hamiltonian: basis and params disagree on n_max");

    const int n_max = basis.n_max();
    HermitianMatrix H(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const BasisState& s = basis.state(i);
        H(i, i) = params.omega_a() * s.n_a + params.omega_b() * s.n_b +
                  0.5 * params.omega_0() * (sz(s.atom_A) + sz(s.atom_B));

        // a_a^+ a_b^+ s_l^- : lower one excited atom, create one photon in each mode.
        if (s.n_a < n_max && s.n_b < n_max) {
            const double pair = params.g() * std::sqrt(static_cast<double>((s.n_a + 1) * (s.n_b + 1)));
            for (int atom = 0; atom < 2; ++atom) {
                BasisState t = s;
                Level& level = atom == 0 ? t.atom_A : t.atom_B;
                if (level != Level::Excited) continue;
                level = Level::Ground;
                ++t.n_a;
                ++t.n_b;
                const std::size_t j = basis.index_of(t);
                H(j, i) += pair;
                H(i, j) += pair;
            }
        }

        // s_A^+ s_B^- maps |g e> to |e g>; its conjugate gives the transpose element.
        if (s.atom_A == Level::Ground && s.atom_B == Level::Excited) {
            const std::size_t j = basis.index_of({Level::Excited, Level::Ground, s.n_a, s.n_b});
            H(j, i) += params.Omega();
            H(i, j) += params.Omega();
        }
    }
    return H;
}

bool check_conservation(const HermitianMatrix& H, const Basis& basis) {
    if (H.dim() != basis.size()) throw std::invalid_argument("check_conservation: dimension mismatch");
    for (std::size_t i = 0; i < H.dim(); ++i) {
        const int Ni = excitation_number(basis.state(i));
        for (std::size_t j = 0; j < H.dim(); ++j)
            if (H(i, j) != Complex{} && excitation_number(basis.state(j)) != Ni) return false;
    }
    return true;
}

SectorBlock restrict_to_sector(const HermitianMatrix& H, const Basis& basis, int N,
                               std::optional<int> mode_imbalance) {
    if (H.dim() != basis.size()) throw std::invalid_argument("restrict_to_sector: dimension mismatch");
    SectorBlock block;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (const auto& s = basis.state(i);
            excitation_number(s) == N && (!mode_imbalance || s.n_a - s.n_b == *mode_imbalance))
            block.indices.push_back(i);
    block.matrix = HermitianMatrix(block.indices.size());
    for (std::size_t r = 0; r < block.indices.size(); ++r)
        for (std::size_t c = 0; c < block.indices.size(); ++c)
            block.matrix(r, c) = H(block.indices[r], block.indices[c]);
    return block;
}

void write_matrix_csv(std::ostream& out, const HermitianMatrix& H, const Basis& basis) {
    if (H.dim() != basis.size()) throw std::invalid_argument("write_matrix_csv: dimension mismatch");
    out << "state";
    for (const auto& s : basis.states()) out << ',' << to_label(s);
    out << '\n';
    char buf[80];
    for (std::size_t i = 0; i < H.dim(); ++i) {
        out << to_label(basis.state(i));
        for (std::size_t j = 0; j < H.dim(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", H(i, j).real(), H(i, j).imag());
            out << ',' << buf;
        }
        out << '\n';
    }
}

}  // namespace tcm
