#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "tcm/matrix.hpp"
#include "tcm/model.hpp"

namespace tcm {

// H = sum_i w_i a_i^+ a_i + (w_0/2) sum_l sz_l
//     + g sum_l (a_a^+ a_b^+ s_l^- + a_a a_b s_l^+) + Omega (s_A^+ s_B^- + s_B^+ s_A^-)
// in physical units on the truncated basis. Pair creations that would exceed
// n_max are dropped. Since n_a - n_b is conserved as well, this is exact for
// vacuum-field initial states whose excitation number N satisfies N/2 <= n_max.
HermitianMatrix build_hamiltonian(const ModelParams& params, const Basis& basis);

// True iff no nonzero element couples states of different excitation number.
bool check_conservation(const HermitianMatrix& H, const Basis& basis);

struct SectorBlock {
    HermitianMatrix matrix;
    std::vector<std::size_t> indices;  // global basis index of each sector row
};

// Submatrix on {s : excitation_number(s) == N}. An empty sector yields a 0x0 block.
// The mode imbalance n_a - n_b is conserved too; passing it selects the
// block reachable from a given state (0 for vacuum-field initial states).
SectorBlock restrict_to_sector(const HermitianMatrix& H, const Basis& basis, int N,
                               std::optional<int> mode_imbalance = std::nullopt);

// Debug dump: header row of basis labels, then one row per basis state with
// entries written as "re+imi".
void write_matrix_csv(std::ostream& out, const HermitianMatrix& H, const Basis& basis);

}  // namespace tcm
