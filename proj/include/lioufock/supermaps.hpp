#pragma once

#include "lioufock/types.hpp"

namespace lioufock::supermaps {

// rho -> b rho  and  rho -> rho b under row-major vectorization
SuperOp left_mult(const HilbertOp& b);  // b (x) I
SuperOp right_mult(const HilbertOp& b); // I (x) b^T

// parity conjugation rho -> P rho P (fermionic); left_mult(P) * right_mult(P)
SuperOp parity_superop(const ModeSystem& sys);

// The 4n adjoint maps. Flat index i = nu*n + (j-1) with nu in {0,1}, j in [1,n]
// (nu ascending, then j ascending — the canonical order used everywhere).
//
// bosonic:   lowering[0,j] = a_j^L             raising[0,j] = a_j^+L - a_j^+R
//            lowering[1,j] = a_j^+R            raising[1,j] = a_j^R  - a_j^L
// fermionic: lowering[0,j] = c_j^L             raising[0,j] = c_j^+L - P^ c_j^+R
//            lowering[1,j] = P^ c_j^+R         raising[1,j] = c_j^L  - P^ c_j^R
//
// The parity factor multiplies from the left (conjugation applied after the
// right multiplication), and the overall sign of raising[1,j] is fixed so that
// the whole family satisfies the graded bracket {.,.} or [.,.] = delta exactly;
// both choices are validated by property tests rather than assumed.
struct MapFamily {
    ModeSystem sys;
    std::vector<SuperOp> lowering; // size 2n
    std::vector<SuperOp> raising;  // size 2n
    SuperOp parity;                // fermionic only; empty for bosonic
};

int flat_index(const ModeSystem& sys, int nu, int j);

MapFamily bosonic_maps(const ModeSystem& sys);
MapFamily fermionic_maps(const ModeSystem& sys);
MapFamily adjoint_maps(const ModeSystem& sys); // dispatch on sys.stats

// One verified bracket: kind selects {lowering_i, raising_k} - delta_ik,
// {lowering_i, lowering_k} or {raising_i, raising_k} (commutators for bosons).
// `full` is the max-norm residual over the whole superoperator; `interior`
// restricts rows and columns to vectorized index pairs whose bra and ket
// occupations all stay <= cutoff-1 (identical to `full` for fermions).
struct BracketCheck {
    enum Kind { MixedBracket = 0, LoweringPair = 1, RaisingPair = 2 };
    Kind kind;
    int i, k;
    double interior;
    double full;
};

struct AlgebraReport {
    ModeSystem sys;
    std::vector<BracketCheck> brackets;
    std::vector<double> left_vacuum;  // |<<1| raising_i| per flat index, max-abs
    std::vector<double> right_vacuum; // |lowering_i |rho0>| per flat index, max-abs
    std::vector<double> parity;       // fermionic: {bra fix, ket fix, max anticommutation}
    double max_interior() const;
    double max_full() const;
};

AlgebraReport verify_algebra(const MapFamily& maps);

} // namespace lioufock::supermaps
