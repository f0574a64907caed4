#pragma once

#include "lioufock/supermaps.hpp"
#include "lioufock/types.hpp"

namespace lioufock::dual_basis {

// Multi-index over the 2n raising/lowering labels, flat order nu*n + (j-1).
using MultiIndex = std::vector<int>;

// Graded lexicographic enumeration of all m with 0 <= m_i <= m_max:
// total degree ascending, ties broken by ascending lex order of the flat tuple.
// Fermionic systems require m_max == 1; bosonic ones require the truncation
// margin 2*m_max <= cutoff - 2 so construction never touches the edge.
std::vector<MultiIndex> enumerate_indices(const ModeSystem& sys, int m_max);

struct DualBasis {
    ModeSystem sys;
    int m_max = 0;
    std::vector<MultiIndex> indices;
    CMat kets; // D^2 x B; column b = |m_b>
    CMat bras; // B x D^2; row b = <<m_b|
    CMat gram() const; // bras * kets, equals identity when bi-orthonormal
};

// Kets: ordered product of raising maps on vec(rho0); bras: the matching
// lowering maps on <<1| in the opposite factor order, so the innermost
// bra/ket pair contracts first (this is what makes every diagonal pairing +1
// for fermions). Both carry 1/sqrt(m!) per factor (trivial for fermions).
// `factor_order` permutes the product order — bi-orthonormality must survive
// any permutation as long as bra and ket stay mutually reversed, and tests
// rely on that; the default is the canonical order (nu ascending then j
// ascending, rightmost ket factor applied first).
DualBasis build_dual_basis(const supermaps::MapFamily& maps, int m_max);
DualBasis build_dual_basis(const supermaps::MapFamily& maps, int m_max,
                           const std::vector<int>& factor_order);

struct Expansion {
    CVec coeffs;     // one per basis index
    double residual; // l2 distance between the input and its reconstruction
};

// coefficients sigma_m = <<m|rho>; reconstruction sum_m sigma_m |m>
Expansion expand_state(const DualBasis& basis, const HilbertOp& rho);
// coefficients S_m = <<A|m>; reconstruction sum_m S_m <<m|
Expansion expand_observable(const DualBasis& basis, const HilbertOp& A);

HilbertOp state_from_coeffs(const DualBasis& basis, const CVec& sigma);
HilbertOp observable_from_coeffs(const DualBasis& basis, const CVec& S);

} // namespace lioufock::dual_basis
