#pragma once

#include "lioufock/types.hpp"

namespace lioufock::fock {

// Mode operators, 1-based mode label j in [1, n]. Fermionic operators carry the
// Jordan-Wigner string (mode 1 outermost); bosonic ones are plain kron factors
// of the truncated ladder matrix a[k-1,k] = sqrt(k).
HilbertOp annihilation_op(const ModeSystem& sys, int j);
HilbertOp creation_op(const ModeSystem& sys, int j);
HilbertOp number_op(const ModeSystem& sys, int j);
HilbertOp identity_op(const ModeSystem& sys);

// fermionic parity P = exp(i*pi*sum_j n_j) = diag(+-1); defined for both
// statistics (it is diagonal in occupation), used only by the fermionic maps
HilbertOp parity_op(const ModeSystem& sys);

// |psi0><psi0| with all occupations zero
HilbertOp vacuum_state(const ModeSystem& sys);

// Row-major vectorization: vec(rho)[r*D + c] = rho(r,c).
CVec vec(const HilbertOp& X);
// Observable row vector: bra(A) = vec(A^T), so that the duality pairing is a
// plain (unconjugated) dot product against kets.
CVec bra(const HilbertOp& A);
HilbertOp devec(const CVec& v, int dim);

// duality pairing tr(A rho)
Cplx trace_pair(const HilbertOp& A, const HilbertOp& rho);

} // namespace lioufock::fock
