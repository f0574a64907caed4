#pragma once

#include "lioufock/supermaps.hpp"
#include "lioufock/types.hpp"

namespace lioufock::lindblad {

// L_mu = sum_j u_j a_j + v_j a^+_j
struct BathOperator {
    CVec u, v; // length n each
};

// H = sum_jk h_jk a^+_j a_k + sum_jk (delta_jk a^+_j a^+_k + h.c.)
// h Hermitian; delta symmetric for bosons, antisymmetric for fermions.
struct QuadraticLindbladModel {
    ModeSystem sys;
    CMat h_hop;  // n x n
    CMat h_pair; // n x n or empty (treated as zero)
    std::vector<BathOperator> baths;
};

// throws std::invalid_argument naming the offending field
void validate(const QuadraticLindbladModel& model);

HilbertOp hamiltonian_op(const QuadraticLindbladModel& model);
HilbertOp bath_op(const QuadraticLindbladModel& model, int mu); // 0-based

// L^ vec(rho) = vec(-i[H,rho] + sum_mu (2 L rho L^+ - {L^+L, rho})),
// built entirely from left_mult/right_mult.
SuperOp assemble_liouvillean(const QuadraticLindbladModel& model);

// Normal-ordered quadratic kernel over the flat map index (2n x 2n blocks):
// sum_{i<=k} rr(i,k) raise_i raise_k + sum_{i,k} mixed(i,k) raise_i lower_k
// + sum_{i<=k} ll(i,k) lower_i lower_k + constant. Fermionic canonical storage
// is strictly upper triangular for rr/ll (squares vanish).
struct QuadraticKernel {
    CMat raise_raise;
    CMat mixed;
    CMat lower_lower;
    Cplx constant{0.0, 0.0};
};

// L^ = N(unit) + P^ * N(parity). The parity block is identically zero for
// bosons. Raising-led terms annihilate <<1| termwise; the lower_lower blocks
// come out equal and opposite between the two sectors, i.e. they enter as
// (1 - P^)(...) which also kills <<1| — trace preservation is manifest.
struct ThirdQuantizedForm {
    ModeSystem sys;
    QuadraticKernel unit;
    QuadraticKernel parity;
    double reconstruction_residual = 0.0; // max-norm vs assemble_liouvillean
    bool within_tolerance = false;        // residual <= tol (non-quadratic signal when false)
};

ThirdQuantizedForm third_quantize(const QuadraticLindbladModel& model, double tol = 1e-10);
SuperOp reconstruct(const ThirdQuantizedForm& form, const supermaps::MapFamily& maps);

struct NessResult {
    HilbertOp rho;         // unit trace; empty when degenerate
    CVec eigenvalues;      // full spectrum, Re descending (ties: Im descending)
    double spectral_gap;   // -max Re over nonzero modes
    int null_dim;
    bool degenerate;       // null_dim != 1 — no silent choice, null_basis carries everything
    bool near_degenerate;  // spectral_gap < 1e-8
    double residual;       // ||L^ vec(rho)||_2 for the returned rho (0 when degenerate)
    CMat null_basis;       // D^2 x null_dim raw null vectors
};

NessResult ness(const QuadraticLindbladModel& model, double null_tol = 1e-10);

// eigenvalues of L^, Re descending (ties: Im descending)
CVec spectrum(const QuadraticLindbladModel& model);

Cplx expectation(const HilbertOp& A, const NessResult& steady);

} // namespace lioufock::lindblad
