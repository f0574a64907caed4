#pragma once

#include "lioufock/types.hpp"

namespace lioufock::la {

// OpenMP-parallel dense kernels (row-parallel, deterministic per entry: each output
// element is accumulated by exactly one thread in a fixed order regardless of the
// thread count). matmul skips exact-zero left multipliers, which is what keeps the
// kron-structured superoperator products cheap without any sparse storage.
CMat matmul(const CMat& A, const CMat& B);
CMat kron(const CMat& A, const CMat& B);
CVec matvec(const CMat& A, const CVec& x);
CVec vecmat(const CVec& x, const CMat& A); // row vector times matrix

CMat add(const CMat& A, const CMat& B);
CMat sub(const CMat& A, const CMat& B);
CMat scaled(const CMat& A, Cplx z);
void accumulate(CMat& Y, Cplx z, const CMat& X); // Y += z*X

CMat identity(int n);
CMat zeros(int r, int c);
CMat adjoint(const CMat& A);
CMat transposed(const CMat& A);

Cplx trace(const CMat& A);
Cplx dot(const CVec& x, const CVec& y); // plain bilinear dot, no conjugation

double max_abs(const CMat& A);
double max_abs(const CVec& x);
double max_abs_diff(const CMat& A, const CMat& B);
double norm2(const CVec& x);

CMat commutator(const CMat& A, const CMat& B);     // AB - BA
CMat anticommutator(const CMat& A, const CMat& B); // AB + BA

// Textbook single-threaded kernels with no skip logic; kept purely as the
// testing reference for the parallel versions above.
namespace serial {
CMat matmul(const CMat& A, const CMat& B);
CMat kron(const CMat& A, const CMat& B);
CVec matvec(const CMat& A, const CVec& x);
} // namespace serial

} // namespace lioufock::la
