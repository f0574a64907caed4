#pragma once

#include "lioufock/types.hpp"

namespace lioufock::eig {

struct EigResult {
    CVec values;       // unordered as returned by the solver
    CMat right_vecs;   // column k is the right eigenvector for values[k], unit 2-norm
};

// dense non-Hermitian eigendecomposition (LAPACK zgeev)
EigResult eig(const CMat& A);
CVec eigvals(const CMat& A);

// singular values, descending (LAPACK zgesvd)
std::vector<double> singular_values(const CMat& A);

} // namespace lioufock::eig
