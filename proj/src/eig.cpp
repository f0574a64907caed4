#include "lioufock/eig.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace lioufock::eig {

namespace {
lapack_complex_double* lp(Cplx* p) { return reinterpret_cast<lapack_complex_double*>(p); }
} // namespace

EigResult eig(const CMat& A) {
    if (!A.square()) throw std::invalid_argument("eig: matrix must be square");
    const int n = A.rows;
    CMat work = A; // zgeev overwrites
    CMat vl(n, n); // unused, but the row-major wrapper insists on a full array
    EigResult r;
    r.values.resize(n);
    r.right_vecs = CMat(n, n);
    const int info =
        LAPACKE_zgeev(LAPACK_ROW_MAJOR, 'N', 'V', n, lp(work.a.data()), n, lp(r.values.data()),
                      lp(vl.a.data()), n, lp(r.right_vecs.a.data()), n);
    if (info != 0) throw std::runtime_error("zgeev failed, info=" + std::to_string(info));
    return r;
}

CVec eigvals(const CMat& A) {
    if (!A.square()) throw std::invalid_argument("eigvals: matrix must be square");
    const int n = A.rows;
    CMat work = A;
    CMat vl(n, n), vr(n, n); // unused with jobvl = jobvr = 'N'
    CVec vals(n);
    const int info = LAPACKE_zgeev(LAPACK_ROW_MAJOR, 'N', 'N', n, lp(work.a.data()), n,
                                   lp(vals.data()), lp(vl.a.data()), n, lp(vr.a.data()), n);
    if (info != 0) throw std::runtime_error("zgeev failed, info=" + std::to_string(info));
    return vals;
}

std::vector<double> singular_values(const CMat& A) {
    CMat work = A;
    const int m = A.rows, n = A.cols;
    CMat u(m, m), vt(n, n); // unused with jobu = jobvt = 'N'
    std::vector<double> s(std::min(m, n));
    std::vector<double> superb(std::max(1, std::min(m, n) - 1));
    const int info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'N', 'N', m, n, lp(work.a.data()), n,
                                    s.data(), lp(u.a.data()), m, lp(vt.a.data()), n, superb.data());
    if (info != 0) throw std::runtime_error("zgesvd failed, info=" + std::to_string(info));
    return s;
}

} // namespace lioufock::eig
