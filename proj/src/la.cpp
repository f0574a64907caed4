#include "lioufock/la.hpp"

#include <algorithm>
#include <cmath>

namespace lioufock::la {

namespace {
void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
} // namespace

CMat matmul(const CMat& A, const CMat& B) {
    require(A.cols == B.rows, "matmul: inner dimensions differ");
    CMat C(A.rows, B.cols);
    const int n = B.cols;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < A.rows; ++i) {
        Cplx* ci = C.row(i);
        const Cplx* ai = A.row(i);
        for (int k = 0; k < A.cols; ++k) {
            const double ar = ai[k].real(), aim = ai[k].imag();
            if (ar == 0.0 && aim == 0.0) continue; // kron-structured inputs are mostly zero
            const Cplx* bk = B.row(k);
            for (int j = 0; j < n; ++j) {
                const double br = bk[j].real(), bi = bk[j].imag();
                ci[j] += Cplx(ar * br - aim * bi, ar * bi + aim * br);
            }
        }
    }
    return C;
}

CMat kron(const CMat& A, const CMat& B) {
    CMat C(A.rows * B.rows, A.cols * B.cols);
#pragma omp parallel for collapse(2) schedule(static)
    for (int ia = 0; ia < A.rows; ++ia)
        for (int ib = 0; ib < B.rows; ++ib) {
            Cplx* crow = C.row(ia * B.rows + ib);
            const Cplx* brow = B.row(ib);
            const Cplx* arow = A.row(ia);
            for (int ja = 0; ja < A.cols; ++ja) {
                const double ar = arow[ja].real(), aim = arow[ja].imag();
                if (ar == 0.0 && aim == 0.0) continue;
                Cplx* dst = crow + static_cast<size_t>(ja) * B.cols;
                for (int jb = 0; jb < B.cols; ++jb) {
                    const double br = brow[jb].real(), bi = brow[jb].imag();
                    dst[jb] = Cplx(ar * br - aim * bi, ar * bi + aim * br);
                }
            }
        }
    return C;
}

CVec matvec(const CMat& A, const CVec& x) {
    require(A.cols == static_cast<int>(x.size()), "matvec: dimension mismatch");
    CVec y(A.rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < A.rows; ++i) {
        Cplx acc(0.0, 0.0);
        const Cplx* ai = A.row(i);
        for (int k = 0; k < A.cols; ++k) acc += ai[k] * x[k];
        y[i] = acc;
    }
    return y;
}

CVec vecmat(const CVec& x, const CMat& A) {
    require(A.rows == static_cast<int>(x.size()), "vecmat: dimension mismatch");
    CVec y(A.cols, Cplx(0.0, 0.0));
    for (int i = 0; i < A.rows; ++i) {
        const Cplx xi = x[i];
        if (xi == Cplx(0.0, 0.0)) continue;
        const Cplx* ai = A.row(i);
        for (int j = 0; j < A.cols; ++j) y[j] += xi * ai[j];
    }
    return y;
}

CMat add(const CMat& A, const CMat& B) {
    require(A.rows == B.rows && A.cols == B.cols, "add: shape mismatch");
    CMat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

CMat sub(const CMat& A, const CMat& B) {
    require(A.rows == B.rows && A.cols == B.cols, "sub: shape mismatch");
    CMat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

CMat scaled(const CMat& A, Cplx z) {
    CMat C = A;
    for (auto& v : C.a) v *= z;
    return C;
}

void accumulate(CMat& Y, Cplx z, const CMat& X) {
    require(Y.rows == X.rows && Y.cols == X.cols, "accumulate: shape mismatch");
    for (size_t i = 0; i < Y.a.size(); ++i) Y.a[i] += z * X.a[i];
}

CMat identity(int n) {
    CMat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = Cplx(1.0, 0.0);
    return I;
}

CMat zeros(int r, int c) { return CMat(r, c); }

CMat adjoint(const CMat& A) {
    CMat C(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C(j, i) = std::conj(A(i, j));
    return C;
}

CMat transposed(const CMat& A) {
    CMat C(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C(j, i) = A(i, j);
    return C;
}

Cplx trace(const CMat& A) {
    Cplx t(0.0, 0.0);
    for (int i = 0; i < std::min(A.rows, A.cols); ++i) t += A(i, i);
    return t;
}

Cplx dot(const CVec& x, const CVec& y) {
    require(x.size() == y.size(), "dot: length mismatch");
    Cplx t(0.0, 0.0);
    for (size_t i = 0; i < x.size(); ++i) t += x[i] * y[i];
    return t;
}

double max_abs(const CMat& A) {
    double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
    for (int i = 0; i < A.rows; ++i) {
        const Cplx* ai = A.row(i);
        for (int j = 0; j < A.cols; ++j) m = std::max(m, std::abs(ai[j]));
    }
    return m;
}

double max_abs(const CVec& x) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const CMat& A, const CMat& B) {
    require(A.rows == B.rows && A.cols == B.cols, "max_abs_diff: shape mismatch");
    double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
    for (int i = 0; i < A.rows; ++i) {
        const Cplx* ai = A.row(i);
        const Cplx* bi = B.row(i);
        for (int j = 0; j < A.cols; ++j) m = std::max(m, std::abs(ai[j] - bi[j]));
    }
    return m;
}

double norm2(const CVec& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

CMat commutator(const CMat& A, const CMat& B) { return sub(matmul(A, B), matmul(B, A)); }
CMat anticommutator(const CMat& A, const CMat& B) { return add(matmul(A, B), matmul(B, A)); }

namespace serial {

CMat matmul(const CMat& A, const CMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matmul: inner dimensions differ");
    CMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) {
            Cplx acc(0.0, 0.0);
            for (int k = 0; k < A.cols; ++k) acc += A(i, k) * B(k, j);
            C(i, j) = acc;
        }
    return C;
}

CMat kron(const CMat& A, const CMat& B) {
    CMat C(A.rows * B.rows, A.cols * B.cols);
    for (int ia = 0; ia < A.rows; ++ia)
        for (int ja = 0; ja < A.cols; ++ja)
            for (int ib = 0; ib < B.rows; ++ib)
                for (int jb = 0; jb < B.cols; ++jb)
                    C(ia * B.rows + ib, ja * B.cols + jb) = A(ia, ja) * B(ib, jb);
    return C;
}

CVec matvec(const CMat& A, const CVec& x) {
    if (A.cols != static_cast<int>(x.size()))
        throw std::invalid_argument("matvec: dimension mismatch");
    CVec y(A.rows, Cplx(0.0, 0.0));
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) y[i] += A(i, k) * x[k];
    return y;
}

} // namespace serial

} // namespace lioufock::la
