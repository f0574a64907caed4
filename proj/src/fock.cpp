#include "lioufock/fock.hpp"

#include <cmath>

#include "lioufock/la.hpp"

namespace lioufock::fock {

namespace {

HilbertOp mode_annihilator(const ModeSystem& sys) {
    const int d = sys.mode_dim();
    HilbertOp a(d, d);
    for (int k = 1; k < d; ++k) a(k - 1, k) = Cplx(std::sqrt(double(k)), 0.0);
    return a; // fermionic d=2 reduces to |0><1|
}

// kron chain with `op` at mode j and `fill` on modes before it (identity after)
HilbertOp chain(const ModeSystem& sys, int j, const HilbertOp& op, const HilbertOp& fill) {
    if (j < 1 || j > sys.n_modes)
        throw std::out_of_range("mode label out of range (expected 1 <= j <= n_modes)");
    const int d = sys.mode_dim();
    HilbertOp out = la::identity(1);
    for (int m = 1; m <= sys.n_modes; ++m) { // mode 1 outermost
        const HilbertOp& factor = (m < j) ? fill : (m == j) ? op : la::identity(d);
        out = la::kron(out, factor);
    }
    return out;
}

} // namespace

HilbertOp annihilation_op(const ModeSystem& sys, int j) {
    const HilbertOp a = mode_annihilator(sys);
    if (sys.stats == Statistics::Fermionic) {
        HilbertOp z(2, 2); // Jordan-Wigner string
        z(0, 0) = Cplx(1.0, 0.0);
        z(1, 1) = Cplx(-1.0, 0.0);
        return chain(sys, j, a, z);
    }
    return chain(sys, j, a, la::identity(sys.mode_dim()));
}

HilbertOp creation_op(const ModeSystem& sys, int j) { return la::adjoint(annihilation_op(sys, j)); }

HilbertOp number_op(const ModeSystem& sys, int j) {
    const HilbertOp a = annihilation_op(sys, j);
    return la::matmul(la::adjoint(a), a);
}

HilbertOp identity_op(const ModeSystem& sys) { return la::identity(sys.dim); }

HilbertOp parity_op(const ModeSystem& sys) {
    HilbertOp p(sys.dim, sys.dim);
    for (int s = 0; s < sys.dim; ++s) {
        int total = 0;
        for (int j = 1; j <= sys.n_modes; ++j) total += sys.occupation(s, j);
        p(s, s) = Cplx(total % 2 == 0 ? 1.0 : -1.0, 0.0);
    }
    return p;
}

HilbertOp vacuum_state(const ModeSystem& sys) {
    HilbertOp rho0(sys.dim, sys.dim);
    rho0(0, 0) = Cplx(1.0, 0.0);
    return rho0;
}

CVec vec(const HilbertOp& X) {
    if (!X.square()) throw std::invalid_argument("vec: operator must be square");
    return X.a; // row-major storage is already vec order (r*D + c)
}

CVec bra(const HilbertOp& A) {
    if (!A.square()) throw std::invalid_argument("bra: operator must be square");
    return la::transposed(A).a;
}

HilbertOp devec(const CVec& v, int dim) {
    if (static_cast<int>(v.size()) != dim * dim)
        throw std::invalid_argument("devec: length is not dim^2");
    HilbertOp X(dim, dim);
    X.a = v;
    return X;
}

Cplx trace_pair(const HilbertOp& A, const HilbertOp& rho) {
    if (!A.square() || !rho.square() || A.rows != rho.rows)
        throw std::invalid_argument("trace_pair: dimension mismatch");
    Cplx t(0.0, 0.0);
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) t += A(c, r) * rho(r, c);
    return t;
}

} // namespace lioufock::fock
