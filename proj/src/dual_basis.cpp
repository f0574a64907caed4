#include "lioufock/dual_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lioufock/fock.hpp"
#include "lioufock/la.hpp"

namespace lioufock::dual_basis {

std::vector<MultiIndex> enumerate_indices(const ModeSystem& sys, int m_max) {
    if (sys.stats == Statistics::Fermionic && m_max != 1)
        throw std::invalid_argument("fermionic basis indices are binary: max-index must be 1");
    if (sys.stats == Statistics::Bosonic) {
        if (m_max < 0) throw std::invalid_argument("max-index must be >= 0");
        if (2 * m_max > sys.cutoff - 2)
            throw std::invalid_argument(
                "max-index too large for cutoff: the construction needs the margin "
                "2*max_index <= cutoff - 2 to stay clear of the truncation edge");
    }
    const int len = 2 * sys.n_modes;
    std::vector<MultiIndex> out;
    MultiIndex m(len, 0);
    while (true) { // odometer: ascending lex, rightmost component fastest
        out.push_back(m);
        int pos = len - 1;
        while (pos >= 0 && m[pos] == m_max) m[pos--] = 0;
        if (pos < 0) break;
        ++m[pos];
    }
    // graded lex: degree ascending, ascending lex within a degree (stable keeps it)
    std::stable_sort(out.begin(), out.end(), [](const MultiIndex& x, const MultiIndex& y) {
        return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
    });
    return out;
}

CMat DualBasis::gram() const { return la::matmul(bras, kets); }

DualBasis build_dual_basis(const supermaps::MapFamily& maps, int m_max) {
    std::vector<int> order(2 * maps.sys.n_modes);
    std::iota(order.begin(), order.end(), 0);
    return build_dual_basis(maps, m_max, order);
}

DualBasis build_dual_basis(const supermaps::MapFamily& maps, int m_max,
                           const std::vector<int>& factor_order) {
    const ModeSystem& sys = maps.sys;
    const int nmaps = 2 * sys.n_modes;
    {
        std::vector<int> sorted = factor_order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> want(nmaps);
        std::iota(want.begin(), want.end(), 0);
        if (sorted != want)
            throw std::invalid_argument("factor_order must permute the flat map indices");
    }

    DualBasis basis;
    basis.sys = sys;
    basis.m_max = m_max;
    basis.indices = enumerate_indices(sys, m_max);
    const int B = static_cast<int>(basis.indices.size());
    const int D2 = sys.dim * sys.dim;
    basis.kets = CMat(D2, B);
    basis.bras = CMat(B, D2);

    const CVec vac = fock::vec(fock::vacuum_state(sys));
    const CVec one = fock::bra(fock::identity_op(sys));

    for (int b = 0; b < B; ++b) {
        const MultiIndex& m = basis.indices[b];
        double norm = 1.0;
        for (int i = 0; i < nmaps; ++i)
            for (int q = 1; q <= m[i]; ++q) norm /= std::sqrt(double(q)); // 1/sqrt(m_i!)

        CVec ket = vac; // rightmost product factor acts first
        for (int pos = nmaps - 1; pos >= 0; --pos) {
            const int idx = factor_order[pos];
            for (int q = 0; q < m[idx]; ++q) ket = la::matvec(maps.raising[idx], ket);
        }
        // bra factors run in the order opposite to the ket's so the innermost
        // pair contracts first; with matching orders a fermionic two-factor
        // diagonal would pick up a stray exchange sign
        CVec brav = one;
        for (int pos = nmaps - 1; pos >= 0; --pos) {
            const int idx = factor_order[pos];
            for (int q = 0; q < m[idx]; ++q) brav = la::vecmat(brav, maps.lowering[idx]);
        }
        for (int t = 0; t < D2; ++t) {
            basis.kets(t, b) = ket[t] * norm;
            basis.bras(b, t) = brav[t] * norm;
        }
    }
    return basis;
}

Expansion expand_state(const DualBasis& basis, const HilbertOp& rho) {
    if (rho.rows != basis.sys.dim)
        throw std::invalid_argument("expand_state: operator dimension mismatch");
    const CVec v = fock::vec(rho);
    Expansion e;
    e.coeffs = la::matvec(basis.bras, v);
    CVec rec = la::matvec(basis.kets, e.coeffs);
    for (size_t t = 0; t < rec.size(); ++t) rec[t] -= v[t];
    e.residual = la::norm2(rec);
    return e;
}

Expansion expand_observable(const DualBasis& basis, const HilbertOp& A) {
    if (A.rows != basis.sys.dim)
        throw std::invalid_argument("expand_observable: operator dimension mismatch");
    const CVec w = fock::bra(A);
    Expansion e;
    e.coeffs = la::vecmat(w, basis.kets);
    CVec rec = la::vecmat(e.coeffs, basis.bras);
    for (size_t t = 0; t < rec.size(); ++t) rec[t] -= w[t];
    e.residual = la::norm2(rec);
    return e;
}

HilbertOp state_from_coeffs(const DualBasis& basis, const CVec& sigma) {
    return fock::devec(la::matvec(basis.kets, sigma), basis.sys.dim);
}

HilbertOp observable_from_coeffs(const DualBasis& basis, const CVec& S) {
    const CVec row = la::vecmat(S, basis.bras); // this row is vec(A^T)
    return la::transposed(fock::devec(row, basis.sys.dim));
}

} // namespace lioufock::dual_basis
