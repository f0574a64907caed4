#include "lioufock/supermaps.hpp"

#include <algorithm>

#include "lioufock/fock.hpp"
#include "lioufock/la.hpp"

namespace lioufock::supermaps {

SuperOp left_mult(const HilbertOp& b) {
    if (!b.square()) throw std::invalid_argument("left_mult: operator must be square");
    return la::kron(b, la::identity(b.rows));
}

SuperOp right_mult(const HilbertOp& b) {
    if (!b.square()) throw std::invalid_argument("right_mult: operator must be square");
    return la::kron(la::identity(b.rows), la::transposed(b));
}

SuperOp parity_superop(const ModeSystem& sys) {
    const HilbertOp p = fock::parity_op(sys);
    return la::matmul(left_mult(p), right_mult(p));
}

int flat_index(const ModeSystem& sys, int nu, int j) {
    if (nu < 0 || nu > 1 || j < 1 || j > sys.n_modes)
        throw std::out_of_range("map index out of range");
    return nu * sys.n_modes + (j - 1);
}

MapFamily bosonic_maps(const ModeSystem& sys) {
    if (sys.stats != Statistics::Bosonic)
        throw std::invalid_argument("bosonic_maps: system statistics is not bosonic");
    MapFamily fam;
    fam.sys = sys;
    fam.lowering.resize(2 * sys.n_modes);
    fam.raising.resize(2 * sys.n_modes);
    for (int j = 1; j <= sys.n_modes; ++j) {
        const HilbertOp a = fock::annihilation_op(sys, j);
        const HilbertOp ad = la::adjoint(a);
        const SuperOp aL = left_mult(a), aR = right_mult(a);
        const SuperOp adL = left_mult(ad), adR = right_mult(ad);
        fam.lowering[flat_index(sys, 0, j)] = aL;
        fam.lowering[flat_index(sys, 1, j)] = adR;
        fam.raising[flat_index(sys, 0, j)] = la::sub(adL, adR);
        fam.raising[flat_index(sys, 1, j)] = la::sub(aR, aL);
    }
    return fam;
}

MapFamily fermionic_maps(const ModeSystem& sys) {
    if (sys.stats != Statistics::Fermionic)
        throw std::invalid_argument("fermionic_maps: system statistics is not fermionic");
    MapFamily fam;
    fam.sys = sys;
    fam.parity = parity_superop(sys);
    fam.lowering.resize(2 * sys.n_modes);
    fam.raising.resize(2 * sys.n_modes);
    for (int j = 1; j <= sys.n_modes; ++j) {
        const HilbertOp c = fock::annihilation_op(sys, j);
        const HilbertOp cd = la::adjoint(c);
        const SuperOp cL = left_mult(c);
        const SuperOp cdL = left_mult(cd);
        // parity conjugation applied after the right multiplication; the overall
        // sign of raising[1,j] makes the graded brackets come out +delta
        const SuperOp pcdR = la::matmul(fam.parity, right_mult(cd));
        const SuperOp pcR = la::matmul(fam.parity, right_mult(c));
        fam.lowering[flat_index(sys, 0, j)] = cL;
        fam.lowering[flat_index(sys, 1, j)] = pcdR;
        fam.raising[flat_index(sys, 0, j)] = la::sub(cdL, pcdR);
        fam.raising[flat_index(sys, 1, j)] = la::sub(cL, pcR);
    }
    return fam;
}

MapFamily adjoint_maps(const ModeSystem& sys) {
    return sys.stats == Statistics::Bosonic ? bosonic_maps(sys) : fermionic_maps(sys);
}

namespace {

// max-abs over the deviation from target*I, full and interior-restricted.
// Interior superoperator rows/cols are index pairs (r,c) with both Fock states
// inside the occupation <= cutoff-1 subspace.
void residuals(const ModeSystem& sys, const CMat& M, double target,
               const std::vector<char>& interior, double& res_interior, double& res_full) {
    double ri = 0.0, rf = 0.0;
#pragma omp parallel for reduction(max : ri, rf) schedule(static)
    for (int r = 0; r < M.rows; ++r) {
        const Cplx* mr = M.row(r);
        for (int c = 0; c < M.cols; ++c) {
            const double v = std::abs(mr[c] - (r == c ? Cplx(target, 0.0) : Cplx(0.0, 0.0)));
            rf = std::max(rf, v);
            if (interior[r] && interior[c]) ri = std::max(ri, v);
        }
    }
    res_interior = ri;
    res_full = rf;
    (void)sys;
}

} // namespace

double AlgebraReport::max_interior() const {
    double m = 0.0;
    for (const auto& b : brackets) m = std::max(m, b.interior);
    for (double v : left_vacuum) m = std::max(m, v);
    for (double v : right_vacuum) m = std::max(m, v);
    for (double v : parity) m = std::max(m, v);
    return m;
}

double AlgebraReport::max_full() const {
    double m = 0.0;
    for (const auto& b : brackets) m = std::max(m, b.full);
    for (double v : left_vacuum) m = std::max(m, v);
    for (double v : right_vacuum) m = std::max(m, v);
    for (double v : parity) m = std::max(m, v);
    return m;
}

AlgebraReport verify_algebra(const MapFamily& maps) {
    const ModeSystem& sys = maps.sys;
    const bool fermi = sys.stats == Statistics::Fermionic;
    const int nmaps = 2 * sys.n_modes;
    const int D = sys.dim;

    std::vector<char> interior(static_cast<size_t>(D) * D, 1);
    if (!fermi) {
        std::vector<char> state(D);
        for (int s = 0; s < D; ++s) state[s] = sys.interior_state(s) ? 1 : 0;
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < D; ++c) interior[static_cast<size_t>(r) * D + c] = state[r] && state[c];
    }

    auto bracket = [&](const CMat& X, const CMat& Y) {
        return fermi ? la::anticommutator(X, Y) : la::commutator(X, Y);
    };

    AlgebraReport rep;
    rep.sys = sys;

    for (int i = 0; i < nmaps; ++i)
        for (int k = 0; k < nmaps; ++k) {
            BracketCheck chk{BracketCheck::MixedBracket, i, k, 0.0, 0.0};
            const CMat br = bracket(maps.lowering[i], maps.raising[k]);
            residuals(sys, br, i == k ? 1.0 : 0.0, interior, chk.interior, chk.full);
            rep.brackets.push_back(chk);
        }
    // same-family pairs vanish; the fermionic diagonal ({c,c} = 2c^2) is informative
    for (int i = 0; i < nmaps; ++i)
        for (int k = fermi ? i : i + 1; k < nmaps; ++k) {
            BracketCheck chk{BracketCheck::LoweringPair, i, k, 0.0, 0.0};
            residuals(sys, bracket(maps.lowering[i], maps.lowering[k]), 0.0, interior,
                      chk.interior, chk.full);
            rep.brackets.push_back(chk);
            chk = BracketCheck{BracketCheck::RaisingPair, i, k, 0.0, 0.0};
            residuals(sys, bracket(maps.raising[i], maps.raising[k]), 0.0, interior, chk.interior,
                      chk.full);
            rep.brackets.push_back(chk);
        }

    const CVec one_bra = fock::bra(fock::identity_op(sys));
    const CVec vac_ket = fock::vec(fock::vacuum_state(sys));
    for (int i = 0; i < nmaps; ++i) {
        rep.left_vacuum.push_back(la::max_abs(la::vecmat(one_bra, maps.raising[i])));
        rep.right_vacuum.push_back(la::max_abs(la::matvec(maps.lowering[i], vac_ket)));
    }

    if (fermi) {
        const SuperOp& P = maps.parity;
        CVec pb = la::vecmat(one_bra, P);
        for (size_t t = 0; t < pb.size(); ++t) pb[t] -= one_bra[t];
        CVec pk = la::matvec(P, vac_ket);
        for (size_t t = 0; t < pk.size(); ++t) pk[t] -= vac_ket[t];
        double anti = 0.0;
        for (int i = 0; i < nmaps; ++i) {
            anti = std::max(anti, la::max_abs(la::anticommutator(P, maps.lowering[i])));
            anti = std::max(anti, la::max_abs(la::anticommutator(P, maps.raising[i])));
        }
        rep.parity = {la::max_abs(pb), la::max_abs(pk), anti};
    }

    return rep;
}

} // namespace lioufock::supermaps
