#include "lioufock/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lioufock/eig.hpp"
#include "lioufock/fock.hpp"
#include "lioufock/la.hpp"

namespace lioufock::lindblad {

using supermaps::flat_index;
using supermaps::left_mult;
using supermaps::right_mult;

void validate(const QuadraticLindbladModel& model) {
    const int n = model.sys.n_modes;
    if (model.h_hop.rows != n || model.h_hop.cols != n)
        throw std::invalid_argument("H_hop must be an n_modes x n_modes matrix");
    if (la::max_abs_diff(model.h_hop, la::adjoint(model.h_hop)) > 1e-12)
        throw std::invalid_argument("H_hop must be Hermitian");
    if (!model.h_pair.empty()) {
        if (model.h_pair.rows != n || model.h_pair.cols != n)
            throw std::invalid_argument("H_pair must be an n_modes x n_modes matrix");
        const CMat t = la::transposed(model.h_pair);
        if (model.sys.stats == Statistics::Bosonic) {
            if (la::max_abs_diff(model.h_pair, t) > 1e-12)
                throw std::invalid_argument("H_pair must be symmetric for bosonic statistics");
        } else {
            if (la::max_abs_diff(model.h_pair, la::scaled(t, Cplx(-1.0, 0.0))) > 1e-12)
                throw std::invalid_argument("H_pair must be antisymmetric for fermionic statistics");
        }
    }
    for (size_t mu = 0; mu < model.baths.size(); ++mu) {
        if (static_cast<int>(model.baths[mu].u.size()) != n)
            throw std::invalid_argument("lindblad_ops[" + std::to_string(mu) +
                                        "].u must have length n_modes");
        if (static_cast<int>(model.baths[mu].v.size()) != n)
            throw std::invalid_argument("lindblad_ops[" + std::to_string(mu) +
                                        "].v must have length n_modes");
    }
}

HilbertOp hamiltonian_op(const QuadraticLindbladModel& model) {
    const ModeSystem& sys = model.sys;
    HilbertOp H(sys.dim, sys.dim);
    std::vector<HilbertOp> a(sys.n_modes), ad(sys.n_modes);
    for (int j = 0; j < sys.n_modes; ++j) {
        a[j] = fock::annihilation_op(sys, j + 1);
        ad[j] = la::adjoint(a[j]);
    }
    for (int j = 0; j < sys.n_modes; ++j)
        for (int k = 0; k < sys.n_modes; ++k) {
            const Cplx h = model.h_hop(j, k);
            if (h != Cplx(0.0, 0.0)) la::accumulate(H, h, la::matmul(ad[j], a[k]));
            if (!model.h_pair.empty()) {
                const Cplx d = model.h_pair(j, k);
                if (d != Cplx(0.0, 0.0)) {
                    la::accumulate(H, d, la::matmul(ad[j], ad[k]));
                    la::accumulate(H, std::conj(d), la::matmul(a[k], a[j]));
                }
            }
        }
    return H;
}

HilbertOp bath_op(const QuadraticLindbladModel& model, int mu) {
    const ModeSystem& sys = model.sys;
    if (mu < 0 || mu >= static_cast<int>(model.baths.size()))
        throw std::out_of_range("bath index out of range");
    HilbertOp L(sys.dim, sys.dim);
    for (int j = 0; j < sys.n_modes; ++j) {
        const Cplx u = model.baths[mu].u[j], v = model.baths[mu].v[j];
        const HilbertOp a = fock::annihilation_op(sys, j + 1);
        if (u != Cplx(0.0, 0.0)) la::accumulate(L, u, a);
        if (v != Cplx(0.0, 0.0)) la::accumulate(L, v, la::adjoint(a));
    }
    return L;
}

SuperOp assemble_liouvillean(const QuadraticLindbladModel& model) {
    validate(model);
    const HilbertOp H = hamiltonian_op(model);
    SuperOp acc = la::scaled(la::sub(left_mult(H), right_mult(H)), Cplx(0.0, -1.0));
    for (size_t mu = 0; mu < model.baths.size(); ++mu) {
        const HilbertOp L = bath_op(model, static_cast<int>(mu));
        const HilbertOp Ld = la::adjoint(L);
        const HilbertOp LdL = la::matmul(Ld, L);
        la::accumulate(acc, Cplx(2.0, 0.0), la::matmul(left_mult(L), right_mult(Ld)));
        la::accumulate(acc, Cplx(-1.0, 0.0), left_mult(LdL));
        la::accumulate(acc, Cplx(-1.0, 0.0), right_mult(LdL));
    }
    return acc;
}

namespace {

// One-sided multiplication operator written in the adjoint maps:
// matrix = P^^p * (sum_i lo[i]*lowering_i + hi[i]*raising_i); p is only ever
// set for fermionic right multiplications.
struct SideForm {
    int p = 0;
    CVec lo, hi;
    SideForm(int nmaps) : lo(nmaps, Cplx(0, 0)), hi(nmaps, Cplx(0, 0)) {}
};

struct FormTable {
    // substitution identities: a^L = low(0,j); a^+L = raise(0,j) + low(1,j);
    // a^+R = [P^] low(1,j); a^R = [P^] (low(0,j) +/- raise(1,j))
    // (bosonic ones carry no parity factor and a plus sign)
    std::vector<SideForm> left_low, left_raise, right_low, right_raise;
    FormTable(const ModeSystem& sys) {
        const int nm = 2 * sys.n_modes;
        const bool fermi = sys.stats == Statistics::Fermionic;
        for (int j = 1; j <= sys.n_modes; ++j) {
            const int f0 = flat_index(sys, 0, j), f1 = flat_index(sys, 1, j);
            SideForm ll(nm), lr(nm), rl(nm), rr(nm);
            ll.lo[f0] = Cplx(1, 0);
            lr.hi[f0] = Cplx(1, 0);
            lr.lo[f1] = Cplx(1, 0);
            rr.lo[f1] = Cplx(1, 0);
            rr.p = fermi ? 1 : 0;
            rl.lo[f0] = Cplx(1, 0);
            rl.hi[f1] = fermi ? Cplx(-1, 0) : Cplx(1, 0);
            rl.p = fermi ? 1 : 0;
            left_low.push_back(ll);
            left_raise.push_back(lr);
            right_low.push_back(rl);
            right_raise.push_back(rr);
        }
    }
};

struct KernelAccum {
    QuadraticKernel sector[2];
    KernelAccum(int nmaps) {
        for (auto& k : sector) {
            k.raise_raise = la::zeros(nmaps, nmaps);
            k.mixed = la::zeros(nmaps, nmaps);
            k.lower_lower = la::zeros(nmaps, nmaps);
        }
    }
};

// accumulate w * X * Y, normal-ordering the quadratic part
void add_product(KernelAccum& K, const ModeSystem& sys, Cplx w, const SideForm& X,
                 const SideForm& Y) {
    const bool fermi = sys.stats == Statistics::Fermionic;
    const int nm = 2 * sys.n_modes;
    const int sec = (X.p + Y.p) % 2;
    if (fermi && Y.p == 1) w = -w; // move Y's parity factor left past the linear X block
    QuadraticKernel& k = K.sector[sec];
    const double sign = fermi ? -1.0 : 1.0; // exchange sign for canonicalization

    for (int i = 0; i < nm; ++i) {
        const Cplx xh = X.hi[i], xl = X.lo[i];
        if (xh == Cplx(0, 0) && xl == Cplx(0, 0)) continue;
        for (int kk = 0; kk < nm; ++kk) {
            const Cplx yh = Y.hi[kk], yl = Y.lo[kk];
            // raise_i raise_k
            if (xh != Cplx(0, 0) && yh != Cplx(0, 0)) {
                const Cplx c = w * xh * yh;
                if (i < kk)
                    k.raise_raise(i, kk) += c;
                else if (i > kk)
                    k.raise_raise(kk, i) += sign * c;
                else if (!fermi)
                    k.raise_raise(i, i) += c; // fermionic squares vanish
            }
            // raise_i lower_k — already normal ordered
            if (xh != Cplx(0, 0) && yl != Cplx(0, 0)) k.mixed(i, kk) += w * xh * yl;
            // lower_i raise_k = (+/-) raise_k lower_i + delta_ik
            if (xl != Cplx(0, 0) && yh != Cplx(0, 0)) {
                const Cplx c = w * xl * yh;
                k.mixed(kk, i) += sign * c;
                if (i == kk) k.constant += c;
            }
            // lower_i lower_k
            if (xl != Cplx(0, 0) && yl != Cplx(0, 0)) {
                const Cplx c = w * xl * yl;
                if (i < kk)
                    k.lower_lower(i, kk) += c;
                else if (i > kk)
                    k.lower_lower(kk, i) += sign * c;
                else if (!fermi)
                    k.lower_lower(i, i) += c;
            }
        }
    }
}

} // namespace

SuperOp reconstruct(const ThirdQuantizedForm& form, const supermaps::MapFamily& maps) {
    const ModeSystem& sys = form.sys;
    if (!(maps.sys == sys)) throw std::invalid_argument("reconstruct: map family mismatch");
    const int nm = 2 * sys.n_modes;
    const int D2 = sys.dim * sys.dim;
    SuperOp out = la::zeros(D2, D2);
    const QuadraticKernel* blocks[2] = {&form.unit, &form.parity};
    for (int sec = 0; sec < 2; ++sec) {
        const QuadraticKernel& k = *blocks[sec];
        if (k.raise_raise.empty()) continue;
        SuperOp inner = la::zeros(D2, D2);
        bool any = false;
        for (int i = 0; i < nm; ++i)
            for (int kk = 0; kk < nm; ++kk) {
                if (k.raise_raise(i, kk) != Cplx(0, 0)) {
                    la::accumulate(inner, k.raise_raise(i, kk),
                                   la::matmul(maps.raising[i], maps.raising[kk]));
                    any = true;
                }
                if (k.mixed(i, kk) != Cplx(0, 0)) {
                    la::accumulate(inner, k.mixed(i, kk),
                                   la::matmul(maps.raising[i], maps.lowering[kk]));
                    any = true;
                }
                if (k.lower_lower(i, kk) != Cplx(0, 0)) {
                    la::accumulate(inner, k.lower_lower(i, kk),
                                   la::matmul(maps.lowering[i], maps.lowering[kk]));
                    any = true;
                }
            }
        if (k.constant != Cplx(0, 0)) {
            la::accumulate(inner, k.constant, la::identity(D2));
            any = true;
        }
        if (!any) continue;
        if (sec == 1) {
            if (maps.parity.empty())
                throw std::invalid_argument("reconstruct: parity block present without parity map");
            inner = la::matmul(maps.parity, inner);
        }
        la::accumulate(out, Cplx(1, 0), inner);
    }
    return out;
}

ThirdQuantizedForm third_quantize(const QuadraticLindbladModel& model, double tol) {
    validate(model);
    const ModeSystem& sys = model.sys;
    const int n = sys.n_modes;
    const Cplx I(0.0, 1.0);
    const FormTable t(sys);
    KernelAccum K(2 * n);

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const Cplx h = model.h_hop(j, k);
            if (h != Cplx(0, 0)) {
                add_product(K, sys, -I * h, t.left_raise[j], t.left_low[k]); // -i H^L
                add_product(K, sys, I * h, t.right_low[k], t.right_raise[j]); // +i H^R
            }
            if (!model.h_pair.empty()) {
                const Cplx d = model.h_pair(j, k);
                if (d != Cplx(0, 0)) {
                    add_product(K, sys, -I * d, t.left_raise[j], t.left_raise[k]);
                    add_product(K, sys, I * d, t.right_raise[k], t.right_raise[j]);
                    const Cplx dc = std::conj(d); // + dc a_k a_j
                    add_product(K, sys, -I * dc, t.left_low[k], t.left_low[j]);
                    add_product(K, sys, I * dc, t.right_low[j], t.right_low[k]);
                }
            }
        }

    for (const auto& bath : model.baths)
        for (int j = 0; j < n; ++j) {
            const Cplx u = bath.u[j], v = bath.v[j];
            if (u == Cplx(0, 0) && v == Cplx(0, 0)) continue;
            for (int k = 0; k < n; ++k) {
                const Cplx cu = std::conj(bath.u[k]), cv = std::conj(bath.v[k]);
                // 2 L^L (L^+)^R
                add_product(K, sys, 2.0 * u * cu, t.left_low[j], t.right_raise[k]);
                add_product(K, sys, 2.0 * u * cv, t.left_low[j], t.right_low[k]);
                add_product(K, sys, 2.0 * v * cu, t.left_raise[j], t.right_raise[k]);
                add_product(K, sys, 2.0 * v * cv, t.left_raise[j], t.right_low[k]);
                // -(L^+L)^L and -(L^+L)^R with L^+L expanded termwise; the right
                // version reverses the factor order ((xy)^R = y^R x^R)
                const Cplx cuj = std::conj(bath.u[j]), cvj = std::conj(bath.v[j]);
                const Cplx uk = bath.u[k], vk = bath.v[k];
                add_product(K, sys, -cuj * uk, t.left_raise[j], t.left_low[k]);
                add_product(K, sys, -cuj * vk, t.left_raise[j], t.left_raise[k]);
                add_product(K, sys, -cvj * uk, t.left_low[j], t.left_low[k]);
                add_product(K, sys, -cvj * vk, t.left_low[j], t.left_raise[k]);
                add_product(K, sys, -cuj * uk, t.right_low[k], t.right_raise[j]);
                add_product(K, sys, -cuj * vk, t.right_raise[k], t.right_raise[j]);
                add_product(K, sys, -cvj * uk, t.right_low[k], t.right_low[j]);
                add_product(K, sys, -cvj * vk, t.right_raise[k], t.right_low[j]);
            }
        }

    ThirdQuantizedForm form;
    form.sys = sys;
    form.unit = K.sector[0];
    form.parity = K.sector[1];
    const supermaps::MapFamily maps = supermaps::adjoint_maps(sys);
    form.reconstruction_residual =
        la::max_abs_diff(reconstruct(form, maps), assemble_liouvillean(model));
    form.within_tolerance = form.reconstruction_residual <= tol;
    return form;
}

namespace {
std::vector<int> spectral_order(const CVec& vals) {
    std::vector<int> idx(vals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (vals[a].real() != vals[b].real()) return vals[a].real() > vals[b].real();
        return vals[a].imag() > vals[b].imag();
    });
    return idx;
}
} // namespace

NessResult ness(const QuadraticLindbladModel& model, double null_tol) {
    const SuperOp L = assemble_liouvillean(model);
    const eig::EigResult er = eig::eig(L);
    const int D2 = L.rows;
    const std::vector<int> order = spectral_order(er.values);

    NessResult out;
    out.eigenvalues.reserve(D2);
    for (int i : order) out.eigenvalues.push_back(er.values[i]);

    double scale = 0.0;
    for (const Cplx& v : er.values) scale = std::max(scale, std::abs(v));
    const double thresh = null_tol * std::max(1.0, scale);

    std::vector<int> null_idx;
    for (int i = 0; i < D2; ++i)
        if (std::abs(er.values[i]) <= thresh) null_idx.push_back(i);
    if (null_idx.empty()) { // no eigenvalue inside the tolerance: take the closest and let
        int best = 0;       // the residual field expose the quality honestly
        for (int i = 1; i < D2; ++i)
            if (std::abs(er.values[i]) < std::abs(er.values[best])) best = i;
        null_idx.push_back(best);
    }

    out.null_dim = static_cast<int>(null_idx.size());
    out.degenerate = out.null_dim != 1;
    out.null_basis = CMat(D2, out.null_dim);
    for (int c = 0; c < out.null_dim; ++c)
        for (int r = 0; r < D2; ++r) out.null_basis(r, c) = er.right_vecs(r, null_idx[c]);

    double max_re = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < D2; ++i) {
        if (std::find(null_idx.begin(), null_idx.end(), i) != null_idx.end()) continue;
        max_re = std::max(max_re, er.values[i].real());
    }
    out.spectral_gap = std::isfinite(max_re) ? -max_re : 0.0;
    out.near_degenerate = out.spectral_gap < 1e-8;

    out.residual = 0.0;
    if (!out.degenerate) {
        CVec v(D2);
        for (int r = 0; r < D2; ++r) v[r] = out.null_basis(r, 0);
        const int D = model.sys.dim;
        HilbertOp rho = fock::devec(v, D);
        const Cplx tr = la::trace(rho);
        // a simple zero mode always has nonzero trace (left/right eigenvector
        // bi-orthogonality), so unit-trace normalization is safe here
        rho = la::scaled(rho, Cplx(1.0, 0.0) / tr);
        out.rho = rho;
        out.residual = la::norm2(la::matvec(L, fock::vec(rho)));
    }
    return out;
}

CVec spectrum(const QuadraticLindbladModel& model) {
    const CVec vals = eig::eigvals(assemble_liouvillean(model));
    const std::vector<int> order = spectral_order(vals);
    CVec out;
    out.reserve(vals.size());
    for (int i : order) out.push_back(vals[i]);
    return out;
}

Cplx expectation(const HilbertOp& A, const NessResult& steady) {
    if (steady.degenerate)
        throw std::invalid_argument("expectation: steady state is degenerate (no unique rho)");
    return fock::trace_pair(A, steady.rho);
}

} // namespace lioufock::lindblad
