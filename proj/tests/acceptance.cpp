// Acceptance gate for the library: nine checks, one pass/fail line each.
// Every tolerance is pinned here, next to the check that uses it.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "lioufock/dual_basis.hpp"
#include "lioufock/eig.hpp"
#include "lioufock/fock.hpp"
#include "lioufock/la.hpp"
#include "lioufock/lindblad.hpp"
#include "lioufock/supermaps.hpp"
#include "test_util.hpp"

using namespace lioufock;
using lindblad::QuadraticLindbladModel;
using supermaps::AlgebraReport;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const char* what, double metric, const char* metric_name) {
    std::printf("%s  criterion %d: %s (%s = %.3e)\n", pass ? "PASS" : "FAIL", criterion, what,
                metric_name, metric);
    if (!pass) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: fermionic bracket table, n = 1..4, exact to 1e-13, n=4 under 30 s
void criterion_1(std::vector<AlgebraReport>& fermi_reports) {
    constexpr double tol = 1e-13;
    constexpr double budget_s = 30.0;
    double worst = 0.0, t4 = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        fermi_reports.push_back(
            supermaps::verify_algebra(supermaps::fermionic_maps(ModeSystem(Statistics::Fermionic, n))));
        if (n == 4) t4 = elapsed_s(t0);
        worst = std::max(worst, fermi_reports.back().max_full());
    }
    const bool pass = worst <= tol && t4 < budget_s;
    std::printf("      fermionic n=4 verification took %.2f s (budget %.0f s)\n", t4, budget_s);
    report(1, pass, "fermionic anticommutator table equals delta for n <= 4", worst,
           "max residual");
}

// ---- 2: bosonic bracket table on the interior, n in {1,2} x cutoff in {3,4,5}
void criterion_2(std::vector<AlgebraReport>& bose_reports) {
    constexpr double tol = 1e-12;
    constexpr double budget_s = 60.0;
    double worst = 0.0, t_big = 0.0;
    for (int n : {1, 2})
        for (int cutoff : {3, 4, 5}) {
            const auto t0 = std::chrono::steady_clock::now();
            bose_reports.push_back(supermaps::verify_algebra(
                supermaps::bosonic_maps(ModeSystem(Statistics::Bosonic, n, cutoff))));
            if (n == 2 && cutoff == 5) t_big = elapsed_s(t0);
            worst = std::max(worst, bose_reports.back().max_interior());
        }
    const bool pass = worst <= tol && t_big < budget_s;
    std::printf("      bosonic n=2 cutoff=5 verification took %.2f s (budget %.0f s)\n", t_big,
                budget_s);
    report(2, pass, "bosonic commutator table equals delta on the interior grid", worst,
           "max interior residual");
}

// ---- 3: vacuum conditions on every grid configuration above
void criterion_3(const std::vector<AlgebraReport>& fermi_reports,
                 const std::vector<AlgebraReport>& bose_reports) {
    constexpr double tol_fermi = 1e-13;
    constexpr double tol_bose = 1e-12;
    double worst_f = 0.0, worst_b = 0.0;
    for (const auto& rep : fermi_reports) {
        for (double v : rep.left_vacuum) worst_f = std::max(worst_f, v);
        for (double v : rep.right_vacuum) worst_f = std::max(worst_f, v);
    }
    for (const auto& rep : bose_reports) {
        for (double v : rep.left_vacuum) worst_b = std::max(worst_b, v);
        for (double v : rep.right_vacuum) worst_b = std::max(worst_b, v);
    }
    const bool pass = worst_f <= tol_fermi && worst_b <= tol_bose;
    report(3, pass, "raising maps kill the identity bra, lowering maps kill the vacuum ket",
           std::max(worst_f, worst_b), "max residual");
}

// ---- 4: parity superoperator properties, fermionic n <= 4
void criterion_4(const std::vector<AlgebraReport>& fermi_reports) {
    constexpr double tol = 1e-13;
    double worst = 0.0;
    for (const auto& rep : fermi_reports)
        for (double v : rep.parity) worst = std::max(worst, v);
    report(4, worst <= tol, "parity superoperator fixes both vacua and flips all maps", worst,
           "max residual");
}

// ---- 5: bi-orthonormality of the dual bases
void criterion_5() {
    constexpr double tol_fermi = 1e-13; // full 4^n operator basis
    constexpr double tol_bose = 1e-10;  // interior enumeration
    double worst_f = 0.0, worst_b = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const auto basis =
            dual_basis::build_dual_basis(supermaps::fermionic_maps(ModeSystem(Statistics::Fermionic, n)), 1);
        const int B = static_cast<int>(basis.indices.size());
        worst_f = std::max(worst_f, la::max_abs_diff(basis.gram(), la::identity(B)));
    }
    {
        const auto b1 = dual_basis::build_dual_basis(
            supermaps::bosonic_maps(ModeSystem(Statistics::Bosonic, 1, 6)), 2);
        worst_b = std::max(worst_b, la::max_abs_diff(b1.gram(), la::identity(9)));
        const auto b2 = dual_basis::build_dual_basis(
            supermaps::bosonic_maps(ModeSystem(Statistics::Bosonic, 2, 4)), 1);
        worst_b = std::max(worst_b, la::max_abs_diff(b2.gram(), la::identity(16)));
    }
    const bool pass = worst_f <= tol_fermi && worst_b <= tol_bose;
    report(5, pass, "dual basis Gram matrices equal the identity", std::max(worst_f, worst_b),
           "max |Gram - I|");
}

std::vector<QuadraticLindbladModel> random_grid() {
    std::mt19937 rng(0xacce97);
    std::vector<QuadraticLindbladModel> grid;
    for (int trial = 0; trial < 4; ++trial) {
        grid.push_back(testutil::random_model(Statistics::Fermionic, 1, 0, rng));
        grid.push_back(testutil::random_model(Statistics::Fermionic, 2, 0, rng));
    }
    grid.push_back(testutil::random_model(Statistics::Fermionic, 3, 0, rng));
    grid.push_back(testutil::random_model(Statistics::Fermionic, 3, 0, rng));
    for (int trial = 0; trial < 3; ++trial)
        for (int cutoff : {3, 4, 5})
            grid.push_back(
                testutil::random_model(Statistics::Bosonic, 1, cutoff, rng, /*zero_v=*/true));
    grid.push_back(testutil::random_model(Statistics::Bosonic, 2, 3, rng, /*zero_v=*/true));
    return grid; // 10 fermionic + 10 bosonic
}

// ---- 6: quadratic table rebuilds the assembled superoperator
void criterion_6(const std::vector<QuadraticLindbladModel>& grid) {
    constexpr double tol = 1e-10;
    double worst = 0.0;
    for (const auto& model : grid)
        worst = std::max(worst, lindblad::third_quantize(model, tol).reconstruction_residual);
    report(6, worst <= tol, "normal-form kernels rebuild 20 randomized generators", worst,
           "max rebuild residual");
}

// ---- 7: closed-form steady-state and spectrum oracles
void criterion_7() {
    constexpr double tol_occ = 1e-10;
    constexpr double tol_eig = 1e-9;
    double worst_occ = 0.0, worst_eig = 0.0;

    { // two-bath fermion: gain 0.35, loss 0.9
        const double gain = 0.35, loss = 0.9;
        QuadraticLindbladModel m{ModeSystem(Statistics::Fermionic, 1), la::zeros(1, 1), CMat(), {}};
        m.baths.push_back({CVec{Cplx(std::sqrt(loss), 0)}, CVec{Cplx(0, 0)}});
        m.baths.push_back({CVec{Cplx(0, 0)}, CVec{Cplx(std::sqrt(gain), 0)}});
        const auto result = lindblad::ness(m);
        const Cplx occ = result.degenerate
                             ? Cplx(1e9, 0)
                             : lindblad::expectation(fock::number_op(m.sys, 1), result);
        worst_occ = std::abs(occ - Cplx(gain / (gain + loss), 0));
    }
    { // decaying oscillator at cutoff 4: vacuum steady state, arithmetic spectrum
        const double gamma = 0.6;
        const int cutoff = 4;
        QuadraticLindbladModel m{ModeSystem(Statistics::Bosonic, 1, cutoff), la::zeros(1, 1),
                                 CMat(), {}};
        m.baths.push_back({CVec{Cplx(std::sqrt(gamma), 0)}, CVec{Cplx(0, 0)}});
        const auto result = lindblad::ness(m);
        worst_occ = std::max(worst_occ,
                             result.degenerate
                                 ? 1e9
                                 : la::max_abs_diff(result.rho, fock::vacuum_state(m.sys)));
        std::vector<double> expect;
        for (int p = 0; p <= cutoff; ++p)
            for (int q = 0; q <= cutoff; ++q) expect.push_back(-gamma * (p + q));
        std::sort(expect.begin(), expect.end());
        std::vector<double> got;
        for (const Cplx& v : result.eigenvalues) {
            worst_eig = std::max(worst_eig, std::abs(v.imag()));
            got.push_back(v.real());
        }
        std::sort(got.begin(), got.end());
        for (size_t i = 0; i < got.size(); ++i)
            worst_eig = std::max(worst_eig, std::abs(got[i] - expect[i]));
    }
    const bool pass = worst_occ <= tol_occ && worst_eig <= tol_eig;
    report(7, pass, "closed-form steady states and decay spectra are reproduced",
           std::max(worst_occ, worst_eig), "max oracle deviation");
}

// ---- 8: every steady state on the grid is a density matrix
void criterion_8(const std::vector<QuadraticLindbladModel>& grid) {
    constexpr double tol_trace = 1e-10;
    constexpr double tol_herm = 1e-9;
    constexpr double tol_pos = -1e-8;
    double worst_trace = 0.0, worst_herm = 0.0, min_eig = 0.0;
    bool all_unique = true;
    for (const auto& model : grid) {
        const auto result = lindblad::ness(model);
        if (result.degenerate) {
            all_unique = false;
            continue;
        }
        worst_trace = std::max(worst_trace, std::abs(la::trace(result.rho) - Cplx(1, 0)));
        worst_herm =
            std::max(worst_herm, la::max_abs_diff(result.rho, la::adjoint(result.rho)));
        const CMat herm =
            la::scaled(la::add(result.rho, la::adjoint(result.rho)), Cplx(0.5, 0));
        for (const Cplx& ev : eig::eigvals(herm)) min_eig = std::min(min_eig, ev.real());
    }
    const bool pass =
        all_unique && worst_trace <= tol_trace && worst_herm <= tol_herm && min_eig >= tol_pos;
    std::printf("      grid of 20: |tr-1| <= %.3e, hermiticity <= %.3e, min eigenvalue %.3e\n",
                worst_trace, worst_herm, min_eig);
    report(8, pass, "all randomized steady states are unit-trace, Hermitian, positive",
           std::min(min_eig, 0.0), "min eigenvalue");
}

// ---- 9: duality pairing through the dual-basis coefficients
void criterion_9() {
    constexpr double tol_pair = 1e-9;
    std::mt19937 rng(0xd0a1);
    double worst = 0.0;
    bool cs_ok = true;
    const auto run_pairs = [&](const supermaps::MapFamily& maps, int m_max, int count) {
        const auto basis = dual_basis::build_dual_basis(maps, m_max);
        const int B = static_cast<int>(basis.indices.size());
        for (int trial = 0; trial < count; ++trial) {
            const HilbertOp rho =
                dual_basis::state_from_coeffs(basis, testutil::random_cvec(B, rng));
            const HilbertOp A =
                dual_basis::observable_from_coeffs(basis, testutil::random_cvec(B, rng));
            const CVec sigma = dual_basis::expand_state(basis, rho).coeffs;
            const CVec S = dual_basis::expand_observable(basis, A).coeffs;
            const Cplx pair = la::dot(S, sigma);
            worst = std::max(worst, std::abs(pair - fock::trace_pair(A, rho)));
            double ns = 0.0, nsig = 0.0;
            for (const Cplx& z : S) ns += std::norm(z);
            for (const Cplx& z : sigma) nsig += std::norm(z);
            if (std::abs(pair) > std::sqrt(ns) * std::sqrt(nsig) * (1.0 + 1e-12) + 1e-12)
                cs_ok = false;
        }
    };
    run_pairs(supermaps::fermionic_maps(ModeSystem(Statistics::Fermionic, 2)), 1, 50);
    run_pairs(supermaps::bosonic_maps(ModeSystem(Statistics::Bosonic, 1, 6)), 2, 50);
    const bool pass = worst <= tol_pair && cs_ok;
    report(9, pass, "coefficient contraction equals tr(A rho), within the Cauchy-Schwarz bound",
           worst, "max pairing deviation");
}

} // namespace

int main() {
    std::vector<AlgebraReport> fermi_reports, bose_reports;
    criterion_1(fermi_reports);
    criterion_2(bose_reports);
    criterion_3(fermi_reports, bose_reports);
    criterion_4(fermi_reports);
    criterion_5();
    const auto grid = random_grid();
    criterion_6(grid);
    criterion_7();
    criterion_8(grid);
    criterion_9();
    if (g_failures == 0)
        std::printf("all 9 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
