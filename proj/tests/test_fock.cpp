#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lioufock/fock.hpp"
#include "lioufock/la.hpp"
#include "test_util.hpp"

using namespace lioufock;
using testutil::random_cmat;

namespace {
CMat frozen4(std::initializer_list<double> re) {
    CMat m(4, 4);
    int i = 0;
    for (double x : re) m.a[i++] = Cplx(x, 0.0);
    return m;
}
} // namespace

TEST_CASE("fermionic mode operators carry the string of signs (two modes, explicit)") {
    const ModeSystem sys(Statistics::Fermionic, 2);
    // basis |n1 n2> at index 2*n1 + n2, mode 1 outermost
    const CMat c1 = frozen4({0, 0, 1, 0, //
                             0, 0, 0, 1, //
                             0, 0, 0, 0, //
                             0, 0, 0, 0});
    const CMat c2 = frozen4({0, 1, 0, 0, //
                             0, 0, 0, 0, //
                             0, 0, 0, -1, //
                             0, 0, 0, 0});
    CHECK(la::max_abs_diff(fock::annihilation_op(sys, 1), c1) == 0.0);
    CHECK(la::max_abs_diff(fock::annihilation_op(sys, 2), c2) == 0.0);
    CHECK(la::max_abs_diff(fock::creation_op(sys, 1), la::adjoint(c1)) == 0.0);
}

TEST_CASE("canonical anticommutation relations, three modes") {
    const ModeSystem sys(Statistics::Fermionic, 3);
    const CMat id = fock::identity_op(sys);
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
            const CMat cj = fock::annihilation_op(sys, j);
            const CMat ck = fock::annihilation_op(sys, k);
            const CMat ackd = la::anticommutator(cj, la::adjoint(ck));
            if (j == k)
                CHECK(la::max_abs_diff(ackd, id) <= 1e-15);
            else
                CHECK(la::max_abs(ackd) <= 1e-15);
            CHECK(la::max_abs(la::anticommutator(cj, ck)) <= 1e-15);
        }
}

TEST_CASE("truncated ladder operator: numbers, cross-mode commutation, edge defect") {
    const ModeSystem sys(Statistics::Bosonic, 1, 3);
    const CMat a = fock::annihilation_op(sys, 1);
    const CMat n = fock::number_op(sys, 1);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(n(k, k) - Cplx(k, 0)) <= 1e-15);

    // [a, a^+] = 1 - 4 |3><3| at cutoff 3
    CMat expect = la::identity(4);
    expect(3, 3) = Cplx(-3.0, 0.0);
    CHECK(la::max_abs_diff(la::commutator(a, la::adjoint(a)), expect) <= 1e-15);

    const ModeSystem two(Statistics::Bosonic, 2, 2);
    const CMat a1 = fock::annihilation_op(two, 1), a2 = fock::annihilation_op(two, 2);
    CHECK(la::max_abs(la::commutator(a1, a2)) <= 1e-15);
    CHECK(la::max_abs(la::commutator(a1, la::adjoint(a2))) <= 1e-15);
}

TEST_CASE("parity operator is diagonal, squares to one, conjugates modes to minus themselves") {
    const ModeSystem sys(Statistics::Fermionic, 2);
    const CMat p = fock::parity_op(sys);
    const CMat expect = frozen4({1, 0, 0, 0, //
                                 0, -1, 0, 0, //
                                 0, 0, -1, 0, //
                                 0, 0, 0, 1});
    CHECK(la::max_abs_diff(p, expect) == 0.0);
    CHECK(la::max_abs_diff(la::matmul(p, p), la::identity(4)) == 0.0);
    for (int j = 1; j <= 2; ++j) {
        const CMat c = fock::annihilation_op(sys, j);
        const CMat conj = la::matmul(p, la::matmul(c, p));
        CHECK(la::max_abs_diff(conj, la::scaled(c, Cplx(-1.0, 0.0))) <= 1e-15);
    }
}

TEST_CASE("vacuum projector is annihilated by every lowering operator") {
    for (ModeSystem sys : {ModeSystem(Statistics::Fermionic, 3), ModeSystem(Statistics::Bosonic, 2, 2)}) {
        const CMat rho0 = fock::vacuum_state(sys);
        CHECK(std::abs(la::trace(rho0) - Cplx(1, 0)) <= 1e-15);
        for (int j = 1; j <= sys.n_modes; ++j)
            CHECK(la::max_abs(la::matmul(fock::annihilation_op(sys, j), rho0)) == 0.0);
    }
}

TEST_CASE("vectorization round-trips and the duality pairing is a plain dot") {
    std::mt19937 rng(21);
    const int D = 5;
    const CMat rho = random_cmat(D, D, rng);
    const CMat A = random_cmat(D, D, rng);

    CHECK(la::max_abs_diff(fock::devec(fock::vec(rho), D), rho) == 0.0);

    const Cplx direct = la::trace(la::serial::matmul(A, rho));
    CHECK(std::abs(fock::trace_pair(A, rho) - direct) <= 1e-13);
    CHECK(std::abs(la::dot(fock::bra(A), fock::vec(rho)) - direct) <= 1e-13);
}
