#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lioufock {

using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

// Dense row-major complex matrix. Used both for Hilbert-space operators (D x D)
// and superoperators (D^2 x D^2); everything stays dense at desk scale.
struct CMat {
    int rows = 0;
    int cols = 0;
    std::vector<Cplx> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Cplx& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Cplx& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    Cplx* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }
    const Cplx* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }

    bool empty() const { return rows == 0 || cols == 0; }
    bool square() const { return rows == cols; }
};

using HilbertOp = CMat; // D x D operator on the mode Hilbert space
using SuperOp = CMat;   // D^2 x D^2 map on vectorized operators

enum class Statistics { Fermionic, Bosonic };

inline const char* to_string(Statistics s) {
    return s == Statistics::Fermionic ? "fermionic" : "bosonic";
}

// n modes, fermionic (local dim 2, Jordan-Wigner ordering with mode 1 outermost)
// or bosonic with a per-mode truncation at `cutoff` quanta (local dim cutoff+1).
// Dense storage is capped at D^2 <= 4096 superoperator dimension.
struct ModeSystem {
    Statistics stats = Statistics::Fermionic;
    int n_modes = 0;
    int cutoff = 1; // bosonic only; >= 2 required there
    int dim = 0;    // D = 2^n or (cutoff+1)^n

    ModeSystem() = default;
    ModeSystem(Statistics s, int n, int cut = 0);

    int mode_dim() const { return stats == Statistics::Fermionic ? 2 : cutoff + 1; }

    // occupation of mode j (1-based, mode 1 outermost) in computational basis state `state`
    int occupation(int state, int j) const;

    // true when every mode occupation is <= cutoff-1 (bosonic); fermionic states are all interior
    bool interior_state(int state) const;

    bool operator==(const ModeSystem&) const = default;
};

} // namespace lioufock
