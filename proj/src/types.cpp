#include "lioufock/types.hpp"

namespace lioufock {

ModeSystem::ModeSystem(Statistics s, int n, int cut) : stats(s), n_modes(n), cutoff(cut) {
    if (n < 1) throw std::invalid_argument("n_modes must be >= 1");
    if (stats == Statistics::Bosonic) {
        if (cutoff < 2) throw std::invalid_argument("cutoff must be >= 2 for bosonic systems");
    } else {
        cutoff = 1;
    }
    const int d = mode_dim();
    long long D = 1;
    for (int j = 0; j < n_modes; ++j) {
        D *= d;
        if (D > 64) // dense desk-scale cap: D^2 <= 4096
            throw std::invalid_argument(
                "system too large for dense storage (requires dim^2 <= 4096)");
    }
    dim = static_cast<int>(D);
}

int ModeSystem::occupation(int state, int j) const {
    if (j < 1 || j > n_modes) throw std::out_of_range("mode label out of range");
    const int d = mode_dim();
    int div = 1;
    for (int k = 0; k < n_modes - j; ++k) div *= d; // mode 1 outermost
    return (state / div) % d;
}

bool ModeSystem::interior_state(int state) const {
    if (stats == Statistics::Fermionic) return true;
    for (int j = 1; j <= n_modes; ++j)
        if (occupation(state, j) > cutoff - 1) return false;
    return true;
}

} // namespace lioufock
