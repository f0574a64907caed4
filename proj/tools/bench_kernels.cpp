// Timing comparison between the OpenMP kernels and their serial reference
// twins. Each case is verified for agreement before the timing is trusted.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "lioufock/la.hpp"

using namespace lioufock;

namespace {

CMat random_mat(int rows, int cols, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = Cplx(dist(rng), dist(rng));
    return m;
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void bench_matmul(int size, std::mt19937& rng) {
    const CMat a = random_mat(size, size, rng);
    const CMat b = random_mat(size, size, rng);
    CMat c_par, c_ser;
    const double t_par = time_best_of(3, [&] { c_par = la::matmul(a, b); });
    const double t_ser = time_best_of(3, [&] { c_ser = la::serial::matmul(a, b); });
    const double dev = la::max_abs_diff(c_par, c_ser);
    std::printf("matmul  %4dx%-4d  parallel %8.3f ms  serial %8.3f ms  speedup %5.2fx  agreement %.1e\n",
                size, size, 1e3 * t_par, 1e3 * t_ser, t_ser / t_par, dev);
}

void bench_kron(int size, std::mt19937& rng) {
    const CMat a = random_mat(size, size, rng);
    const CMat b = random_mat(size, size, rng);
    CMat c_par, c_ser;
    const double t_par = time_best_of(3, [&] { c_par = la::kron(a, b); });
    const double t_ser = time_best_of(3, [&] { c_ser = la::serial::kron(a, b); });
    const double dev = la::max_abs_diff(c_par, c_ser);
    std::printf("kron    %4dx%-4d  parallel %8.3f ms  serial %8.3f ms  speedup %5.2fx  agreement %.1e\n",
                size, size, 1e3 * t_par, 1e3 * t_ser, t_ser / t_par, dev);
}

void bench_matvec(int size, std::mt19937& rng) {
    const CMat a = random_mat(size, size, rng);
    const CMat xm = random_mat(size, 1, rng);
    CVec x(size);
    for (int i = 0; i < size; ++i) x[i] = xm(i, 0);
    CVec y_par, y_ser;
    const double t_par = time_best_of(5, [&] { y_par = la::matvec(a, x); });
    const double t_ser = time_best_of(5, [&] { y_ser = la::serial::matvec(a, x); });
    double dev = 0.0;
    for (int i = 0; i < size; ++i) dev = std::max(dev, std::abs(y_par[i] - y_ser[i]));
    std::printf("matvec  %4dx%-4d  parallel %8.3f ms  serial %8.3f ms  speedup %5.2fx  agreement %.1e\n",
                size, size, 1e3 * t_par, 1e3 * t_ser, t_ser / t_par, dev);
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::mt19937 rng(0x5eed);
    for (int size : {64, 128, 256}) bench_matmul(size, rng);
    for (int size : {8, 16, 32}) bench_kron(size, rng);
    for (int size : {256, 1024}) bench_matvec(size, rng);
    return 0;
}
