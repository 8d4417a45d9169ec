// Benchmark: OpenMP enumeration kernels against the serial reference.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ush/enumeration.hpp"

using namespace ush;

namespace {

double time_ms(bool serial, PieceKind kind, long long p, int k) {
    auto t0 = std::chrono::steady_clock::now();
    Dist d = piece_distribution(Piece{kind, 1, 1}, p, k, serial);
    auto t1 = std::chrono::steady_clock::now();
    volatile u128 sink = d.total();
    (void)sink;
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    struct Case {
        PieceKind kind;
        const char* name;
        long long p;
        int k;
    };
    Case cases[] = {
        {PieceKind::SplitProduct, "split-product", 5, 5},
        {PieceKind::SplitProduct, "split-product", 5, 6},
        {PieceKind::InertNorm, "inert-norm", 5, 6},
        {PieceKind::RamPair, "ramified-pair", 5, 6},
        {PieceKind::InertNorm, "inert-norm", 3, 7},
    };
    std::printf("%-16s %4s %3s %12s %12s %8s\n", "kernel", "p", "k", "serial(ms)", "omp(ms)",
                "speedup");
    for (const auto& c : cases) {
        enumeration_clear_cache();
        double ts = time_ms(true, c.kind, c.p, c.k);
        enumeration_clear_cache();
        double tp = time_ms(false, c.kind, c.p, c.k);
        // equality of the two routes
        Dist a = piece_distribution(Piece{c.kind, 1, 1}, c.p, c.k, true);
        Dist b = piece_distribution(Piece{c.kind, 1, 1}, c.p, c.k, false);
        bool same = a.cnt == b.cnt;
        std::printf("%-16s %4lld %3d %12.1f %12.1f %7.2fx %s\n", c.name, c.p, c.k, ts, tp,
                    ts / tp, same ? "" : "MISMATCH");
        if (!same) return 1;
    }
    return 0;
}
