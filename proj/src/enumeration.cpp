#include "ush/enumeration.hpp"

#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ush {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Non-residue mod odd prime p (for the inert quadratic t^2 = u at odd p).
long long nonresidue(long long p) {
    for (long long u = 2; u < p; ++u)
        if (legendre_symbol(u, p) == -1) return u;
    throw std::logic_error("no quadratic nonresidue found");
}

// Norm form coefficients for the inert model: Nm(x0 + x1 t) with t a root of
// t^2 - c1 t - c0.  For p odd: t = sqrt(u), u a nonresidue; for p = 2 the
// unramified quadratic extension is generated by t^2 + t + 1 = 0.
void inert_norm_coeffs(long long p, long long& c0, long long& c1) {
    if (p == 2) {
        // Nm(x0 + x1 t) = x0^2 + x0 x1 + x1^2
        c0 = 1;
        c1 = 1;
    } else {
        c0 = nonresidue(p);  // Nm = x0^2 - u x1^2
        c1 = 0;
    }
}

struct CacheKey {
    int tag;  // 0 = piece, 1 = lattice
    std::vector<std::pair<int, long long>> pieces;
    long long p;
    int k;
    bool operator<(const CacheKey& o) const {
        return std::tie(tag, pieces, p, k) < std::tie(o.tag, o.pieces, o.p, o.k);
    }
};

std::map<CacheKey, Dist> g_cache;
std::mutex g_cache_mutex;

template <class Body>
void fill_parallel(std::vector<u128>& out, long long outer, const Body& body, bool serial) {
#ifdef _OPENMP
    if (!serial) {
        int nt = 1;
#pragma omp parallel
        {
#pragma omp single
            nt = omp_get_num_threads();
        }
        std::vector<std::vector<u128>> locals(nt, std::vector<u128>(out.size(), 0));
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < outer; ++i) body(i, locals[omp_get_thread_num()]);
        for (const auto& loc : locals)
            for (size_t j = 0; j < out.size(); ++j) out[j] += loc[j];
        return;
    }
#endif
    (void)serial;
    for (long long i = 0; i < outer; ++i) body(i, out);
}

}  // namespace

Dist piece_distribution(const Piece& piece, long long p, int k, bool serial) {
    PieceKind kind = piece.kind;
    long long unit = piece.unit;
    Dist d;
    d.N = p;
    d.k = k;
    long long M = ipow(p, k);
    d.cnt.assign((size_t)M, 0);
    if (k == 0) {
        d.cnt[0] = 1;
        return d;
    }
    switch (kind) {
        case PieceKind::SplitProduct: {
            fill_parallel(
                d.cnt, M,
                [&](long long a, std::vector<u128>& acc) {
                    for (long long b = 0; b < M; ++b) acc[(size_t)((a * b) % M)] += 1;
                },
                serial);
            break;
        }
        case PieceKind::InertNorm: {
            long long c0, c1;
            inert_norm_coeffs(p, c0, c1);
            bool p2 = (p == 2);
            fill_parallel(
                d.cnt, M,
                [&](long long x0, std::vector<u128>& acc) {
                    for (long long x1 = 0; x1 < M; ++x1) {
                        long long v;
                        if (p2)
                            v = (x0 * x0 + x0 * x1 + x1 * x1) % M;
                        else
                            v = ((x0 * x0 - ((c0 * x1) % M) * x1) % M + M) % M;
                        acc[(size_t)v] += 1;
                    }
                },
                serial);
            break;
        }
        case PieceKind::RamUnit: {
            // u (x0^2 - p x1^2)
            fill_parallel(
                d.cnt, M,
                [&](long long x0, std::vector<u128>& acc) {
                    for (long long x1 = 0; x1 < M; ++x1) {
                        long long v = (x0 * x0 - ((p * x1) % M) * x1) % M;
                        v = ((v % M) * (unit % M)) % M;
                        acc[(size_t)((v + M) % M)] += 1;
                    }
                },
                serial);
            break;
        }
        case PieceKind::RamPair:
        case PieceKind::DualPair: {
            // determinant distribution D = a1 b0 - a0 b1 from two product
            // distributions, then scale by 2pu (RamPair) or -2u (DualPair);
            // scaling by p folds the top digit.
            Dist prod = piece_distribution(Piece{PieceKind::SplitProduct, 1, 1}, p, k, serial);
            std::vector<u128> det((size_t)M, 0);
            fill_parallel(
                det, M,
                [&](long long u1, std::vector<u128>& acc) {
                    for (long long v = 0; v < M; ++v) {
                        long long w = (u1 - v) % M;
                        if (w < 0) w += M;
                        acc[(size_t)w] += prod.cnt[(size_t)u1] * prod.cnt[(size_t)v];
                    }
                },
                serial);
            long long scale = (kind == PieceKind::RamPair) ? (2 * p % M) * unit % M
                                                           : ((-2 * unit) % M + M) % M;
            for (long long c = 0; c < M; ++c) {
                long long w = (c * scale) % M;
                d.cnt[(size_t)w] += det[(size_t)c];
            }
            break;
        }
    }
    if (piece.scale != 1) {
        long long sc = ((piece.scale % M) + M) % M;
        std::vector<u128> folded((size_t)M, 0);
        for (long long c = 0; c < M; ++c) folded[(size_t)((c * sc) % M)] += d.cnt[(size_t)c];
        d.cnt = std::move(folded);
    }
    return d;
}

Dist convolve(const Dist& a, const Dist& b, bool serial) {
    if (a.N != b.N || a.k != b.k) throw std::invalid_argument("convolve: shape mismatch");
    Dist r;
    r.N = a.N;
    r.k = a.k;
    long long M = (long long)a.cnt.size();
    r.cnt.assign((size_t)M, 0);
    fill_parallel(
        r.cnt, M,
        [&](long long u, std::vector<u128>& acc) {
            u128 au = a.cnt[(size_t)u];
            if (au == 0) return;
            for (long long v = 0; v < M; ++v) {
                long long w = u + v;
                if (w >= M) w -= M;
                acc[(size_t)w] += au * b.cnt[(size_t)v];
            }
        },
        serial);
    return r;
}

const Dist& lattice_distribution(const std::vector<Piece>& pieces, long long p, int k) {
    CacheKey key;
    key.tag = 1;
    for (const auto& pc : pieces)
        key.pieces.push_back({(int)pc.kind, pc.unit * 1000003 + pc.scale});
    key.p = p;
    key.k = k;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    Dist acc;
    bool first = true;
    for (const auto& pc : pieces) {
        Dist d = piece_distribution(pc, p, k);
        if (first) {
            acc = std::move(d);
            first = false;
        } else {
            acc = convolve(acc, d);
        }
    }
    if (first) {  // empty lattice: the single zero vector
        acc.N = p;
        acc.k = k;
        acc.cnt.assign((size_t)ipow(p, k), 0);
        acc.cnt[0] = 1;
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache.emplace(std::move(key), std::move(acc)).first->second;
}

BigInt count_congruent(const std::vector<Piece>& pieces, long long p, int j, long long c) {
    if (j < 0) throw std::invalid_argument("count_congruent: negative precision");
    const Dist& d = lattice_distribution(pieces, p, j);
    long long M = (long long)d.cnt.size();
    long long cc = ((c % M) + M) % M;
    u128 v = d.cnt[(size_t)cc];
    BigInt out = (std::uint64_t)(v >> 64);
    out <<= 64;
    out += (std::uint64_t)(v & ~std::uint64_t(0));
    return out;
}

Rational fraction_congruent(const std::vector<Piece>& pieces, long long p, int j, long long c) {
    int arity = 0;
    for (const auto& pc : pieces) arity += piece_arity(pc.kind);
    BigInt cnt = count_congruent(pieces, p, j, c);
    BigInt total = pow_big(BigInt(p), (unsigned long)(arity * j));
    return Rational(cnt, total);
}

void enumeration_clear_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

}  // namespace ush
