// Exact vector counting in p-adic Hermitian lattice models.
//
// Every lattice model in use is an orthogonal sum of low-rank "pieces"
// whose norm forms have explicit polynomial coordinates over O_F/p^k:
//
//   split rank-1 piece   q(a,b)   = a*b                  on (Z/p^k)^2
//   inert rank-1 piece   q(x0,x1) = Nm(x0 + x1 t)        on (Z/p^k)^2
//   ramified unit piece  q(x0,x1) = u (x0^2 - p x1^2)    on (Z/p^k)^2
//   ramified pair piece  q        = 2 p u (a1 b0 - a0 b1) on (Z/p^k)^4
//   dual pair piece      q        = -2 u (a1 b0 - a0 b1)  on (Z/p^k)^4
//
// (model E_v = F_v(pi), pi^2 = p, conj(pi) = -pi, so Nm(x0+x1 pi) =
// x0^2 - p x1^2 and q(aX+bY) = (a conj(b) - conj(a) b) pi = 2 p (a1b0-a0b1)
// on a hyperbolic pair with <X,Y> = pi).
//
// The value distribution of each piece mod p^k is filled by brute
// enumeration of all coordinate tuples (OpenMP, with a serial reference
// twin kept for testing), and the full-lattice distribution is the
// convolution of the pieces.  Counts are exact: intermediate distributions
// fit unsigned __int128, final folds use BigInt.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ush/localfield.hpp"

namespace ush {

using u128 = unsigned __int128;

enum class PieceKind { SplitProduct, InertNorm, RamUnit, RamPair, DualPair };

struct Piece {
    PieceKind kind;
    long long unit = 1;   // for RamUnit / RamPair / DualPair: the unit u (mod p)
    long long scale = 1;  // extra integer scaling of the form value (may be negative)
};

// Value distribution over Z/p^k: cnt[c] = number of coordinate tuples whose
// form value is congruent to c mod p^k.
struct Dist {
    long long N = 2;
    int k = 0;
    std::vector<u128> cnt;  // size N^k
    u128 total() const {
        u128 t = 0;
        for (u128 c : cnt) t += c;
        return t;
    }
};

// Number of coordinate slots of a piece over O_F (2 or 4).
inline int piece_arity(PieceKind k) { return (k == PieceKind::RamPair || k == PieceKind::DualPair) ? 4 : 2; }

// Piece distribution mod p^k; set serial = true to use the reference
// implementation instead of the OpenMP kernels.
Dist piece_distribution(const Piece& piece, long long p, int k, bool serial = false);

// Convolution c[w] = sum_{u+v=w} a[u] b[v] over Z/p^k.
Dist convolve(const Dist& a, const Dist& b, bool serial = false);

// Full-lattice distribution: convolution of the pieces mod p^k.  Results are
// cached per (pieces, p, k).
const Dist& lattice_distribution(const std::vector<Piece>& pieces, long long p, int k);

// #| { x in L/p^k L : q(x) = c mod p^j } | for j <= k, using the mod-p^j
// distribution directly (the form value mod p^j only depends on x mod p^j).
BigInt count_congruent(const std::vector<Piece>& pieces, long long p, int j, long long c);

// Fraction vol{ x in L : q(x) = c mod p^j } / vol(L), exact.
Rational fraction_congruent(const std::vector<Piece>& pieces, long long p, int j, long long c);

void enumeration_clear_cache();

}  // namespace ush
