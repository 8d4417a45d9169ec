// p-adic Hermitian lattice models: orbit counts under the maximal unitary
// stabilizer, vector types, volume ratios, the local discrepancy values
// deg_L(X) D_0(y), and the f/B-series of the local arithmetic Siegel-Weil
// identities.
//
// Ramified computations default to the dual lattice convention; the
// standard-lattice values differ by the explicit constant shifts coming from
// the dual/standard Whittaker comparison.
#pragma once

#include <optional>
#include <vector>

#include "ush/enumeration.hpp"
#include "ush/localfield.hpp"
#include "ush/symbolic.hpp"

namespace ush {

enum class LatticeKind { SelfDual, PiModular, AlmostPiModular, DualPiModular, DualAlmostPiModular };

inline bool lattice_kind_dual(LatticeKind k) {
    return k == LatticeKind::DualPiModular || k == LatticeKind::DualAlmostPiModular;
}

struct HermitianLatticeModel {
    LocalPlaceData place;
    int n = 1;  // rank n+1
    LatticeKind kind = LatticeKind::SelfDual;
    int truncation = 0;  // 0: choose automatically

    void validate() const;
};

struct VectorTypeLabel {
    Splitting family = Splitting::Split;
    long long s = 0, t = 0;     // t used only at split places
    bool exceptional = false;   // second type-0 orbit (ramified even, dual lattice)

    bool operator<(const VectorTypeLabel& o) const {
        return std::tie(family, s, t, exceptional) < std::tie(o.family, o.s, o.t, o.exceptional);
    }
    bool operator==(const VectorTypeLabel& o) const {
        return family == o.family && s == o.s && t == o.t && exceptional == o.exceptional;
    }
    std::string str() const;
};

// Closed orbit counts |U_v \ Lambda_{v,a}|.
long long orbit_count_closed(const LocalPlaceData& place, int n, long long r, NormClass cls,
                             bool dual);

// Type of a vector given by its O_F-coordinates in the model basis
// (split/inert: (a_i, b_i) resp. (x0_i, x1_i) pairs; ramified: hyperbolic
// pairs (a0,a1,b0,b1) then, for even n, the unit coordinate (x0,x1)).
VectorTypeLabel vector_type(const HermitianLatticeModel& model, const std::vector<long long>& x);

struct OrbitEnumeration {
    std::vector<VectorTypeLabel> labels;  // realized labels
    long long count = 0;                  // number of distinct labels
};
OrbitEnumeration orbit_count_bruteforce(const HermitianLatticeModel& model, long long r,
                                        NormClass cls);

// vol(U_v)/vol(U_{y,v}) for y of the given type.
struct RatioValue {
    Rational plain;
    int half = 0;  // value = plain * N^{-half/2}
};
RatioValue volume_ratio(const LocalPlaceData& place, int n, const VectorTypeLabel& type,
                        long long r);

// deg_L(X) D_0(y_v) for y of the given type.
SymbolicValue d0_local(const LocalPlaceData& place, const VectorTypeLabel& type, long long r);

// f_{Phi_v,a}(1): closed form, and the independent orbit-type assembly
// sum |a|^n vol-ratio * d0 (with the c_n = -2 N^{-n} constant on the
// exceptional ramified-even coset).
ScaledSymbolic f_series(const LocalPlaceData& place, int n, long long r, NormClass cls, bool dual);
ScaledSymbolic f_series_assembled(const LocalPlaceData& place, int n, long long r, NormClass cls,
                                  bool dual);

// B_{a,v}(1) (zero identically at split places: error there).
ScaledSymbolic b_series(const LocalPlaceData& place, int n, long long r, NormClass cls, bool dual);

// The three degree decompositions sum to sum_{i<=r} N^i.
bool degree_decomposition_check(Splitting kind, long long N, long long r);

// vol(Lambda) in the self-dual measure.
RatioValue lattice_volume(const HermitianLatticeModel& model);

}  // namespace ush
