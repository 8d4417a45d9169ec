// Local place data: residue cardinality, splitting behavior in E/F, and the
// different exponent over Q.  Ramified places are tame by standing
// assumption, so they carry odd residue characteristic and e = 0.
#pragma once

#include <string>

#include "ush/rational.hpp"

namespace ush {

enum class Splitting { Split, Inert, Ramified };

inline const char* splitting_name(Splitting s) {
    switch (s) {
        case Splitting::Split: return "split";
        case Splitting::Inert: return "inert";
        default: return "ramified";
    }
}

struct LocalPlaceData {
    long long N = 2;           // residue cardinality, power of p
    Splitting splitting = Splitting::Split;
    int e = 0;                 // valuation of the local different of F_v/Q_p
    long long p = 2;           // rational prime below v

    LocalPlaceData() = default;
    LocalPlaceData(long long N_, Splitting sp, int e_, long long p_, bool relax = false)
        : N(N_), splitting(sp), e(e_), p(p_) {
        validate(relax);
    }

    void validate(bool relax = false) const {
        if (N < 2) throw std::invalid_argument("residue cardinality must be >= 2");
        if (!is_prime_ll(p)) throw std::invalid_argument("p must be prime");
        long long q = N;
        while (q % p == 0) q /= p;
        if (q != 1) throw std::invalid_argument("N must be a power of p");
        if (e < 0) throw std::invalid_argument("different exponent must be >= 0");
        if (splitting == Splitting::Ramified && !relax) {
            if (e != 0)
                throw std::invalid_argument(
                    "ramified place must have trivial different (override to relax)");
            if (p == 2)
                throw std::invalid_argument(
                    "ramified place must have odd residue characteristic (tameness)");
        }
    }

    // |d_v| = N^{-e} as an exact rational.
    Rational abs_different() const { return pow_rat(N, -e); }
};

enum class SchwartzKind { Standard, Dual, SelfDual };

inline const char* schwartz_name(SchwartzKind k) {
    switch (k) {
        case SchwartzKind::Standard: return "standard";
        case SchwartzKind::Dual: return "dual";
        default: return "self-dual";
    }
}

enum class NormClass { InClass, OutOfClass, NotApplicable };

inline const char* norm_class_name(NormClass c) {
    switch (c) {
        case NormClass::InClass: return "in";
        case NormClass::OutOfClass: return "out";
        default: return "n/a";
    }
}

}  // namespace ush
