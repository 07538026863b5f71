// Graded generator alphabets.
//
// The enum order doubles as the global normal-ordering rank: every rewrite
// system in this library sorts words ascending by enum value, and each
// system's alphabet is a contiguous-in-spirit subrange chosen so that all
// rule tables read left-to-right as reductions.

#pragma once

#include <cstdint>
#include <string>

#include "cyclo.hpp"

namespace qplane {

enum class Gen : uint8_t {
    d2y, d2x, dy, dx,        // second and first order differentials
    theta, phi,              // invariant one-forms
    xinv, x, y,              // coordinates
    H, Xop, K, Kinv,         // quantum Lie generators, K = q^-N
    B, A, L, Linv,           // dual algebra, L = q^A
    day, daxinv, dax,        // partial derivatives
};

constexpr int kGenCount = 20;

// Alphabet families; coordinates are shared between the main and omega algebras.
enum Family : unsigned {
    kMain = 1u,
    kOmega = 2u,
    kOperator = 4u,
    kDual = 8u,
    kPartial = 16u,
    kAllFamilies = 31u,
};

inline unsigned family_mask(Gen g) {
    switch (g) {
        case Gen::d2y:
        case Gen::d2x:
        case Gen::dy:
        case Gen::dx: return kMain;
        case Gen::theta:
        case Gen::phi: return kOmega;
        case Gen::xinv:
        case Gen::x:
        case Gen::y: return kMain | kOmega;
        case Gen::H:
        case Gen::Xop:
        case Gen::K:
        case Gen::Kinv: return kOperator;
        case Gen::B:
        case Gen::A:
        case Gen::L:
        case Gen::Linv: return kDual;
        case Gen::day:
        case Gen::daxinv:
        case Gen::dax: return kPartial;
    }
    return 0;
}

/// Z3 grade of a generator.
inline int grade(Gen g) {
    switch (g) {
        case Gen::dx:
        case Gen::dy:
        case Gen::theta:
        case Gen::phi: return 1;
        case Gen::d2x:
        case Gen::d2y: return 2;
        default: return 0;
    }
}

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::d2y: return "d2y";
        case Gen::d2x: return "d2x";
        case Gen::dy: return "dy";
        case Gen::dx: return "dx";
        case Gen::theta: return "theta";
        case Gen::phi: return "phi";
        case Gen::xinv: return "x^-1";
        case Gen::x: return "x";
        case Gen::y: return "y";
        case Gen::H: return "H";
        case Gen::Xop: return "X";
        case Gen::K: return "q^-N";
        case Gen::Kinv: return "q^N";
        case Gen::B: return "B";
        case Gen::A: return "A";
        case Gen::L: return "q^A";
        case Gen::Linv: return "q^-A";
        case Gen::day: return "day";
        case Gen::daxinv: return "dax^-1";
        case Gen::dax: return "dax";
    }
    return "?";
}

inline bool gen_from_name(const std::string& s, Gen& out) {
    for (int k = 0; k < kGenCount; ++k) {
        Gen g = static_cast<Gen>(k);
        if (s == gen_name(g)) {
            out = g;
            return true;
        }
    }
    return false;
}

}  // namespace qplane
