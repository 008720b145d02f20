#pragma once
// Algebras built from a bilinear pairing <,.> : W (x) V -> 1: the carrier is
// V (x) W with (v(x)w).(v'(x)w') = <w,v'> v(x)w', together with the natural
// one-sided module structures on V and W and an explicit splitting of the
// multiplication through any witness pair with <w,v> = 1.  Every such algebra
// with a nonzero pairing is self-induced; a degenerate pairing makes the
// canonical map into the multipliers non-monic, which the demo exhibits.

#include "sia/smooth_rough.hpp"

namespace sia {

struct PairingSpec {
    std::size_t dimV = 0;
    std::size_t dimW = 0;
    Mat pairing;  // dimW x dimV, entry (w, v) = <w, v>
};

struct PairingAlgebra {
    PairingSpec spec;
    Obj v;
    Obj w;
    Mor b;           // W (x) V -> 1
    Algebra alg;     // carrier V (x) W
    Mor actV;        // A (x) V -> V, a left action
    Mor actW;        // W (x) A -> W, a right action
    Module vModule;  // V as a left A-module
    Module wModule;  // W as a right A-module
    Mor splitting;   // sigma : A -> A (x) A, bimodule section of mu
    bool canonicalMonic;  // the map into the left multipliers is injective
    Report report;
};

// Throws InputError when the pairing matrix is identically zero.
PairingAlgebra build_pairing_algebra(const PairingSpec& spec);

// Exhibits the failure of injectivity over a degenerate pairing: the
// multiplier module M_l has Smooth(M_l) ~= A while the comparison map
// Smooth(M_l) -> M_l drops rank.  Inapplicable (canonicalMonic) over a
// perfect pairing.
struct NonmonicDemo {
    bool canonicalMonic;
    Report report;
};
NonmonicDemo nonmonic_smoothening_demo(const PairingAlgebra& pa);

}  // namespace sia
