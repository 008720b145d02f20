#pragma once
// Smoothening A (x)_A X and roughening Hom_A(A, X) of left modules, the
// canonical comparison maps they come with, the induced maps on morphisms,
// and the verification suites built on top of them: the 3x3 comparison grid
// with its adjunctions, the homotopy identities over unital algebras, the
// one-sided multiplier algebras, the double centralizer of a pairing, and
// the identification of roughenings of free modules.

#include "sia/balanced.hpp"

namespace sia {

struct Smoothened {
    BalancedTensor bt;  // A (x)_A X
    Module mod;         // the smoothening, as a module
    Mor bar_mu;         // A (x)_A X -> X, descended from the action
};

struct Roughened {
    BalancedHom bh;      // Hom_A(A, X)
    Module mod;          // the roughening, as a module
    Mor bar_mu_dagger;   // X -> Hom_A(A, X), corestricted curried action
};

Smoothened smoothen(const Algebra& a, const Module& x);
Roughened roughen(const Algebra& a, const Module& x);

// Functoriality: the induced map on smoothenings/roughenings.  Both guard
// that f is actually a module map (AxiomError otherwise).
Mor smoothen_mor(const Mor& f, const Smoothened& sx, const Smoothened& sy);
Mor roughen_mor(const Mor& f, const Roughened& rx, const Roughened& ry);

// A is self-induced when multiplication induces A (x)_A A ~= A.
bool is_self_induced(const Algebra& a);

// Smooth/rough membership; only meaningful over a self-induced algebra
// (TypeError otherwise).
bool is_smooth(const Algebra& a, const Module& x);
bool is_rough(const Algebra& a, const Module& x);

// The full comparison grid for x, with the four adjunction bijections run
// against the partner module (default: x itself).
Report theorem_check(const Algebra& a, const Module& x);
Report theorem_check(const Algebra& a, const Module& x, const Module& partner);

// Over a unital algebra the balancing map and the linearity constraint are
// both split by explicit homotopies; checks the two splitting identities.
Report unital_homotopy_check(const Algebra& a, const Module& x);

struct MultiplierAlgebra {
    Algebra alg;        // module maps A -> A under composition
    Presentation pres;  // subspace presentation inside Hom(A, A)
    Mor canonical;      // A -> multiplier carrier
    Report report;
};

// Left multipliers: right multiplications inside Hom_A(A, A) with
// (f.g) = g after f; canonical a -> (b -> ba).
MultiplierAlgebra multiplier_left(const Algebra& a);
// Right multipliers: the same over the opposite algebra with
// (f.g) = f after g; canonical a -> (b -> ab).
MultiplierAlgebra multiplier_right(const Algebra& a);

// Pairs (L, R) with <w, Lv> = <Rw, v>, multiplied by (L,R)(L',R') = (LL', R'R).
struct DoubleCentralizer {
    Algebra alg;
    Presentation pres;  // subspace of End(V) (+) End(W), maps flattened domain-major
};
DoubleCentralizer double_centralizer(std::size_t dimV, std::size_t dimW, const Mat& pairing);

// The multiplier-algebra verification suite for one algebra.
Report multiplier_suite(const Algebra& a);

// Identifies Rough(M_l(A) (x) V) with Hom_A(A, A (x) V) through smoothening,
// rebracketing, and the multiplier identification; the last clause asks for a
// dimension mismatch between M_l(A) (x) V and Hom_A(A, A (x) V), which exact
// finite-dimensional computation never produces (kernels commute with (x) V),
// so it reports its honest failure.
Report free_rough_check(const Algebra& a, std::size_t dimV);

}  // namespace sia
