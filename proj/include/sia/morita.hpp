#pragma once
// Bimodule-induced functors between module categories over two algebras:
// objectwise/morphismwise tensor and hom functors, preservation of smooth
// and rough modules, the smoothened tensor-hom adjunction, Morita
// equivalence witnesses with a full verification suite, the two adjoint
// functor pairs induced by an algebra homomorphism, and the reconstruction
// of a bimodule from a tabulated cokernel-preserving functor.

#include "sia/pairing.hpp"
#include "sia/smooth_rough.hpp"

namespace sia {

// Objectwise functor actions: M (x)_B X for an (A,B)-bimodule m and a left
// B-module x (giving a left A-module), and Hom_B(M, Y) for a (B,A)-bimodule
// m and a left B-module y (giving a left A-module).
BalancedTensor tensor_functor(const Module& m, const Module& x);
BalancedHom hom_functor(const Module& m, const Module& y);

// Morphismwise actions: the map induced between two objectwise results by a
// module map f between the plain arguments (given on carriers).
Mor tensor_functor_mor(const BalancedTensor& fx, const BalancedTensor& fy, const Mor& f);
Mor hom_functor_mor(const BalancedHom& fx, const BalancedHom& fy, const Mor& f);

// Preservation of smoothness/roughness through the two functors, reported as
// implications so that a failing premise is recorded rather than assumed:
//   - when m is an (A,B)-bimodule and y a left B-module: if m is smooth as a
//     left A-module then m (x)_B y is a smooth A-module; plus the rebracket
//     Smooth_A(M (x)_B Y) ~= Smooth_A(M) (x)_B Y, valid for any m.
//   - when m is a (B,A)-bimodule and y a left B-module: if m is smooth as a
//     right A-module then Hom_B(M, Y) is a rough A-module; plus the
//     rebracket Rough_A(Hom_B(M, Y)) ~= Hom_B(M (x)_A A, Y).
// Both clauses run when both typings apply; TypeError when neither does.
Report smooth_rough_preservation(const Module& m, const Module& y);

// C_A(M (x)_B X, Y) ~= C_B(X, Smooth_B(Hom_A(M, Y))) for an (A,B)-bimodule
// m, a left B-module x and a left A-module y; the bijection factors the
// plain tensor-hom adjunction through the canonical Smooth_B(W) -> W.
struct SmoothenedHomAdjunction {
    TensorHomAdjunction base;  // C_A(M (x)_B X, Y) ~= C_B(X, Hom_A(M, Y))
    Smoothened smoothHom;      // Smooth_B(Hom_A(M, Y))
    Presentation rhs;          // C_B(X, Smooth_B(Hom_A(M, Y)))
    Mor bijection;             // base.lhs.obj -> rhs.obj
    Report report;
};
SmoothenedHomAdjunction smoothened_hom_adjunction(const Module& m, const Module& x,
                                                  const Module& y);

// Runs the adjunction over smoothened samples and checks the naturality
// squares against every basis morphism between consecutive samples.
Report smoothened_hom_adjunction_suite(const Module& m, const std::vector<Module>& xs,
                                       const std::vector<Module>& ys);

// A Morita equivalence witness between two self-induced algebras: bimodules
// P (over A,B) and Q (over B,A), smooth on both sides, with bimodule
// isomorphisms P (x)_B Q ~= A and Q (x)_A P ~= B given on the plain tensor
// spaces (they are checked to descend).
struct MoritaWitness {
    Algebra algA;
    Algebra algB;
    Module p;   // (A,B)-bimodule
    Module q;   // (B,A)-bimodule
    Mor isoPQ;  // P (x) Q -> A on the plain tensor space
    Mor isoQP;  // Q (x) P -> B on the plain tensor space
};

// Full verification: witness invariants (self-inducedness, two-sided
// smoothness of P and Q, both isomorphisms descend, are invertible and are
// bimodule maps), the tensor roundtrips P (x)_B (Q (x)_A X) ~= X and
// Q (x)_A (P (x)_B Y) ~= Y on smoothened samples, the hom-side roundtrip
// Hom_B(Q, Hom_A(P, X)) ~= X on roughened samples, the identification
// Rough_A(P (x)_B Smooth_B(X)) ~= Hom_B(Q, X) on roughened samples, and the
// hom-space isomorphisms C_A(X, Y) ~= C_B(Q (x)_A X, Q (x)_A Y) on pairs of
// smoothened samples.  Empty sample lists default to the regular modules.
Report verify_morita(const MoritaWitness& w, const std::vector<Module>& samplesA,
                     const std::vector<Module>& samplesB);

// The canonical witness between a pairing algebra and the unit algebra:
// P = V, Q = W, with V (x) W -> A the identity and Q (x) P -> 1 the pairing.
MoritaWitness morita_witness_from_pairing(const PairingAlgebra& pa);

// The classical witness between the n-by-n matrix algebra and the unit
// algebra: P = column space, Q = row space, with the matrix-unit
// identification column (x) row -> A and the dot product row (x) column -> 1.
MoritaWitness morita_witness_matrix_unit(std::size_t n);

// The pullback of a left B-module along an algebra map f : A -> B.
Module pullback_module(const Algebra& a, const Mor& f, const Module& x);

// The two adjoint functor pairs induced by an algebra homomorphism
// f : A -> B between self-induced algebras, via B seen as an (A,B)- and as a
// (B,A)-bimodule through f:
//   pair 1:  X |-> Smooth_A(f*X)   -|   Y |-> Smooth_B(Hom_A(A (x)_A B, Y)),
//   pair 2:  Y |-> B (x)_A Y       -|   X |-> Smooth_A(Hom_B(B (x)_A A, X)).
// Verifies multiplicativity of f (AxiomError otherwise), both adjunction
// bijections on smoothened samples, the identifications of each left
// adjoint, and - when B is smooth as a left and right A-module - that f*
// preserves smooth and rough modules.
struct HomInducedFunctors {
    Algebra a;
    Algebra b;
    Mor f;
    Module bAsAB;  // B as an (A,B)-bimodule via f
    Module bAsBA;  // B as a (B,A)-bimodule via f
    Report report;
};
HomInducedFunctors hom_induced_functors(const Algebra& a, const Algebra& b, const Mor& f,
                                        const std::vector<Module>& samplesB,
                                        const std::vector<Module>& samplesA);

// A functor from left A-modules to left B-modules tabulated on finitely many
// sources.  Each cell records the image module and, column by column, the
// image of the module map a |-> a.x attached to every basis vector x of the
// source (flattened as an element of Hom(F(A), F(X))).  The cell for the
// regular module must be present under the id "regular".
struct FunctorCell {
    std::string id;
    Module source;  // left A-module
    Module image;   // left B-module
    Mat homAction;  // (dim F(A) * dim F(X)) x (dim X)
};

// Optional tabulation of F on A (x) A (action on the first factor), with the
// image of the multiplication map and the structure isomorphism
// c : F(A (x) A) -> F(A) (x) A used by the coherence check.
struct TensorCell {
    Module source;
    Module image;
    Mor fMu;  // image -> F(A)
    Mor c;    // image -> F(A) (x) A
};

struct FunctorTable {
    Algebra a;
    Algebra b;
    std::vector<FunctorCell> cells;
    std::optional<TensorCell> tensorCell;
};

// Reconstruction of the representing (B,A)-bimodule M := F(A): the right
// action comes from the tabulated right multiplications, and every cell is
// verified against the comparison map M (x)_A X -> F(X).  When some
// verification fails the result names the offending cell and reason instead
// of a bimodule.
struct TabulatedRepresentation {
    bool representable = false;
    std::optional<Module> bimodule;
    std::string failureCell;
    std::string failureReason;
    Report report;
};
TabulatedRepresentation bimodule_of_tabulated_functor(const FunctorTable& t);

// Tabulates the honest functor M (x)_A - of a (B,A)-bimodule on the regular
// module plus the given sources, including the tensor cell.  The corrupted
// variant perturbs one hom-action entry of the last cell so the
// representability verification can be seen failing.
FunctorTable tabulate_tensor_functor(const Module& m, const std::vector<Module>& sources);
FunctorTable tabulate_corrupted_tensor_functor(const Module& m,
                                               const std::vector<Module>& sources);

}  // namespace sia
