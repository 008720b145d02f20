#pragma once
// The standard corpus of desk-scale algebras with their modules, and the
// verification suites that the CLI `corpus` subcommand and the acceptance
// gate run over it: per-entry axioms, the unital characterization, the
// comparison-grid theorem suite, the multiplier/free-module suite, the
// bimodule-functor suite, the Morita witnesses, the pairing analyses, and
// the brute-force oracle cross-checks.

#include "sia/morita.hpp"
#include "sia/oracle.hpp"

#include <vector>

namespace sia {

struct CorpusEntry {
    Algebra alg;  // detected units are attached
    std::vector<Module> modules;
    bool selfInduced = false;
    bool unital = false;
    std::optional<PairingAlgebra> pairing;  // present for pairing-built entries
};

// Deterministic corpus: the unit algebra; zero-multiplication algebras of
// dims 1..min(2, maxDim); matrix algebras of sizes 1..min(2, maxDim);
// pairing algebras for every (dimV, dimW) with dimV*dimW <= maxDim*maxDim
// under the maximal-rank pairing ("full") and the rank-one pairing ("min",
// skipped only at (1,1) where the two coincide).  Every entry carries its
// regular module, a one-dimensional zero-action module, and their direct
// sum; pairing entries add the two modules of the standard equivalence.
std::vector<CorpusEntry> standard_corpus(std::size_t maxDim);

// Algebra and module laws, self-inducedness against the brute-force oracle,
// and smooth/rough membership of every smoothening/roughening.
Report corpus_axioms_suite(const std::vector<CorpusEntry>& corpus);

// Over unital entries: smooth <=> rough <=> the unit acts as the identity,
// plus both homotopy identities; over every entry: an algebra rough over
// itself has a detected unit.
Report unital_suite(const std::vector<CorpusEntry>& corpus);

// The full comparison grid with its adjunction bijections over every
// self-induced entry and every module with dim(A)*dim(X) <= 36; adjunction
// partners walk the module list cyclically.
Report theorem_suite(const std::vector<CorpusEntry>& corpus);

// Multipliers, double centralizers of the pairings, and the free-module
// roughening chain.  The final existential check scans the whole corpus for
// a dimension mismatch between M_l(A) (x) V and Hom_A(A, A (x) V); exact
// finite-dimensional computation never produces one, so that single check
// reports its honest failure.
Report multiplier_corpus_suite(const std::vector<CorpusEntry>& corpus);

// Preservation of smooth/rough under the bimodule functors, the smoothened
// tensor-hom adjunction with naturality, the functor pairs induced by two
// fixed sample algebra homomorphisms, and the tabulated-functor
// reconstruction together with its corrupted-table rejection.
Report bimodule_functor_suite(const std::vector<CorpusEntry>& corpus);

// Morita witnesses (P = V, Q = W) between the unit algebra and every pairing
// algebra with dimV*dimW <= productCap, both pairing choices, plus the
// classical matrix witness.
Report morita_suite(std::size_t productCap);

// Dimension cross-checks of every balanced tensor / balanced Hom in the
// corpus against the independent brute-force oracle.
Report oracle_suite(const std::vector<CorpusEntry>& corpus);

// The pairing-specific laws and the non-monic smoothening demonstration.
Report pairing_suite(const std::vector<CorpusEntry>& corpus);

// Everything the `corpus` subcommand runs, in canonical order.
Report corpus_suite(std::size_t maxDim);

// Structure constants for the oracle layer.
oracle::Cube mul_cube(const Algebra& a);
oracle::Cube left_cube(const Algebra& a, const Module& x);
oracle::Cube right_cube(const Module& x);

}  // namespace sia
