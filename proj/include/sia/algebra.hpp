#pragma once
// Algebras (semigroup objects, optionally unital) and left/right/bi-modules,
// with eagerly verified axioms: the constructors reject invalid data, so no
// later computation can silently operate on a non-algebra.

#include "sia/category.hpp"
#include "sia/report.hpp"

#include <optional>
#include <string>

namespace sia {

struct Algebra {
    Obj carrier;
    Mor mu;                    // A (x) A -> A
    std::optional<Mor> unit;   // 1 -> A
    std::string name;

    std::size_t dim() const { return carrier.dim(); }
};

// Verifies associativity (and, when a unit is supplied, both unit triangles);
// throws AxiomError naming the failed law.
Algebra make_algebra(Obj carrier, Mor mu, std::optional<Mor> unit = std::nullopt,
                     std::string name = "");

// Law-by-law report without throwing (used by the CLI `check` subcommand and
// by tests that want to see a failure named rather than thrown).
Report check_algebra_laws(const Obj& carrier, const Mor& mu, const std::optional<Mor>& unit,
                          const std::string& name);
Report check_algebra(const Algebra& a);

// Solves the two-sided-unit linear system; empty result means "not unital".
// A returned unit is exact and unique.
std::optional<Mor> detect_unit(const Algebra& a);

Algebra opposite(const Algebra& a);  // mu_op = mu * braiding

bool same_algebra(const Algebra& a, const Algebra& b);

struct Module {
    std::optional<Algebra> algebraLeft;
    std::optional<Algebra> algebraRight;
    Obj carrier;
    std::optional<Mor> actLeft;   // A (x) X -> X
    std::optional<Mor> actRight;  // X (x) B -> X
    std::string id;

    std::size_t dim() const { return carrier.dim(); }
};

Module make_left_module(const Algebra& a, Obj carrier, Mor act, std::string id = "");
Module make_right_module(const Algebra& b, Obj carrier, Mor act, std::string id = "");
Module make_bimodule(const Algebra& a, const Algebra& b, Obj carrier, Mor actLeft,
                     Mor actRight, std::string id = "");
// Law-by-law report for whichever actions the module carries.
Report check_module_laws(const Module& m);
// A as the A,A-bimodule over itself (both actions are mu).
Module regular_bimodule(const Algebra& a);
// A as a left module over itself only.
Module left_regular_module(const Algebra& a);
// Zero-action module of the given dimension (left module).
Module zero_action_module(const Algebra& a, std::size_t dim, std::string id = "zero");

// The one-dimensional algebra on the monoidal unit.
Algebra unit_algebra();
// The unital algebra of n-by-n matrices, basis E_ij at index i*n+j.
Algebra matrix_algebra(std::size_t n);
// A space as a module over the unit algebra (action = unitor).
Module module_over_unit(const Obj& v, std::string id = "");

// Forget the right action (throws TypeError when there is no left action).
Module as_left(const Module& m);

Report check_module_laws(const Module& m);

// Transport of a right module to a left module over the opposite algebra:
// actLeft_op = actRight * braiding.  Round-tripping restores the action.
Module right_as_left_op(const Module& m);
Module left_op_as_right(const Module& m, const Algebra& original);

// Exact unit-triangle check; requires the relevant algebra(s) to be unital
// (throws TypeError otherwise).  For a bimodule both triangles must hold.
bool check_unital_module(const Module& m);

}  // namespace sia
