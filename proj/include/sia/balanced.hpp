#pragma once
// Balanced tensor products X (x)_A Y and balanced hom spaces Hom_A(X, Y),
// presented exactly as a quotient (resp. subspace) of the plain tensor
// (resp. hom) space, together with the module structures they inherit from
// any outer actions on the inputs.

#include <functional>

#include "sia/algebra.hpp"
#include "sia/presentation.hpp"
#include "sia/report.hpp"

namespace sia {

// Quotient of X (x) Y by the balancing relations (x.a) (x) y - x (x) (a.y);
// needs a right A-action on X and a left A-action on Y.  A left action on X
// (over some B) or a right action on Y (over some C) descends to the result.
struct BalancedTensor {
    Algebra over;
    Module left;
    Module right;
    Mor balancer;       // (X(x)A)(x)Y -> X(x)Y, difference of the two routes
    Presentation pres;  // quotient presentation of the result inside X(x)Y
    Module result;
};

BalancedTensor balanced_tensor(const Algebra& a, const Module& x, const Module& y);

// Subspace of Hom(X, Y) cut out by A-linearity f(a.x) = a.f(x); needs left
// A-actions on X and Y.  A right action on X induces a left action on the
// result through the source; a right action on Y induces a right action
// through the target.
struct BalancedHom {
    Algebra over;
    Module source;
    Module target;
    Presentation pres;  // kernel presentation inside Hom(X,Y)
    Module result;
};

BalancedHom balanced_hom(const Algebra& a, const Module& x, const Module& y);

// (X (x)_A Y) (x)_B Z  ~=  X (x)_A (Y (x)_B Z) with verified mutually
// inverse maps; y must be an (A,B)-bimodule.
struct TripleAssoc {
    BalancedTensor innerLeft;   // X (x)_A Y
    BalancedTensor outerLeft;   // (X (x)_A Y) (x)_B Z
    BalancedTensor innerRight;  // Y (x)_B Z
    BalancedTensor outerRight;  // X (x)_A (Y (x)_B Z)
    Mor fwd;                    // outerLeft.result -> outerRight.result
    Mor bwd;
};

TripleAssoc triple_assoc(const Algebra& a, const Algebra& b, const Module& x, const Module& y,
                         const Module& z);

// The space of maps X -> Y respecting every action the two modules share;
// throws TypeError when the module structures do not line up.  Returned as a
// kernel presentation inside Hom(X, Y).
Presentation module_hom_space(const Module& x, const Module& y);

// Matrix of a map between two hom-space presentations induced by applying
// `transport` to every basis element of `from`.  `landed` is false when some
// transported map violates the target constraints (its column is zeroed).
struct HomTransport {
    Mor map;  // from.obj -> to.obj
    bool landed;
};
HomTransport transport_hom_space(const Presentation& from, const Obj& fromDom, const Obj& fromCod,
                                 const Presentation& to, const Obj& toDom, const Obj& toCod,
                                 const std::function<Mor(const Mor&)>& transport);

// Maps X (x)_B Y -> Z of left A-modules correspond to B-linear maps
// Y -> Hom_A(X, Z); x must be an (A,B)-bimodule, y a left B-module and z a
// left A-module.  The bijection is realized as an invertible matrix between
// the two hom-space presentations.
struct TensorHomAdjunction {
    BalancedTensor tensor;  // X (x)_B Y
    BalancedHom innerHom;   // Hom_A(X, Z)
    Presentation lhs;       // maps X(x)_B Y -> Z of left A-modules
    Presentation rhs;       // B-linear maps Y -> Hom_A(X, Z)
    Mor bijection;          // lhs.obj -> rhs.obj
    Report report;
};

TensorHomAdjunction adjunction_tensor_hom(const Algebra& a, const Algebra& b, const Module& x,
                                          const Module& y, const Module& z);

}  // namespace sia
