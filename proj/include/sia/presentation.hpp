#pragma once

#include "sia/category.hpp"

namespace sia {

// A finite presentation of a space that is either a quotient V/im(rel) or a
// subspace ker(constraint) <= V.  Both come with a map in each direction:
//
//   Quotient:  onto = p : V -> Q   (projection, ker p = im rel exactly)
//              into = s : Q -> V   (section, p*s = id)
//   Subspace:  into = i : K -> V   (inclusion, constraint*i = 0)
//              onto = r : V -> K   (retraction, r*i = id)
//
// The section/retraction are basis-dependent conveniences; only p (resp. i)
// is canonical.  All descent helpers below guard the universal property and
// throw AxiomError when the input map does not actually factor.
struct Presentation {
    enum class Kind { Quotient, Subspace };
    Kind kind;
    Obj ambient;
    Obj obj;
    Mor into;
    Mor onto;
    Mor witness;  // rel : R -> V for quotients, constraint : V -> C for subspaces
};

Presentation cokernel_presentation(const Mor& rel);
Presentation kernel_presentation(const Mor& constraint);

// g : X -> Y with X, Y presented as quotients; returns q with q * p_x = p_y * g.
Mor descend(const Mor& g, const Presentation& px, const Presentation& py);

// g : X -> Y with X a quotient and Y plain; returns q with q * p_x = g.
Mor descend_from(const Mor& g, const Presentation& px);

// g : X -> Y with Y a subspace of the ambient; returns q with i_y * q = g.
Mor corestrict(const Mor& g, const Presentation& py);

// g : X -> Y between ambients of two subspaces; returns q with i_y * q = g * i_x.
Mor restrict_between(const Mor& g, const Presentation& px, const Presentation& py);

}  // namespace sia
