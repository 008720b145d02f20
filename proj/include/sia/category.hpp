#pragma once
// The closed symmetric monoidal structure: tensor bifunctor, structural
// isomorphisms, internal Hom with currying/evaluation, and the canonical
// maps between Hom objects (composition, inflation, and the pre/post
// composition operators everything downstream is assembled from).
//
// Every operation returns an explicit typed Mor; the flattening conventions
// documented in object.hpp make each structural isomorphism a concrete
// identity or permutation matrix.

#include "sia/morphism.hpp"

namespace sia {

Obj tensor_obj(const Obj& a, const Obj& b);
Mor tensor_mor(const Mor& f, const Mor& g);

Mor associator(const Obj& a, const Obj& b, const Obj& c);      // (A(x)B)(x)C -> A(x)(B(x)C)
Mor associator_inv(const Obj& a, const Obj& b, const Obj& c);
Mor left_unitor(const Obj& a);                                 // 1(x)A -> A
Mor left_unitor_inv(const Obj& a);
Mor right_unitor(const Obj& a);                                // A(x)1 -> A
Mor right_unitor_inv(const Obj& a);
Mor braiding(const Obj& a, const Obj& b);                      // A(x)B -> B(x)A

Obj hom_obj(const Obj& a, const Obj& b);

// Coordinates of a map f: A -> B as an element of Hom(A,B), and back.
std::vector<Rat> flatten_map(const Mor& f);
Mor unflatten_map(const Obj& a, const Obj& b, const std::vector<Rat>& coords);
// The element 1 -> Hom(A,B) picking out f.
Mor element_of_hom(const Mor& f);

Mor curry(const Mor& f);    // f: A(x)B -> C  gives  B -> Hom(A,C)
Mor uncurry(const Mor& g);  // g: B -> Hom(A,C)  gives  A(x)B -> C
Mor eval(const Obj& a, const Obj& b);  // A(x)Hom(A,B) -> B

// Hom(A(x)B, C) -> Hom(B, Hom(A,C)); the internal-Hom form of currying.
Mor hom_lift(const Obj& a, const Obj& b, const Obj& c);

// Hom(X,Y)(x)Hom(Y,Z) -> Hom(X,Z), on basis elements f(x)g -> g after f.
Mor composition_map(const Obj& x, const Obj& y, const Obj& z);

// Hom(X,Y) -> Hom(Z(x)X, Z(x)Y), f -> Id_Z (x) f.
Mor inflation_map(const Obj& x, const Obj& y, const Obj& z);

// Hom(X,Y) -> Hom(X(x)Z, Y(x)Z), f -> f (x) Id_Z.
Mor coinflation_map(const Obj& x, const Obj& y, const Obj& z);

// Post/pre-composition operators on Hom objects.
Mor hom_post(const Mor& g, const Obj& x);  // Hom(X, dom g) -> Hom(X, cod g), f -> g after f
Mor hom_pre(const Mor& g, const Obj& y);   // Hom(cod g, Y) -> Hom(dom g, Y), f -> f after g

// Fused builders for the hot constraint maps; equal to the composites
// hom_post(mu, Z(x)X) * inflation_map  /  hom_post(mu, X(x)Z) * coinflation_map
// (pinned by property tests) but assembled in one pass.
Mor hom_post_inflate(const Mor& mu, const Obj& x);    // mu: Z(x)Y -> W gives Hom(X,Y) -> Hom(Z(x)X, W), f -> mu*(Id_Z(x)f)
Mor hom_post_coinflate(const Mor& mu, const Obj& x);  // mu: Y(x)Z -> W gives Hom(X,Y) -> Hom(X(x)Z, W), f -> mu*(f(x)Id_Z)

// Ambient module actions on Hom(X,Y):
//   from a right action rho: X(x)B -> X, the left action (b.f)(x) = f(x.b),
//   as B (x) Hom(X,Y) -> Hom(X,Y);
Mor hom_left_act_via_source(const Mor& rho, const Obj& y);
//   from a right action rho: Y(x)C -> Y, the right action (f.c)(x) = f(x).c,
//   as Hom(X,Y) (x) C -> Hom(X,Y).
Mor hom_right_act_via_target(const Mor& rho, const Obj& x);

}  // namespace sia
