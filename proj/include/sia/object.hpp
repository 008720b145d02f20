#pragma once
// Objects of the ambient category: a dimension plus a structural tag that
// records how the object was formed.  Composition of morphisms demands
// tag-equal boundary objects, so equidimensional but differently-built
// objects cannot be confused.
//
// Flattening conventions, fixed globally:
//   - Tensor(A,B): basis e_i (x) f_j sits at index i*dim(B) + j
//     (left-factor-major; tensor_mor is the standard Kronecker product).
//   - Hom(A,B): the basis element at index i*dim(B) + j is the map e_i -> f_j
//     (domain-major; the flattened coordinates of a map with matrix M are
//     v[i*dim(B)+j] = M(j,i)).
// Every structural isomorphism in category.hpp is the concrete
// identity/permutation matrix these two conventions force.

#include "sia/matrix.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace sia {

class Mor;

// Composing/typing mistakes (tag mismatches, shape mismatches).
class TypeError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Rejected user-supplied input (malformed files, out-of-range parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A verified mathematical law failed to hold on concrete data.
class AxiomError : public std::runtime_error {
public:
    AxiomError(std::string law, const std::string& detail)
        : std::runtime_error(law + ": " + detail), law_(std::move(law)) {}
    const std::string& law() const { return law_; }

private:
    std::string law_;
};

enum class ObjKind { Atom, Unit, Tensor, Hom, Ker, Coker };

class Obj {
public:
    Obj();  // the tensor unit

    static Obj atom(std::string name, std::size_t dim);
    static Obj unit();
    static Obj tensor(const Obj& a, const Obj& b);
    static Obj hom(const Obj& a, const Obj& b);
    // Presented subquotients; dimension is computed from the witness matrix.
    static Obj ker(const Mor& constraint);
    static Obj coker(const Mor& relations);

    ObjKind kind() const;
    std::size_t dim() const;
    const std::string& name() const;            // Atom only
    Obj left() const;                           // Tensor/Hom
    Obj right() const;                          // Tensor/Hom
    const Mor& of() const;                      // Ker/Coker

    bool operator==(const Obj& o) const;
    bool operator!=(const Obj& o) const { return !(*this == o); }
    std::size_t hash() const;
    std::string to_string() const;

    struct Node;  // opaque; defined in object.cpp

private:
    explicit Obj(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

}  // namespace sia
