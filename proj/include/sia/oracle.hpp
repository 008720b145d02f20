#pragma once
// Brute-force reference calculations, written before and independently of the
// engine.  Everything here works on raw structure constants with its own
// Gaussian elimination over vector<vector<Rat>>; it deliberately shares no
// code with the matrix/category machinery so the two can check each other.
//
// Conventions (the only ones needed at this level):
//   mul[i][j][k]    coefficient of e_k in e_i * e_j
//   left[a][x][y]   coefficient of e_y in basis-algebra-element a acting on
//                   basis-module-element x from the left
//   right[x][a][y]  same for a right action, module element first

#include "sia/rational.hpp"

#include <cstddef>
#include <vector>

namespace sia::oracle {

using Vec = std::vector<Rat>;
using Rows = std::vector<Vec>;
using Cube = std::vector<std::vector<std::vector<Rat>>>;

// Rank by plain Gaussian elimination (rows consumed by value).
std::size_t rank(Rows rows);

// Dimension of the balanced tensor product X (x)_A Y : quotient of X (x) Y by
// the span of all  (x*a) (x) y  -  x (x) (a*y)  over basis triples.
// Flattening of X (x) Y is x-major (index x*dimY + y).
std::size_t balanced_tensor_dim(std::size_t dimX, std::size_t dimA, std::size_t dimY,
                                const Cube& rightX, const Cube& leftY);

// Dimension of the space of A-linear maps f : X -> Y between left modules,
// i.e. solutions of f(a*x) = a*f(x) for all basis pairs.
std::size_t balanced_hom_dim(std::size_t dimA, std::size_t dimX, std::size_t dimY,
                             const Cube& leftX, const Cube& leftY);

// A is self-induced iff the multiplication descends to an isomorphism
// A (x)_A A -> A; over a field that happens iff the multiplication map has
// full rank dimA and the balanced tensor square also has dimension dimA.
bool self_induced(std::size_t dimA, const Cube& mul);

}  // namespace sia::oracle
