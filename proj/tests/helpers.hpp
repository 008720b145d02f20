#pragma once
// Shared helpers for the test suite: deterministic random matrices and a few
// small object factories.  Every test seeds its own std::mt19937 so the suite
// stays reproducible no matter which subset runs.

#include <doctest.h>

#include "sia/matrix.hpp"
#include "sia/morphism.hpp"

#include <random>

namespace testutil {

inline sia::Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols,
                           int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> entry(lo, hi);
    sia::Mat m = sia::Mat::zero(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = sia::Rat(entry(rng));
    return m;
}

// Identity plus a strictly lower triangular part: always invertible.
inline sia::Mat random_invertible(std::mt19937& rng, std::size_t n) {
    sia::Mat m = sia::Mat::identity(n);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) m.at(r, c) = sia::Rat(entry(rng));
    return m;
}

inline sia::Mor random_mor(std::mt19937& rng, const sia::Obj& dom,
                           const sia::Obj& cod, int lo = -4, int hi = 4) {
    return sia::Mor(dom, cod, random_mat(rng, cod.dim(), dom.dim(), lo, hi));
}

}  // namespace testutil
