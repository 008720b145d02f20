#pragma once
// Typed linear maps: a matrix together with domain and codomain objects.
// A Mor X -> Y has a dim(Y) x dim(X) matrix; composition g*f demands
// f.cod() == g.dom() as objects (tag equality), not merely equal dimensions.

#include "sia/object.hpp"

namespace sia {

class Mor {
public:
    Mor(Obj dom, Obj cod, Mat mat);

    static Mor identity(const Obj& a);
    static Mor zero(const Obj& dom, const Obj& cod);
    // The same underlying matrix with new boundary objects (used for the
    // structural isomorphisms whose matrices are identities/permutations).
    Mor retyped(const Obj& dom, const Obj& cod) const;

    const Obj& dom() const { return dom_; }
    const Obj& cod() const { return cod_; }
    const Mat& mat() const { return mat_; }

    bool operator==(const Mor& o) const {
        return dom_ == o.dom_ && cod_ == o.cod_ && mat_ == o.mat_;
    }
    bool operator!=(const Mor& o) const { return !(*this == o); }

    // g * f is "g after f".
    Mor operator*(const Mor& f) const;
    Mor operator+(const Mor& o) const;
    Mor operator-(const Mor& o) const;
    Mor operator-() const;
    Mor scaled(const Rat& c) const;

    bool is_zero() const { return mat_.is_zero(); }
    bool is_identity() const { return dom_ == cod_ && mat_.is_identity(); }
    bool is_invertible() const { return sia::is_invertible(mat_); }
    Mor inverse() const;

    std::size_t hash() const;
    std::string to_string() const;

private:
    Obj dom_, cod_;
    Mat mat_;
};

}  // namespace sia
