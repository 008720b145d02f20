#include "sia/morphism.hpp"

#include <sstream>

namespace sia {

Mor::Mor(Obj dom, Obj cod, Mat mat) : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
    if (mat_.rows() != cod_.dim() || mat_.cols() != dom_.dim())
        throw TypeError("morphism matrix is " + std::to_string(mat_.rows()) + "x" +
                        std::to_string(mat_.cols()) + " but " + dom_.to_string() + " -> " +
                        cod_.to_string() + " needs " + std::to_string(cod_.dim()) + "x" +
                        std::to_string(dom_.dim()));
}

Mor Mor::identity(const Obj& a) { return Mor(a, a, Mat::identity(a.dim())); }

Mor Mor::zero(const Obj& dom, const Obj& cod) {
    return Mor(dom, cod, Mat::zero(cod.dim(), dom.dim()));
}

Mor Mor::retyped(const Obj& dom, const Obj& cod) const { return Mor(dom, cod, mat_); }

Mor Mor::operator*(const Mor& f) const {
    if (f.cod_ != dom_)
        throw TypeError("cannot compose: middle objects differ: " + f.cod_.to_string() +
                        " vs " + dom_.to_string());
    return Mor(f.dom_, cod_, mat_ * f.mat_);
}

Mor Mor::operator+(const Mor& o) const {
    if (dom_ != o.dom_ || cod_ != o.cod_)
        throw TypeError("cannot add morphisms with different boundaries");
    return Mor(dom_, cod_, mat_ + o.mat_);
}

Mor Mor::operator-(const Mor& o) const {
    if (dom_ != o.dom_ || cod_ != o.cod_)
        throw TypeError("cannot subtract morphisms with different boundaries");
    return Mor(dom_, cod_, mat_ - o.mat_);
}

Mor Mor::operator-() const { return Mor(dom_, cod_, -mat_); }

Mor Mor::scaled(const Rat& c) const { return Mor(dom_, cod_, mat_.scaled(c)); }

Mor Mor::inverse() const {
    if (dom_.dim() != cod_.dim() || !is_invertible())
        throw TypeError("inverse of non-invertible morphism " + to_string());
    return Mor(cod_, dom_, sia::inverse(mat_));
}

std::size_t Mor::hash() const {
    std::size_t h = dom_.hash();
    h ^= cod_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= mat_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::string Mor::to_string() const {
    std::ostringstream os;
    os << dom_.to_string() << " -> " << cod_.to_string();
    if (dom_.dim() * cod_.dim() <= 64) os << " " << mat_.to_string();
    return os.str();
}

}  // namespace sia
