#include "sia/object.hpp"

#include "sia/morphism.hpp"

#include <sstream>

namespace sia {

struct Obj::Node {
    ObjKind kind;
    std::size_t dim;
    std::string name;                 // Atom
    std::shared_ptr<const Node> left, right;  // Tensor/Hom
    std::shared_ptr<const Mor> of;    // Ker/Coker
    std::size_t hash;
};

namespace {

std::size_t mix_hash(std::size_t seed, std::size_t x) {
    seed ^= x + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    return seed;
}

std::size_t node_hash(ObjKind kind, std::size_t dim, const std::string& name,
                      const Obj::Node* left, const Obj::Node* right, const Mor* of);

}  // namespace

Obj::Obj() { *this = unit(); }

Obj Obj::unit() {
    static const std::shared_ptr<const Node> node = [] {
        auto n = std::make_shared<Node>();
        n->kind = ObjKind::Unit;
        n->dim = 1;
        n->hash = mix_hash(static_cast<std::size_t>(ObjKind::Unit), 1);
        return n;
    }();
    return Obj(node);
}

Obj Obj::atom(std::string name, std::size_t dim) {
    auto n = std::make_shared<Node>();
    n->kind = ObjKind::Atom;
    n->dim = dim;
    n->name = std::move(name);
    n->hash = node_hash(n->kind, n->dim, n->name, nullptr, nullptr, nullptr);
    return Obj(n);
}

Obj Obj::tensor(const Obj& a, const Obj& b) {
    auto n = std::make_shared<Node>();
    n->kind = ObjKind::Tensor;
    n->dim = a.dim() * b.dim();
    n->left = a.n_;
    n->right = b.n_;
    n->hash = node_hash(n->kind, n->dim, "", a.n_.get(), b.n_.get(), nullptr);
    return Obj(n);
}

Obj Obj::hom(const Obj& a, const Obj& b) {
    auto n = std::make_shared<Node>();
    n->kind = ObjKind::Hom;
    n->dim = a.dim() * b.dim();
    n->left = a.n_;
    n->right = b.n_;
    n->hash = node_hash(n->kind, n->dim, "", a.n_.get(), b.n_.get(), nullptr);
    return Obj(n);
}

Obj Obj::ker(const Mor& constraint) {
    auto n = std::make_shared<Node>();
    n->kind = ObjKind::Ker;
    n->dim = constraint.dom().dim() - rank(constraint.mat());
    n->of = std::make_shared<Mor>(constraint);
    n->hash = node_hash(n->kind, n->dim, "", nullptr, nullptr, n->of.get());
    return Obj(n);
}

Obj Obj::coker(const Mor& relations) {
    auto n = std::make_shared<Node>();
    n->kind = ObjKind::Coker;
    n->dim = relations.cod().dim() - rank(relations.mat());
    n->of = std::make_shared<Mor>(relations);
    n->hash = node_hash(n->kind, n->dim, "", nullptr, nullptr, n->of.get());
    return Obj(n);
}

ObjKind Obj::kind() const { return n_->kind; }
std::size_t Obj::dim() const { return n_->dim; }

const std::string& Obj::name() const {
    if (n_->kind != ObjKind::Atom) throw TypeError("name() on non-atom object");
    return n_->name;
}

Obj Obj::left() const {
    if (n_->kind != ObjKind::Tensor && n_->kind != ObjKind::Hom)
        throw TypeError("left() on object without factors");
    return Obj(n_->left);
}

Obj Obj::right() const {
    if (n_->kind != ObjKind::Tensor && n_->kind != ObjKind::Hom)
        throw TypeError("right() on object without factors");
    return Obj(n_->right);
}

const Mor& Obj::of() const {
    if (n_->kind != ObjKind::Ker && n_->kind != ObjKind::Coker)
        throw TypeError("of() on non-presented object");
    return *n_->of;
}

std::size_t Obj::hash() const { return n_->hash; }

namespace {

bool node_equal(const Obj::Node* a, const Obj::Node* b);

bool mor_equal_ptr(const Mor* a, const Mor* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

bool node_equal(const Obj::Node* a, const Obj::Node* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->dim != b->dim || a->hash != b->hash) return false;
    switch (a->kind) {
        case ObjKind::Unit:
            return true;
        case ObjKind::Atom:
            return a->name == b->name;
        case ObjKind::Tensor:
        case ObjKind::Hom:
            return node_equal(a->left.get(), b->left.get()) &&
                   node_equal(a->right.get(), b->right.get());
        case ObjKind::Ker:
        case ObjKind::Coker:
            return mor_equal_ptr(a->of.get(), b->of.get());
    }
    return false;
}

std::size_t node_hash(ObjKind kind, std::size_t dim, const std::string& name,
                      const Obj::Node* left, const Obj::Node* right, const Mor* of) {
    std::size_t h = mix_hash(static_cast<std::size_t>(kind) + 11, dim);
    for (char c : name) h = mix_hash(h, static_cast<std::size_t>(static_cast<unsigned char>(c)));
    if (left) h = mix_hash(h, left->hash);
    if (right) h = mix_hash(h, right->hash);
    if (of) h = mix_hash(h, of->hash());
    return h;
}

}  // namespace

bool Obj::operator==(const Obj& o) const { return node_equal(n_.get(), o.n_.get()); }

std::string Obj::to_string() const {
    std::ostringstream os;
    switch (n_->kind) {
        case ObjKind::Unit:
            os << "1";
            break;
        case ObjKind::Atom:
            os << n_->name << "[" << n_->dim << "]";
            break;
        case ObjKind::Tensor:
            os << "(" << Obj(n_->left).to_string() << " (x) " << Obj(n_->right).to_string() << ")";
            break;
        case ObjKind::Hom:
            os << "Hom(" << Obj(n_->left).to_string() << ", " << Obj(n_->right).to_string() << ")";
            break;
        case ObjKind::Ker:
            os << "Ker(" << n_->of->dom().to_string() << " -> " << n_->of->cod().to_string()
               << ")[" << n_->dim << "]";
            break;
        case ObjKind::Coker:
            os << "Coker(" << n_->of->dom().to_string() << " -> " << n_->of->cod().to_string()
               << ")[" << n_->dim << "]";
            break;
    }
    return os.str();
}

}  // namespace sia
