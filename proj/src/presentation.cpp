#include "sia/presentation.hpp"

#include <vector>

namespace sia {

namespace {

std::vector<std::size_t> free_columns(const std::vector<std::size_t>& pivots, std::size_t n) {
    std::vector<std::size_t> free;
    std::size_t t = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (t < pivots.size() && pivots[t] == c)
            ++t;
        else
            free.push_back(c);
    }
    return free;
}

}  // namespace

Presentation cokernel_presentation(const Mor& rel) {
    const std::size_t dimV = rel.cod().dim();
    const RrefResult rr = rref(rel.mat().transpose());
    const std::vector<std::size_t>& piv = rr.pivots;
    const std::vector<std::size_t> free = free_columns(piv, dimV);
    const Obj q = Obj::coker(rel);
    if (q.dim() != free.size())
        throw TypeError("cokernel dimension mismatch");  // unreachable by construction

    Mat s(dimV, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) s.at(free[j], j) = Rat(1);

    Mat p(free.size(), dimV);
    for (std::size_t j = 0; j < free.size(); ++j) {
        p.at(j, free[j]) = Rat(1);
        for (std::size_t t = 0; t < piv.size(); ++t) p.at(j, piv[t]) = -rr.r.at(t, free[j]);
    }
    return Presentation{Presentation::Kind::Quotient, rel.cod(), q, Mor(q, rel.cod(), s),
                        Mor(rel.cod(), q, p), rel};
}

Presentation kernel_presentation(const Mor& constraint) {
    const std::size_t dimV = constraint.dom().dim();
    const RrefResult rr = rref(constraint.mat());
    const std::vector<std::size_t>& piv = rr.pivots;
    const std::vector<std::size_t> free = free_columns(piv, dimV);
    const Obj k = Obj::ker(constraint);
    if (k.dim() != free.size()) throw TypeError("kernel dimension mismatch");  // unreachable

    Mat inc(dimV, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        inc.at(free[j], j) = Rat(1);
        for (std::size_t t = 0; t < piv.size(); ++t) inc.at(piv[t], j) = -rr.r.at(t, free[j]);
    }
    Mat r(free.size(), dimV);
    for (std::size_t j = 0; j < free.size(); ++j) r.at(j, free[j]) = Rat(1);

    return Presentation{Presentation::Kind::Subspace, constraint.dom(), k,
                        Mor(k, constraint.dom(), inc), Mor(constraint.dom(), k, r), constraint};
}

namespace {

void expect_kind(const Presentation& p, Presentation::Kind k, const char* where) {
    if (p.kind != k)
        throw TypeError(std::string(where) + ": presentation has the wrong kind");
}

}  // namespace

Mor descend(const Mor& g, const Presentation& px, const Presentation& py) {
    expect_kind(px, Presentation::Kind::Quotient, "descend");
    expect_kind(py, Presentation::Kind::Quotient, "descend");
    if (g.dom() != px.ambient || g.cod() != py.ambient)
        throw TypeError("descend: map does not match the ambient spaces");
    if (!(py.onto * g * px.witness).is_zero())
        throw AxiomError("presentation/descend-well-defined",
                         "map does not send relations to relations");
    return py.onto * g * px.into;
}

Mor descend_from(const Mor& g, const Presentation& px) {
    expect_kind(px, Presentation::Kind::Quotient, "descend_from");
    if (g.dom() != px.ambient) throw TypeError("descend_from: map does not match the ambient");
    if (!(g * px.witness).is_zero())
        throw AxiomError("presentation/descend-well-defined", "map does not kill the relations");
    return g * px.into;
}

Mor corestrict(const Mor& g, const Presentation& py) {
    expect_kind(py, Presentation::Kind::Subspace, "corestrict");
    if (g.cod() != py.ambient) throw TypeError("corestrict: map does not match the ambient");
    if (!(py.witness * g).is_zero())
        throw AxiomError("presentation/corestrict-well-defined",
                         "image is not contained in the subspace");
    return py.onto * g;
}

Mor restrict_between(const Mor& g, const Presentation& px, const Presentation& py) {
    expect_kind(px, Presentation::Kind::Subspace, "restrict_between");
    expect_kind(py, Presentation::Kind::Subspace, "restrict_between");
    if (g.dom() != px.ambient || g.cod() != py.ambient)
        throw TypeError("restrict_between: map does not match the ambient spaces");
    if (!(py.witness * g * px.into).is_zero())
        throw AxiomError("presentation/corestrict-well-defined",
                         "restricted image is not contained in the target subspace");
    return py.onto * g * px.into;
}

}  // namespace sia
