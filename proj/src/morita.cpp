#include "sia/morita.hpp"

#include <string>

namespace sia {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw TypeError(msg);
}

std::string dims(std::size_t l, std::size_t r) {
    return "dim " + std::to_string(l) + " vs " + std::to_string(r);
}

// The module map A -> X attached to a basis vector of X: a |-> a.x.
Mor action_orbit_map(const Algebra& a, const Module& x, std::size_t idx) {
    const Mat& act = x.actLeft->mat();
    const std::size_t dX = x.carrier.dim(), dA = a.dim();
    Mat m(dX, dA);
    for (std::size_t col = 0; col < dA; ++col)
        for (std::size_t row = 0; row < dX; ++row) m.at(row, col) = act.at(row, col * dX + idx);
    return Mor(a.carrier, x.carrier, std::move(m));
}

// The k-th basis element of a hom-space presentation, as a typed map.
Mor basis_map(const Presentation& hs, const Obj& dom, const Obj& cod, std::size_t k) {
    return unflatten_map(dom, cod, hs.into.mat().column_vec(k));
}

}  // namespace

BalancedTensor tensor_functor(const Module& m, const Module& x) {
    require(m.actLeft && m.actRight, "tensor_functor: the inducing module must be a bimodule");
    return balanced_tensor(*m.algebraRight, m, x);
}

BalancedHom hom_functor(const Module& m, const Module& y) {
    require(m.actLeft && m.actRight, "hom_functor: the inducing module must be a bimodule");
    return balanced_hom(*m.algebraLeft, m, y);
}

Mor tensor_functor_mor(const BalancedTensor& fx, const BalancedTensor& fy, const Mor& f) {
    require(f.dom() == fx.right.carrier && f.cod() == fy.right.carrier,
            "tensor_functor_mor: map does not connect the two arguments");
    return descend(tensor_mor(Mor::identity(fx.left.carrier), f), fx.pres, fy.pres);
}

Mor hom_functor_mor(const BalancedHom& fx, const BalancedHom& fy, const Mor& f) {
    require(f.dom() == fx.target.carrier && f.cod() == fy.target.carrier,
            "hom_functor_mor: map does not connect the two arguments");
    return restrict_between(hom_post(f, fx.source.carrier), fx.pres, fy.pres);
}

Report smooth_rough_preservation(const Module& m, const Module& y) {
    require(m.actLeft && m.actRight, "smooth_rough_preservation: m must be a bimodule");
    require(y.actLeft.has_value(), "smooth_rough_preservation: y must be a left module");
    const bool tensorClause = same_algebra(*m.algebraRight, *y.algebraLeft);
    const bool homClause = same_algebra(*m.algebraLeft, *y.algebraLeft);
    require(tensorClause || homClause,
            "smooth_rough_preservation: y is not a module over either algebra of m");

    Report rep;
    const Module y0 = as_left(y);
    const std::string nm = m.id + "," + y0.id;

    if (tensorClause) {
        const Algebra& a = *m.algebraLeft;
        const Algebra& b = *m.algebraRight;
        const bool premise = smoothen(a, as_left(m)).bar_mu.is_invertible();
        BalancedTensor my = balanced_tensor(b, m, y0);
        const bool concl = smoothen(a, my.result).bar_mu.is_invertible();
        rep.add("preservation/tensor-smooth", nm, !premise || concl,
                std::string("premise(M left-smooth)=") + (premise ? "yes" : "no") +
                    " conclusion(M(x)Y smooth)=" + (concl ? "yes" : "no") +
                    " dim M(x)Y=" + std::to_string(my.result.dim()));
        TripleAssoc ta = triple_assoc(a, b, regular_bimodule(a), m, y0);
        rep.add("preservation/smooth-tensor-rebracket", nm, ta.fwd.is_invertible(),
                "Smooth(M)(x)Y vs Smooth(M(x)Y): " +
                    dims(ta.outerLeft.result.dim(), ta.outerRight.result.dim()));
    }
    if (homClause) {
        const Algebra& b = *m.algebraLeft;
        const Algebra& a = *m.algebraRight;
        BalancedTensor rs = balanced_tensor(a, m, regular_bimodule(a));  // M (x)_A A
        const Mor rho = descend_from(*m.actRight, rs.pres);
        const bool premise = rho.is_invertible();
        BalancedHom h = balanced_hom(b, m, y0);  // Hom_B(M, Y), a left A-module
        Roughened r = roughen(a, h.result);
        const bool concl = r.bar_mu_dagger.is_invertible();
        rep.add("preservation/hom-rough", nm, !premise || concl,
                std::string("premise(M right-smooth)=") + (premise ? "yes" : "no") +
                    " conclusion(Hom(M,Y) rough)=" + (concl ? "yes" : "no") +
                    " dim Hom(M,Y)=" + std::to_string(h.result.dim()));
        BalancedHom h2 = balanced_hom(b, rs.result, y0);  // Hom_B(M (x)_A A, Y)
        const HomTransport t = transport_hom_space(
            r.bh.pres, a.carrier, h.pres.obj, h2.pres, rs.pres.obj, y0.carrier,
            [&](const Mor& g) { return descend_from(uncurry(h.pres.into * g), rs.pres); });
        const bool pass =
            t.landed && r.bh.pres.obj.dim() == h2.pres.obj.dim() && t.map.is_invertible();
        rep.add("preservation/rough-hom-rebracket", nm, pass,
                "Rough(Hom(M,Y)) vs Hom(M(x)A,Y): " +
                    dims(r.bh.pres.obj.dim(), h2.pres.obj.dim()));
    }
    return rep;
}

SmoothenedHomAdjunction smoothened_hom_adjunction(const Module& m, const Module& x,
                                                  const Module& y) {
    require(m.actLeft && m.actRight, "smoothened_hom_adjunction: m must be a bimodule");
    const Algebra& a = *m.algebraLeft;
    const Algebra& b = *m.algebraRight;
    const Module x0 = as_left(x), y0 = as_left(y);
    require(same_algebra(*x0.algebraLeft, b),
            "smoothened_hom_adjunction: x must live over the right algebra of m");
    require(same_algebra(*y0.algebraLeft, a),
            "smoothened_hom_adjunction: y must live over the left algebra of m");
    const std::string nm = m.id + ":" + x0.id + "," + y0.id;

    TensorHomAdjunction base = adjunction_tensor_hom(a, b, m, x0, y0);
    const Module w = base.innerHom.result;  // Hom_A(M, Y), a left B-module
    Smoothened sw = smoothen(b, w);
    Presentation rhs = module_hom_space(x0, sw.mod);

    Report rep = base.report;
    const HomTransport post =
        transport_hom_space(rhs, x0.carrier, sw.mod.carrier, base.rhs, x0.carrier, w.carrier,
                            [&](const Mor& g) { return sw.bar_mu * g; });
    const bool postOk =
        post.landed && rhs.obj.dim() == base.rhs.obj.dim() && post.map.is_invertible();
    rep.add("adjunction/smoothened-target-step", nm, postOk,
            "C(X,Smooth(W)) vs C(X,W): " + dims(rhs.obj.dim(), base.rhs.obj.dim()));
    Mor bijection =
        postOk ? post.map.inverse() * base.bijection : Mor::zero(base.lhs.obj, rhs.obj);
    const bool bij = postOk && bijection.is_invertible();
    rep.add("adjunction/smoothened-bijective", nm, bij,
            dims(base.lhs.obj.dim(), rhs.obj.dim()));
    return SmoothenedHomAdjunction{std::move(base), std::move(sw), std::move(rhs),
                                   std::move(bijection), std::move(rep)};
}

Report smoothened_hom_adjunction_suite(const Module& m, const std::vector<Module>& xs,
                                       const std::vector<Module>& ys) {
    require(m.actLeft && m.actRight, "smoothened_hom_adjunction_suite: m must be a bimodule");
    require(!xs.empty() && !ys.empty(), "smoothened_hom_adjunction_suite: empty sample list");
    const Algebra& a = *m.algebraLeft;
    const Algebra& b = *m.algebraRight;

    Report rep;
    rep.add("adjunction/bimodule-smooth", m.id,
            smoothen(a, as_left(m)).bar_mu.is_invertible(),
            "the inducing bimodule must be smooth on the left");

    std::vector<Module> sxs, sys;
    for (const Module& x : xs) sxs.push_back(smoothen(b, as_left(x)).mod);
    for (const Module& y : ys) sys.push_back(smoothen(a, as_left(y)).mod);

    const std::size_t nx = sxs.size(), ny = sys.size();
    std::vector<SmoothenedHomAdjunction> grid;
    grid.reserve(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            grid.push_back(smoothened_hom_adjunction(m, sxs[i], sys[j]));
            rep.merge(grid.back().report);
        }
    auto at = [&](std::size_t i, std::size_t j) -> const SmoothenedHomAdjunction& {
        return grid[i * ny + j];
    };

    // Naturality in the source argument: u : X' -> X induces a square that
    // must commute with the two bijections at X and X'.
    for (std::size_t iF = 0; iF < nx; ++iF)
        for (std::size_t iT = 0; iT < nx; ++iT) {
            const Presentation hsU = module_hom_space(sxs[iF], sxs[iT]);
            for (std::size_t k = 0; k < hsU.obj.dim(); ++k) {
                const Mor u = basis_map(hsU, sxs[iF].carrier, sxs[iT].carrier, k);
                for (std::size_t j = 0; j < ny; ++j) {
                    const auto& to = at(iT, j);
                    const auto& fr = at(iF, j);
                    const Mor tu = tensor_functor_mor(fr.base.tensor, to.base.tensor, u);
                    const HomTransport lhs = transport_hom_space(
                        to.base.lhs, to.base.tensor.pres.obj, sys[j].carrier, fr.base.lhs,
                        fr.base.tensor.pres.obj, sys[j].carrier,
                        [&](const Mor& f) { return f * tu; });
                    const HomTransport rhsT = transport_hom_space(
                        to.rhs, sxs[iT].carrier, to.smoothHom.mod.carrier, fr.rhs,
                        sxs[iF].carrier, fr.smoothHom.mod.carrier,
                        [&](const Mor& g) { return g * u; });
                    const bool ok = lhs.landed && rhsT.landed &&
                                    rhsT.map * to.bijection == fr.bijection * lhs.map;
                    rep.add("adjunction/naturality-source",
                            m.id + ":" + sxs[iF].id + "->" + sxs[iT].id + "," + sys[j].id, ok,
                            ok ? "" : "square does not commute");
                }
            }
        }

    // Naturality in the target argument: v : Y -> Y'.
    for (std::size_t jF = 0; jF < ny; ++jF)
        for (std::size_t jT = 0; jT < ny; ++jT) {
            const Presentation hsV = module_hom_space(sys[jF], sys[jT]);
            for (std::size_t k = 0; k < hsV.obj.dim(); ++k) {
                const Mor v = basis_map(hsV, sys[jF].carrier, sys[jT].carrier, k);
                for (std::size_t i = 0; i < nx; ++i) {
                    const auto& fr = at(i, jF);
                    const auto& to = at(i, jT);
                    const Mor hv = hom_functor_mor(fr.base.innerHom, to.base.innerHom, v);
                    const Mor shv = smoothen_mor(hv, fr.smoothHom, to.smoothHom);
                    const HomTransport lhs = transport_hom_space(
                        fr.base.lhs, fr.base.tensor.pres.obj, sys[jF].carrier, to.base.lhs,
                        to.base.tensor.pres.obj, sys[jT].carrier,
                        [&](const Mor& f) { return v * f; });
                    const HomTransport rhsT = transport_hom_space(
                        fr.rhs, sxs[i].carrier, fr.smoothHom.mod.carrier, to.rhs,
                        sxs[i].carrier, to.smoothHom.mod.carrier,
                        [&](const Mor& g) { return shv * g; });
                    const bool ok = lhs.landed && rhsT.landed &&
                                    rhsT.map * fr.bijection == to.bijection * lhs.map;
                    rep.add("adjunction/naturality-target",
                            m.id + ":" + sxs[i].id + "," + sys[jF].id + "->" + sys[jT].id, ok,
                            ok ? "" : "square does not commute");
                }
            }
        }
    return rep;
}

MoritaWitness morita_witness_from_pairing(const PairingAlgebra& pa) {
    const Algebra one = unit_algebra();
    Module p = make_bimodule(pa.alg, one, pa.v, pa.actV, right_unitor(pa.v), "V");
    Module q = make_bimodule(one, pa.alg, pa.w, left_unitor(pa.w), pa.actW, "W");
    return MoritaWitness{pa.alg, one, std::move(p), std::move(q),
                         Mor::identity(pa.alg.carrier), pa.b};
}

MoritaWitness morita_witness_matrix_unit(std::size_t n) {
    if (n == 0) throw InputError("morita_witness_matrix_unit: n must be positive");
    const Algebra a = matrix_algebra(n);
    const Algebra one = unit_algebra();
    const Obj col = Obj::atom("col", n), row = Obj::atom("row", n);

    Mat colAct(n, n * n * n);  // E_ij . e_k = [j==k] e_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) colAct.at(i, (i * n + j) * n + j) = Rat(1);
    Module p = make_bimodule(a, one, col, Mor(Obj::tensor(a.carrier, col), col, colAct),
                             right_unitor(col), "col");

    Mat rowAct(n, n * n * n);  // f_k . E_ij = [k==i] f_j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rowAct.at(j, i * n * n + i * n + j) = Rat(1);
    Module q = make_bimodule(one, a, row, left_unitor(row),
                             Mor(Obj::tensor(row, a.carrier), row, rowAct), "row");

    Mor isoPQ(Obj::tensor(col, row), a.carrier, Mat::identity(n * n));  // e_i(x)f_j -> E_ij
    Mat dot(1, n * n);
    for (std::size_t i = 0; i < n; ++i) dot.at(0, i * n + i) = Rat(1);
    Mor isoQP(Obj::tensor(row, col), one.carrier, dot);  // f_i(x)e_j -> [i==j]
    return MoritaWitness{a, one, std::move(p), std::move(q), std::move(isoPQ),
                         std::move(isoQP)};
}

Report verify_morita(const MoritaWitness& w, const std::vector<Module>& samplesA,
                     const std::vector<Module>& samplesB) {
    require(w.p.actLeft && w.p.actRight && same_algebra(*w.p.algebraLeft, w.algA) &&
                same_algebra(*w.p.algebraRight, w.algB),
            "verify_morita: P is not an (A,B)-bimodule");
    require(w.q.actLeft && w.q.actRight && same_algebra(*w.q.algebraLeft, w.algB) &&
                same_algebra(*w.q.algebraRight, w.algA),
            "verify_morita: Q is not a (B,A)-bimodule");
    const std::string nm = w.algA.name + "<->" + w.algB.name;
    Report rep;

    rep.add("morita/self-induced", nm,
            is_self_induced(w.algA) && is_self_induced(w.algB), "");

    // Smoothness of the witness bimodules on both sides.
    rep.add("morita/p-smooth-left", nm,
            smoothen(w.algA, as_left(w.p)).bar_mu.is_invertible(), "");
    BalancedTensor pB = balanced_tensor(w.algB, w.p, regular_bimodule(w.algB));
    rep.add("morita/p-smooth-right", nm,
            descend_from(*w.p.actRight, pB.pres).is_invertible(), "");
    rep.add("morita/q-smooth-left", nm,
            smoothen(w.algB, as_left(w.q)).bar_mu.is_invertible(), "");
    BalancedTensor qA = balanced_tensor(w.algA, w.q, regular_bimodule(w.algA));
    const Mor rhoQ = descend_from(*w.q.actRight, qA.pres);
    rep.add("morita/q-smooth-right", nm, rhoQ.is_invertible(), "");

    // The two isomorphisms: descend, invert, and respect both actions.
    BalancedTensor pq = balanced_tensor(w.algB, w.p, w.q);  // (A,A)-bimodule
    BalancedTensor qp = balanced_tensor(w.algA, w.q, w.p);  // (B,B)-bimodule
    std::optional<Mor> f1, f2;
    try {
        f1 = descend_from(w.isoPQ, pq.pres);
        rep.add("morita/iso-pq-descends", nm, true, "");
    } catch (const AxiomError&) {
        rep.add("morita/iso-pq-descends", nm, false,
                "the map P(x)Q -> A does not kill the balancing relations");
    }
    try {
        f2 = descend_from(w.isoQP, qp.pres);
        rep.add("morita/iso-qp-descends", nm, true, "");
    } catch (const AxiomError&) {
        rep.add("morita/iso-qp-descends", nm, false,
                "the map Q(x)P -> B does not kill the balancing relations");
    }
    if (f1) {
        rep.add("morita/iso-pq-invertible", nm, f1->is_invertible(),
                dims(pq.result.dim(), w.algA.dim()));
        const Mor idA = Mor::identity(w.algA.carrier);
        rep.add("morita/iso-pq-bimodule", nm,
                *f1 * *pq.result.actLeft == w.algA.mu * tensor_mor(idA, *f1) &&
                    *f1 * *pq.result.actRight == w.algA.mu * tensor_mor(*f1, idA),
                "");
        if (!f1->is_invertible()) f1.reset();
    }
    if (f2) {
        rep.add("morita/iso-qp-invertible", nm, f2->is_invertible(),
                dims(qp.result.dim(), w.algB.dim()));
        const Mor idB = Mor::identity(w.algB.carrier);
        rep.add("morita/iso-qp-bimodule", nm,
                *f2 * *qp.result.actLeft == w.algB.mu * tensor_mor(idB, *f2) &&
                    *f2 * *qp.result.actRight == w.algB.mu * tensor_mor(*f2, idB),
                "");
        if (!f2->is_invertible()) f2.reset();
    }

    std::vector<Module> baseA, baseB;
    for (const Module& x : samplesA) baseA.push_back(as_left(x));
    for (const Module& y : samplesB) baseB.push_back(as_left(y));
    if (baseA.empty()) baseA.push_back(left_regular_module(w.algA));
    if (baseB.empty()) baseB.push_back(left_regular_module(w.algB));

    std::vector<Module> smoothA, smoothB;
    for (const Module& x : baseA) smoothA.push_back(smoothen(w.algA, x).mod);
    for (const Module& y : baseB) smoothB.push_back(smoothen(w.algB, y).mod);

    // Tensor roundtrips on smooth samples: P (x)_B (Q (x)_A X) ~= X and
    // Q (x)_A (P (x)_B Y) ~= Y.
    if (f1)
        for (const Module& x : smoothA) {
            TripleAssoc ta = triple_assoc(w.algB, w.algA, w.p, w.q, x);
            Smoothened sx = smoothen(w.algA, x);
            const Mor mid =
                descend(tensor_mor(*f1, Mor::identity(x.carrier)), ta.outerLeft.pres,
                        sx.bt.pres);
            const Mor comp = sx.bar_mu * mid * ta.bwd;
            rep.add("morita/roundtrip-a", nm + ":" + x.id, comp.is_invertible(),
                    dims(ta.outerRight.result.dim(), x.dim()));
        }
    if (f2)
        for (const Module& y : smoothB) {
            TripleAssoc ta = triple_assoc(w.algA, w.algB, w.q, w.p, y);
            Smoothened sy = smoothen(w.algB, y);
            const Mor mid =
                descend(tensor_mor(*f2, Mor::identity(y.carrier)), ta.outerLeft.pres,
                        sy.bt.pres);
            const Mor comp = sy.bar_mu * mid * ta.bwd;
            rep.add("morita/roundtrip-b", nm + ":" + y.id, comp.is_invertible(),
                    dims(ta.outerRight.result.dim(), y.dim()));
        }

    // Hom-side roundtrip on rough samples: Hom_B(Q, Hom_A(P, X)) ~= X.
    if (f1)
        for (const Module& x : baseA) {
            const Module xr = roughen(w.algA, x).mod;
            BalancedHom h1 = balanced_hom(w.algA, w.p, xr);         // left-B
            BalancedHom h2 = balanced_hom(w.algB, w.q, h1.result);  // left-A
            Roughened rr = roughen(w.algA, xr);
            if (!rr.bar_mu_dagger.is_invertible()) {
                rep.add("morita/rough-roundtrip", nm + ":" + xr.id, false,
                        "roughened sample is not rough");
                continue;
            }
            const Mor f1inv = f1->inverse();
            const HomTransport t = transport_hom_space(
                h2.pres, w.q.carrier, h1.pres.obj, rr.bh.pres, w.algA.carrier, xr.carrier,
                [&](const Mor& g) {
                    return descend_from(uncurry(h1.pres.into * g), pq.pres) * f1inv;
                });
            const bool pass = t.landed && h2.pres.obj.dim() == xr.dim() &&
                              (rr.bar_mu_dagger.inverse() * t.map).is_invertible();
            rep.add("morita/rough-roundtrip", nm + ":" + xr.id, pass,
                    dims(h2.pres.obj.dim(), xr.dim()));
        }

    // Rough_A(P (x)_B Smooth_B(X)) ~= Hom_B(Q, X) on rough samples over B.
    if (f2 && rhoQ.is_invertible())
        for (const Module& y : baseB) {
            const Module xB = roughen(w.algB, y).mod;
            Smoothened sS = smoothen(w.algB, xB);  // S := Smooth_B(X), bar: S -> X
            const Module& s = sS.mod;
            TripleAssoc ta = triple_assoc(w.algA, w.algB, w.q, w.p, s);
            const Module ps = ta.innerRight.result;  // P (x)_B S, left-A
            Roughened r = roughen(w.algA, ps);
            BalancedHom homQX = balanced_hom(w.algB, w.q, xB);
            Smoothened sOfS = smoothen(w.algB, s);
            const Mor stepIso = descend(tensor_mor(*f2, Mor::identity(s.carrier)),
                                        ta.outerLeft.pres, sOfS.bt.pres);
            const Mor rhoQinv = rhoQ.inverse();
            const HomTransport t = transport_hom_space(
                r.bh.pres, w.algA.carrier, ps.carrier, homQX.pres, w.q.carrier, xB.carrier,
                [&](const Mor& g) {
                    const Mor step1 = descend(tensor_mor(Mor::identity(w.q.carrier), g),
                                              qA.pres, ta.outerRight.pres);
                    return sS.bar_mu * sOfS.bar_mu * stepIso * ta.bwd * step1 * rhoQinv;
                });
            const bool pass = t.landed && r.bh.pres.obj.dim() == homQX.pres.obj.dim() &&
                              t.map.is_invertible();
            rep.add("morita/rough-morita-smooth", nm + ":" + xB.id, pass,
                    "Rough(P(x)Smooth(X)) vs Hom(Q,X): " +
                        dims(r.bh.pres.obj.dim(), homQX.pres.obj.dim()));
        }

    // Tensoring with Q identifies hom-spaces of smooth modules.
    for (const Module& x : smoothA)
        for (const Module& y : smoothA) {
            const Presentation hsA = module_hom_space(x, y);
            BalancedTensor qx = balanced_tensor(w.algA, w.q, x);
            BalancedTensor qy = balanced_tensor(w.algA, w.q, y);
            const Presentation hsB = module_hom_space(qx.result, qy.result);
            const HomTransport t = transport_hom_space(
                hsA, x.carrier, y.carrier, hsB, qx.pres.obj, qy.pres.obj,
                [&](const Mor& f) { return tensor_functor_mor(qx, qy, f); });
            const bool pass =
                t.landed && hsA.obj.dim() == hsB.obj.dim() && t.map.is_invertible();
            rep.add("morita/homspace-iso", nm + ":" + x.id + "," + y.id, pass,
                    dims(hsA.obj.dim(), hsB.obj.dim()));
        }
    return rep;
}

Module pullback_module(const Algebra& a, const Mor& f, const Module& x) {
    require(x.actLeft.has_value(), "pullback_module: x must be a left module");
    require(f.dom() == a.carrier && f.cod() == x.algebraLeft->carrier,
            "pullback_module: map does not go from the new algebra into the acting one");
    return make_left_module(a, x.carrier,
                            *x.actLeft * tensor_mor(f, Mor::identity(x.carrier)),
                            "pullback(" + x.id + ")");
}

HomInducedFunctors hom_induced_functors(const Algebra& a, const Algebra& b, const Mor& f,
                                        const std::vector<Module>& samplesB,
                                        const std::vector<Module>& samplesA) {
    require(f.dom() == a.carrier && f.cod() == b.carrier,
            "hom_induced_functors: map does not go A -> B");
    if (!(f * a.mu == b.mu * tensor_mor(f, f)))
        throw AxiomError("hom-functors/multiplicative",
                         "the given map is not an algebra homomorphism");
    const std::string nm = a.name + "->" + b.name;
    Report rep;
    rep.add("hom-functors/multiplicative", nm, true, "");
    rep.add("hom-functors/self-induced", nm, is_self_induced(a) && is_self_induced(b), "");

    const Mor idB = Mor::identity(b.carrier);
    Module mAB = make_bimodule(a, b, b.carrier, b.mu * tensor_mor(f, idB), b.mu,
                               b.name + "-as-(A,B)");
    Module mBA = make_bimodule(b, a, b.carrier, b.mu, b.mu * tensor_mor(idB, f),
                               b.name + "-as-(B,A)");

    const bool premiseL = smoothen(a, as_left(mAB)).bar_mu.is_invertible();
    BalancedTensor btBA = balanced_tensor(a, mBA, regular_bimodule(a));  // B (x)_A A
    const Mor rhoB = descend_from(*mBA.actRight, btBA.pres);
    const bool premiseR = rhoB.is_invertible();
    const std::string premiseTxt = std::string("premise(B smooth left)=") +
                                   (premiseL ? "yes" : "no") + " premise(B smooth right)=" +
                                   (premiseR ? "yes" : "no");

    const Module n = smoothen(a, mAB).mod;  // A (x)_A B, an (A,B)-bimodule
    const Module m2 = btBA.result;          // B (x)_A A, a (B,A)-bimodule

    std::vector<Module> sxs, sys;
    for (const Module& x : samplesB) sxs.push_back(smoothen(b, as_left(x)).mod);
    for (const Module& y : samplesA) sys.push_back(smoothen(a, as_left(y)).mod);
    if (sxs.empty()) sxs.push_back(smoothen(b, left_regular_module(b)).mod);
    if (sys.empty()) sys.push_back(smoothen(a, left_regular_module(a)).mod);

    for (const Module& x : sxs)
        for (const Module& y : sys) {
            SmoothenedHomAdjunction adj = smoothened_hom_adjunction(n, x, y);
            rep.add("hom-functors/pair-one", nm + ":" + x.id + "," + y.id,
                    adj.report.all_pass(),
                    dims(adj.base.lhs.obj.dim(), adj.rhs.obj.dim()));
            SmoothenedHomAdjunction adj2 = smoothened_hom_adjunction(m2, y, x);
            rep.add("hom-functors/pair-two", nm + ":" + y.id + "," + x.id,
                    adj2.report.all_pass(),
                    dims(adj2.base.lhs.obj.dim(), adj2.rhs.obj.dim()));
        }

    // The first left adjoint is the smoothened pullback: N (x)_B X ~= Smooth_A(f*X).
    for (const Module& x : sxs) {
        TripleAssoc ta = triple_assoc(a, b, regular_bimodule(a), mAB, x);
        const Mor barMid = descend_from(*x.actLeft, ta.innerRight.pres);  // B (x)_B X -> X
        Smoothened sFX = smoothen(a, pullback_module(a, f, x));
        const Mor iso = descend(tensor_mor(Mor::identity(a.carrier), barMid),
                                ta.outerRight.pres, sFX.bt.pres);
        const Mor total = iso * ta.fwd;
        rep.add("hom-functors/pullback-vs-tensor", nm + ":" + x.id, total.is_invertible(),
                dims(ta.outerLeft.result.dim(), sFX.mod.dim()));
    }

    // The second left adjoint is plain tensoring: (B (x)_A A) (x)_A Y ~= B (x)_A Y.
    for (const Module& y : sys) {
        BalancedTensor t1 = balanced_tensor(a, m2, y);
        BalancedTensor t2 = balanced_tensor(a, mBA, y);
        const Mor cmp =
            descend(tensor_mor(rhoB, Mor::identity(y.carrier)), t1.pres, t2.pres);
        rep.add("hom-functors/beta-tensor-identification", nm + ":" + y.id,
                cmp.is_invertible(), dims(t1.result.dim(), t2.result.dim()));
    }

    // Pull-back preservation, conditional on B being smooth over A on both sides.
    for (const Module& x : samplesB.empty() ? std::vector<Module>{left_regular_module(b)}
                                            : samplesB) {
        const Module x0 = as_left(x);
        const Module xs = smoothen(b, x0).mod;
        const bool keepsSmooth =
            smoothen(a, pullback_module(a, f, xs)).bar_mu.is_invertible();
        rep.add("hom-functors/pullback-preserves-smooth", nm + ":" + x0.id,
                !(premiseL && premiseR) || keepsSmooth,
                premiseTxt + " conclusion=" + (keepsSmooth ? "yes" : "no"));
        const Module xr = roughen(b, x0).mod;
        const bool keepsRough =
            roughen(a, pullback_module(a, f, xr)).bar_mu_dagger.is_invertible();
        rep.add("hom-functors/pullback-preserves-rough", nm + ":" + x0.id,
                !(premiseL && premiseR) || keepsRough,
                premiseTxt + " conclusion=" + (keepsRough ? "yes" : "no"));
    }

    return HomInducedFunctors{a, b, f, std::move(mAB), std::move(mBA), std::move(rep)};
}

TabulatedRepresentation bimodule_of_tabulated_functor(const FunctorTable& t) {
    TabulatedRepresentation out;
    Report& rep = out.report;
    const std::size_t dA = t.a.dim();

    const FunctorCell* reg = nullptr;
    for (const FunctorCell& c : t.cells)
        if (c.id == "regular") reg = &c;
    if (!reg) throw InputError("bimodule_of_tabulated_functor: table lacks a regular cell");
    if (!(reg->source.carrier == t.a.carrier) || !reg->source.actLeft ||
        !(*reg->source.actLeft == t.a.mu))
        throw InputError(
            "bimodule_of_tabulated_functor: the regular cell does not hold the regular module");
    const Module& fa = reg->image;
    const std::size_t dM = fa.dim();
    require(fa.actLeft && same_algebra(*fa.algebraLeft, t.b),
            "bimodule_of_tabulated_functor: images must be left modules over the target algebra");

    auto fail = [&](const std::string& cell, const std::string& reason) {
        if (out.failureCell.empty()) {
            out.failureCell = cell;
            out.failureReason = reason;
        }
    };

    // Every tabulated image of a module map must be linear over the target.
    for (const FunctorCell& c : t.cells) {
        require(c.source.actLeft && same_algebra(*c.source.algebraLeft, t.a),
                "bimodule_of_tabulated_functor: sources must be left modules over the source algebra");
        if (c.homAction.rows() != dM * c.image.dim() || c.homAction.cols() != c.source.dim())
            throw InputError("bimodule_of_tabulated_functor: hom action has wrong shape in cell " +
                             c.id);
        bool ok = true;
        for (std::size_t x = 0; x < c.source.dim() && ok; ++x) {
            const Mor fx = unflatten_map(fa.carrier, c.image.carrier, c.homAction.column_vec(x));
            ok = fx * *fa.actLeft ==
                 *c.image.actLeft * tensor_mor(Mor::identity(t.b.carrier), fx);
        }
        rep.add("functor/hom-action-linear", c.id, ok,
                ok ? "" : "a tabulated image map is not linear over the target algebra");
        if (!ok) fail(c.id, "a tabulated image map is not linear over the target algebra");
    }

    // Right action of the source algebra on M := F(A), from the regular cell.
    Mat act(dM, dM * dA);
    for (std::size_t m = 0; m < dM; ++m)
        for (std::size_t aIdx = 0; aIdx < dA; ++aIdx)
            for (std::size_t mOut = 0; mOut < dM; ++mOut)
                act.at(mOut, m * dA + aIdx) = reg->homAction.at(m * dM + mOut, aIdx);
    std::optional<Module> bimod;
    try {
        bimod = make_bimodule(t.b, t.a, fa.carrier, *fa.actLeft,
                              Mor(Obj::tensor(fa.carrier, t.a.carrier), fa.carrier, act),
                              "F(" + t.a.name + ")");
        rep.add("functor/right-action-laws", "regular", true, "");
    } catch (const AxiomError& e) {
        rep.add("functor/right-action-laws", "regular", false, e.what());
        fail("regular", std::string("induced right action: ") + e.what());
    }
    if (!bimod) return out;

    BalancedTensor ms = balanced_tensor(t.a, *bimod, regular_bimodule(t.a));
    const bool rightSmooth = descend_from(*bimod->actRight, ms.pres).is_invertible();
    rep.add("functor/recovered-right-smooth", "regular", rightSmooth,
            dims(ms.result.dim(), dM));
    if (!rightSmooth) fail("regular", "the recovered module is not smooth on the right");

    // Comparison maps M (x)_A X -> F(X) for every cell.
    for (const FunctorCell& c : t.cells) {
        const std::size_t dX = c.source.dim(), dFX = c.image.dim();
        BalancedTensor bt = balanced_tensor(t.a, *bimod, c.source);
        Mat k(dFX, dM * dX);
        for (std::size_t m = 0; m < dM; ++m)
            for (std::size_t x = 0; x < dX; ++x)
                for (std::size_t fy = 0; fy < dFX; ++fy)
                    k.at(fy, m * dX + x) = c.homAction.at(m * dFX + fy, x);
        const Mor kamb(Obj::tensor(fa.carrier, c.source.carrier), c.image.carrier, k);
        Mor kappa = Mor::zero(bt.pres.obj, c.image.carrier);
        bool descends = true;
        try {
            kappa = descend_from(kamb, bt.pres);
        } catch (const AxiomError&) {
            descends = false;
        }
        rep.add("functor/comparison-descends", c.id, descends,
                descends ? "" : "comparison map does not respect the balancing relations");
        if (!descends) {
            fail(c.id, "comparison map does not respect the balancing relations");
            continue;
        }
        const bool lin = kappa * *bt.result.actLeft ==
                         *c.image.actLeft * tensor_mor(Mor::identity(t.b.carrier), kappa);
        rep.add("functor/comparison-linear", c.id, lin,
                lin ? "" : "comparison map is not linear over the target algebra");
        if (!lin) {
            fail(c.id, "comparison map is not linear over the target algebra");
            continue;
        }
        const bool iso = kappa.is_invertible();
        rep.add("functor/comparison-iso", c.id, iso, dims(bt.result.dim(), dFX));
        if (!iso) fail(c.id, "comparison map M(x)X -> F(X) is not invertible");
    }

    // Coherence of the tabulated tensor-compatibility cell, when present.
    if (t.tensorCell) {
        const TensorCell& tc = *t.tensorCell;
        const Obj aa = Obj::tensor(t.a.carrier, t.a.carrier);
        const Mor firstFactor =
            tensor_mor(t.a.mu, Mor::identity(t.a.carrier)) *
            associator_inv(t.a.carrier, t.a.carrier, t.a.carrier);
        const bool src = tc.source.carrier == aa && tc.source.actLeft &&
                         *tc.source.actLeft == firstFactor;
        rep.add("functor/tensor-cell-source", "tensor-cell", src,
                src ? "" : "the tensor cell must hold A(x)A acting on the first factor");
        bool coh = false;
        if (src && tc.c.is_invertible() &&
            tc.c.cod() == Obj::tensor(fa.carrier, t.a.carrier) &&
            tc.fMu.cod() == fa.carrier)
            coh = *bimod->actRight == tc.fMu * tc.c.inverse();
        rep.add("functor/coherence-cell", "tensor-cell", coh,
                coh ? "" : "F(mu) o c^-1 does not reproduce the induced right action");
        if (!src || !coh) fail("tensor-cell", "tensor-compatibility coherence fails");
    }

    out.representable = rep.all_pass();
    if (out.representable) out.bimodule = std::move(bimod);
    return out;
}

FunctorTable tabulate_tensor_functor(const Module& m, const std::vector<Module>& sources) {
    require(m.actLeft && m.actRight, "tabulate_tensor_functor: m must be a bimodule");
    const Algebra& b = *m.algebraLeft;
    const Algebra& a = *m.algebraRight;
    FunctorTable tab{a, b, {}, std::nullopt};

    const Module regular = left_regular_module(a);
    BalancedTensor btReg = balanced_tensor(a, m, regular);
    const std::size_t dFA = btReg.result.dim();

    auto addCell = [&](const std::string& id, const Module& src, const BalancedTensor& bt) {
        Mat t(dFA * bt.result.dim(), src.dim());
        for (std::size_t x = 0; x < src.dim(); ++x) {
            const Mor fx = descend(
                tensor_mor(Mor::identity(m.carrier), action_orbit_map(a, src, x)),
                btReg.pres, bt.pres);
            t.set_column(x, flatten_map(fx));
        }
        tab.cells.push_back(FunctorCell{id, src, bt.result, std::move(t)});
    };
    addCell("regular", regular, btReg);
    std::size_t k = 0;
    for (const Module& s : sources) {
        const Module s0 = as_left(s);
        if (s0.id == "regular") continue;
        BalancedTensor bt = balanced_tensor(a, m, s0);
        addCell(s0.id.empty() ? "cell" + std::to_string(k) : s0.id, s0, bt);
        ++k;
    }

    const Obj aa = Obj::tensor(a.carrier, a.carrier);
    const Module square =
        make_left_module(a, aa,
                         tensor_mor(a.mu, Mor::identity(a.carrier)) *
                             associator_inv(a.carrier, a.carrier, a.carrier),
                         "square");
    BalancedTensor btSq = balanced_tensor(a, m, square);
    const Mor fMu =
        descend(tensor_mor(Mor::identity(m.carrier), a.mu), btSq.pres, btReg.pres);
    const Mor c = descend_from(
        tensor_mor(btReg.pres.onto, Mor::identity(a.carrier)) *
            associator_inv(m.carrier, a.carrier, a.carrier),
        btSq.pres);
    tab.tensorCell = TensorCell{square, btSq.result, fMu, c};
    return tab;
}

FunctorTable tabulate_corrupted_tensor_functor(const Module& m,
                                               const std::vector<Module>& sources) {
    FunctorTable tab = tabulate_tensor_functor(m, sources);
    FunctorCell& victim = tab.cells.back();
    require(victim.homAction.rows() > 0 && victim.homAction.cols() > 0,
            "tabulate_corrupted_tensor_functor: nothing to corrupt");
    victim.homAction.at(0, 0) = victim.homAction.at(0, 0) + Rat(1);
    return tab;
}

}  // namespace sia
