#include "sia/smooth_rough.hpp"

namespace sia {

Smoothened smoothen(const Algebra& a, const Module& x) {
    if (!x.actLeft || !same_algebra(*x.algebraLeft, a))
        throw TypeError("smoothen: not a left module over the given algebra");
    BalancedTensor bt = balanced_tensor(a, regular_bimodule(a), x);
    Mor barMu = descend_from(*x.actLeft, bt.pres);
    if (!(barMu * *bt.result.actLeft ==
          *x.actLeft * tensor_mor(Mor::identity(a.carrier), barMu)))
        throw AxiomError("smoothen/canonical-linearity",
                         "the comparison map is not a module map");
    Module mod = bt.result;
    mod.id = "smooth(" + x.id + ")";
    return Smoothened{std::move(bt), std::move(mod), std::move(barMu)};
}

Roughened roughen(const Algebra& a, const Module& x) {
    if (!x.actLeft || !same_algebra(*x.algebraLeft, a))
        throw TypeError("roughen: not a left module over the given algebra");
    BalancedHom bh = balanced_hom(a, regular_bimodule(a), x);
    Mor dagger = corestrict(curry(*x.actLeft), bh.pres);
    if (!(dagger * *x.actLeft ==
          *bh.result.actLeft * tensor_mor(Mor::identity(a.carrier), dagger)))
        throw AxiomError("roughen/canonical-linearity",
                         "the comparison map is not a module map");
    Module mod = bh.result;
    mod.id = "rough(" + x.id + ")";
    return Roughened{std::move(bh), std::move(mod), std::move(dagger)};
}

Mor smoothen_mor(const Mor& f, const Smoothened& sx, const Smoothened& sy) {
    if (f.dom() != sx.bt.right.carrier || f.cod() != sy.bt.right.carrier)
        throw TypeError("smoothen_mor: map does not connect the smoothened modules");
    return descend(tensor_mor(Mor::identity(sx.bt.over.carrier), f), sx.bt.pres, sy.bt.pres);
}

Mor roughen_mor(const Mor& f, const Roughened& rx, const Roughened& ry) {
    if (f.dom() != rx.bh.target.carrier || f.cod() != ry.bh.target.carrier)
        throw TypeError("roughen_mor: map does not connect the roughened modules");
    return restrict_between(hom_post(f, rx.bh.over.carrier), rx.bh.pres, ry.bh.pres);
}

bool is_self_induced(const Algebra& a) {
    return smoothen(a, left_regular_module(a)).bar_mu.is_invertible();
}

bool is_smooth(const Algebra& a, const Module& x) {
    if (!is_self_induced(a)) throw TypeError("is_smooth: algebra is not self-induced");
    return smoothen(a, x).bar_mu.is_invertible();
}

bool is_rough(const Algebra& a, const Module& x) {
    if (!is_self_induced(a)) throw TypeError("is_rough: algebra is not self-induced");
    return roughen(a, x).bar_mu_dagger.is_invertible();
}

Report theorem_check(const Algebra& a, const Module& x) { return theorem_check(a, x, x); }

Report theorem_check(const Algebra& a, const Module& x, const Module& partner) {
    if (!is_self_induced(a)) throw TypeError("theorem_check: algebra is not self-induced");
    Report rep;
    const Module x0 = as_left(x);
    const Module y0 = as_left(partner);

    const Smoothened sx = smoothen(a, x0);
    const Roughened rx = roughen(a, x0);
    const Smoothened ssx = smoothen(a, sx.mod);
    const Roughened rsx = roughen(a, sx.mod);
    const Smoothened srx = smoothen(a, rx.mod);
    const Roughened rrx = roughen(a, rx.mod);

    const Mor sMu = smoothen_mor(sx.bar_mu, ssx, sx);            // S(S X) -> S(X)
    const Mor sDag = smoothen_mor(rx.bar_mu_dagger, sx, srx);    // S(X) -> S(R X)
    const Mor rMu = roughen_mor(sx.bar_mu, rsx, rx);             // R(S X) -> R(X)
    const Mor rDag = roughen_mor(rx.bar_mu_dagger, rx, rrx);     // R(X) -> R(R X)

    rep.add("theorem/grid-square-11", x0.id, sx.bar_mu * sMu == sx.bar_mu * ssx.bar_mu,
            "smoothened square over " + a.name);
    rep.add("theorem/grid-square-12", x0.id,
            srx.bar_mu * sDag == rx.bar_mu_dagger * sx.bar_mu,
            "mixed smooth/rough square over " + a.name);
    rep.add("theorem/grid-square-21", x0.id,
            rx.bar_mu_dagger * sx.bar_mu == rMu * rsx.bar_mu_dagger,
            "mixed rough/smooth square over " + a.name);
    rep.add("theorem/grid-square-22", x0.id,
            rrx.bar_mu_dagger * rx.bar_mu_dagger == rDag * rx.bar_mu_dagger,
            "roughened square over " + a.name);
    rep.add("theorem/smoothened-canonical-equality", x0.id, ssx.bar_mu == sMu,
            "comparison map of the smoothening is the smoothened comparison map");
    rep.add("theorem/roughened-canonical-equality", x0.id, rrx.bar_mu_dagger == rDag,
            "comparison map of the roughening is the roughened comparison map");

    rep.add("theorem/iso-smooth-of-tensor-canonical", x0.id, sMu.is_invertible(), "");
    rep.add("theorem/iso-smooth-of-hom-canonical", x0.id, sDag.is_invertible(), "");
    rep.add("theorem/iso-rough-of-tensor-canonical", x0.id, rMu.is_invertible(), "");
    rep.add("theorem/iso-rough-of-hom-canonical", x0.id, rDag.is_invertible(), "");
    rep.add("theorem/iso-smoothened-tensor-canonical", x0.id, ssx.bar_mu.is_invertible(), "");
    rep.add("theorem/iso-roughened-hom-canonical", x0.id,
            rrx.bar_mu_dagger.is_invertible(), "");

    const Smoothened sy = smoothen(a, y0);
    const Roughened ry = roughen(a, y0);
    const Smoothened sry = smoothen(a, ry.mod);
    const Roughened rsy = roughen(a, sy.mod);
    const Mor sDagY = smoothen_mor(ry.bar_mu_dagger, sy, sry);   // S(Y) -> S(R Y)
    const Mor rMuY = roughen_mor(sy.bar_mu, rsy, ry);            // R(S Y) -> R(Y)
    const std::string pairName = x0.id + "|" + y0.id;

    {  // maps S(X) -> Y correspond to maps X -> R(Y) through the unit/counit.
        const Presentation lhs = module_hom_space(sx.mod, y0);
        const Presentation rhs = module_hom_space(x0, ry.mod);
        bool ok = rMu.is_invertible() && sDagY.is_invertible();
        std::string details;
        if (ok) {
            const Mor eta = rMu.inverse() * rx.bar_mu_dagger;  // X -> R(S X)
            const Mor eps = sy.bar_mu * sDagY.inverse();       // S(R Y) -> Y
            const HomTransport phi = transport_hom_space(
                lhs, sx.mod.carrier, y0.carrier, rhs, x0.carrier, ry.mod.carrier,
                [&](const Mor& f) { return roughen_mor(f, rsx, ry) * eta; });
            const HomTransport psi = transport_hom_space(
                rhs, x0.carrier, ry.mod.carrier, lhs, sx.mod.carrier, y0.carrier,
                [&](const Mor& g) { return eps * smoothen_mor(g, sx, sry); });
            ok = phi.landed && psi.landed && phi.map.is_invertible() &&
                 psi.map == phi.map.inverse();
            details = "homset dims " + std::to_string(lhs.obj.dim()) + " vs " +
                      std::to_string(rhs.obj.dim());
        } else {
            details = "prerequisite isomorphisms unavailable";
        }
        rep.add("theorem/adjunction-unit-counit", pairName, ok, details);
    }
    {  // against a smooth source, postcomposition with the comparison map is a bijection.
        const Presentation lhs = module_hom_space(sx.mod, sy.mod);
        const Presentation rhs = module_hom_space(sx.mod, y0);
        const HomTransport t = transport_hom_space(
            lhs, sx.mod.carrier, sy.mod.carrier, rhs, sx.mod.carrier, y0.carrier,
            [&](const Mor& g) { return sy.bar_mu * g; });
        rep.add("theorem/adjunction-smooth-source", pairName, t.landed && t.map.is_invertible(),
                "homset dims " + std::to_string(lhs.obj.dim()) + " vs " +
                    std::to_string(rhs.obj.dim()));
    }
    {  // against a rough target, precomposition with the comparison map is a bijection.
        const Presentation lhs = module_hom_space(rx.mod, ry.mod);
        const Presentation rhs = module_hom_space(x0, ry.mod);
        const HomTransport t = transport_hom_space(
            lhs, rx.mod.carrier, ry.mod.carrier, rhs, x0.carrier, ry.mod.carrier,
            [&](const Mor& h) { return h * rx.bar_mu_dagger; });
        rep.add("theorem/adjunction-rough-target", pairName, t.landed && t.map.is_invertible(),
                "homset dims " + std::to_string(lhs.obj.dim()) + " vs " +
                    std::to_string(rhs.obj.dim()));
    }
    {  // maps between smoothenings correspond to maps between roughenings.
        const Presentation lhs = module_hom_space(sx.mod, sy.mod);
        const Presentation rhs = module_hom_space(rx.mod, ry.mod);
        bool ok = rMu.is_invertible() && rMuY.is_invertible();
        if (ok) {
            const Mor rMuInv = rMu.inverse();
            const HomTransport t = transport_hom_space(
                lhs, sx.mod.carrier, sy.mod.carrier, rhs, rx.mod.carrier, ry.mod.carrier,
                [&](const Mor& f) { return rMuY * roughen_mor(f, rsx, rsy) * rMuInv; });
            ok = t.landed && t.map.is_invertible();
        }
        rep.add("theorem/adjunction-smooth-rough-homsets", pairName, ok,
                "homset dims " + std::to_string(lhs.obj.dim()) + " vs " +
                    std::to_string(rhs.obj.dim()));
    }
    return rep;
}

Report unital_homotopy_check(const Algebra& a, const Module& x) {
    if (!a.unit) throw TypeError("unital_homotopy_check: algebra has no unit");
    const Module x0 = as_left(x);
    const Obj A = a.carrier, X = x0.carrier;
    const Mor& act = *x0.actLeft;
    Report rep;

    const Mor sA = tensor_mor(*a.unit, Mor::identity(A)) * left_unitor_inv(A);  // A -> A(x)A
    const Mor sX = tensor_mor(*a.unit, Mor::identity(X)) * left_unitor_inv(X);  // X -> A(x)X
    const Mor balancer = tensor_mor(a.mu, Mor::identity(X)) -
                         tensor_mor(Mor::identity(A), act) * associator(A, A, X);
    const bool id1 = balancer * tensor_mor(sA, Mor::identity(X)) + sX * act ==
                     Mor::identity(tensor_obj(A, X));
    rep.add("homotopy/tensor-identity", x0.id, id1,
            "unit splits the balancing map against the action");

    const Obj H = hom_obj(A, X);
    const Mor muDagger = curry(act);  // X -> Hom(A,X)
    const Mor sPrime =
        eval(A, X) * tensor_mor(*a.unit, Mor::identity(H)) * left_unitor_inv(H);  // f -> f(1)
    const Mor constraint = hom_pre(a.mu, X) - hom_post_inflate(act, A);
    const Mor sSecond =
        hom_pre(tensor_mor(Mor::identity(A), *a.unit) * right_unitor_inv(A), X);
    const bool id2 = sSecond * constraint + muDagger * sPrime == Mor::identity(H);
    rep.add("homotopy/hom-identity", x0.id, id2,
            "unit splits the linearity constraint against the curried action");
    return rep;
}

MultiplierAlgebra multiplier_left(const Algebra& a) {
    const Obj A = a.carrier;
    Roughened rough = roughen(a, left_regular_module(a));
    const Presentation pres = rough.bh.pres;
    const Mor mu =
        corestrict(composition_map(A, A, A) * tensor_mor(pres.into, pres.into), pres);
    const Mor unitK = corestrict(element_of_hom(Mor::identity(A)), pres);
    Algebra alg = make_algebra(pres.obj, mu, unitK, a.name + ".Ml");
    Report rep;
    rep.add("multiplier/left-unital", a.name, true, "dim " + std::to_string(pres.obj.dim()));
    rep.add("multiplier/left-canonical-homomorphism", a.name,
            rough.bar_mu_dagger * a.mu ==
                alg.mu * tensor_mor(rough.bar_mu_dagger, rough.bar_mu_dagger),
            "a -> right multiplication intertwines the products");
    return MultiplierAlgebra{std::move(alg), pres, rough.bar_mu_dagger, std::move(rep)};
}

MultiplierAlgebra multiplier_right(const Algebra& a) {
    const Obj A = a.carrier;
    const Algebra aop = opposite(a);
    Roughened rough = roughen(aop, left_regular_module(aop));
    const Presentation pres = rough.bh.pres;
    const Obj H = hom_obj(A, A);
    const Mor mu = corestrict(
        composition_map(A, A, A) * braiding(H, H) * tensor_mor(pres.into, pres.into), pres);
    const Mor unitK = corestrict(element_of_hom(Mor::identity(A)), pres);
    Algebra alg = make_algebra(pres.obj, mu, unitK, a.name + ".Mr");
    Report rep;
    rep.add("multiplier/right-unital", a.name, true, "dim " + std::to_string(pres.obj.dim()));
    rep.add("multiplier/right-canonical-homomorphism", a.name,
            rough.bar_mu_dagger * a.mu ==
                alg.mu * tensor_mor(rough.bar_mu_dagger, rough.bar_mu_dagger),
            "a -> left multiplication intertwines the products");
    return MultiplierAlgebra{std::move(alg), pres, rough.bar_mu_dagger, std::move(rep)};
}

DoubleCentralizer double_centralizer(std::size_t dimV, std::size_t dimW, const Mat& pairing) {
    if (pairing.rows() != dimW || pairing.cols() != dimV)
        throw TypeError("double_centralizer: pairing matrix must be dimW x dimV");
    const std::size_t dv2 = dimV * dimV;
    const std::size_t n = dv2 + dimW * dimW;
    const Obj amb = Obj::atom("dc-pairs", n);

    Mat c(dimW * dimV, n);
    for (std::size_t w = 0; w < dimW; ++w)
        for (std::size_t v = 0; v < dimV; ++v) {
            for (std::size_t j = 0; j < dimV; ++j)
                c.at(w * dimV + v, v * dimV + j) = pairing.at(w, j);
            for (std::size_t j = 0; j < dimW; ++j)
                c.at(w * dimV + v, dv2 + w * dimW + j) =
                    c.at(w * dimV + v, dv2 + w * dimW + j) - pairing.at(j, v);
        }
    Presentation pres =
        kernel_presentation(Mor(amb, Obj::atom("dc-constraints", dimW * dimV), c));

    Mat mul(n, n * n);
    for (std::size_t v = 0; v < dimV; ++v)
        for (std::size_t j = 0; j < dimV; ++j)
            for (std::size_t k = 0; k < dimV; ++k)
                mul.at(v * dimV + j, (k * dimV + j) * n + (v * dimV + k)) = Rat(1);
    for (std::size_t w = 0; w < dimW; ++w)
        for (std::size_t j = 0; j < dimW; ++j)
            for (std::size_t k = 0; k < dimW; ++k)
                mul.at(dv2 + w * dimW + j, (dv2 + w * dimW + k) * n + (dv2 + k * dimW + j)) =
                    Rat(1);
    const Mor ambMul(Obj::tensor(amb, amb), amb, mul);
    const Mor muK = corestrict(ambMul * tensor_mor(pres.into, pres.into), pres);

    std::vector<Rat> unitVec(n);
    for (std::size_t v = 0; v < dimV; ++v) unitVec[v * dimV + v] = Rat(1);
    for (std::size_t w = 0; w < dimW; ++w) unitVec[dv2 + w * dimW + w] = Rat(1);
    const Mor unitK = corestrict(Mor(Obj::unit(), amb, Mat::column(unitVec)), pres);

    Algebra alg = make_algebra(pres.obj, muK, unitK, "dc");
    return DoubleCentralizer{std::move(alg), std::move(pres)};
}

Report multiplier_suite(const Algebra& a) {
    Report rep;
    const MultiplierAlgebra ml = multiplier_left(a);
    const MultiplierAlgebra mr = multiplier_right(a);
    rep.merge(ml.report);
    rep.merge(mr.report);

    const Roughened rough = roughen(a, left_regular_module(a));
    rep.add("multiplier/left-canonical-is-rough-canonical", a.name,
            ml.canonical == rough.bar_mu_dagger,
            "the canonical map is the roughening comparison map of the regular module");

    if (is_self_induced(a)) {
        const Obj A = a.carrier;
        BalancedTensor bt = balanced_tensor(a, regular_bimodule(a), rough.mod);
        const Mor thetaAmbient =
            eval(A, A) * tensor_mor(Mor::identity(A), rough.bh.pres.into);
        const Mor theta = descend_from(thetaAmbient, bt.pres);
        const bool linear = theta * *bt.result.actLeft ==
                            a.mu * tensor_mor(Mor::identity(A), theta);
        rep.add("multiplier/recovery-linearity", a.name, linear,
                "evaluation map is a module map");
        rep.add("multiplier/smooth-multiplier-recovers-algebra", a.name,
                linear && theta.is_invertible(),
                "A (x)_A M_l(A) ~= A, dim " + std::to_string(bt.pres.obj.dim()) + " vs " +
                    std::to_string(A.dim()));
    }
    return rep;
}

Report free_rough_check(const Algebra& a, std::size_t dimV) {
    if (!is_self_induced(a)) throw TypeError("free_rough_check: algebra must be self-induced");
    Report rep;
    const Obj A = a.carrier;
    const Algebra u = unit_algebra();
    const Roughened roughA = roughen(a, left_regular_module(a));
    const Obj K = roughA.bh.pres.obj;

    Module mlBi = make_bimodule(a, u, K, *roughA.mod.actLeft, right_unitor(K), "multiplier");
    const Obj V = Obj::atom("v", dimV);
    const Module vMod = module_over_unit(V, "v");
    const Module reg = regular_bimodule(a);
    TripleAssoc ta = triple_assoc(a, u, reg, mlBi, vMod);

    const Module x = as_left(ta.innerRight.result);  // M_l (x) V as a left module
    const Smoothened sx = smoothen(a, x);
    const Roughened rx = roughen(a, x);
    const Roughened rsx = roughen(a, sx.mod);
    const Mor step1 = roughen_mor(sx.bar_mu, rsx, rx);
    rep.add("free-rough/step-smooth-comparison", a.name, step1.is_invertible(),
            "Rough(Smooth(Ml (x) V)) -> Rough(Ml (x) V), dims " +
                std::to_string(rsx.mod.dim()) + " -> " + std::to_string(rx.mod.dim()));

    const Module smlv = as_left(ta.outerLeft.result);  // Smooth(Ml) (x) V
    const Roughened rSmlv = roughen(a, smlv);
    const Mor step2 = roughen_mor(ta.bwd, rsx, rSmlv);
    rep.add("free-rough/step-rebracket", a.name, step2.is_invertible(),
            "Rough(Smooth(Ml (x) V)) -> Rough(Smooth(Ml) (x) V), dims " +
                std::to_string(rsx.mod.dim()) + " -> " + std::to_string(rSmlv.mod.dim()));

    const Mor thetaAmbient = eval(A, A) * tensor_mor(Mor::identity(A), roughA.bh.pres.into);
    const Mor theta = descend_from(thetaAmbient, ta.innerLeft.pres);  // Smooth(Ml) -> A
    const Module regU = make_bimodule(a, u, A, a.mu, right_unitor(A), "regular");
    BalancedTensor av = balanced_tensor(u, regU, vMod);  // A (x) V over the unit algebra
    const Mor thetaV =
        descend(tensor_mor(theta, Mor::identity(V)), ta.outerLeft.pres, av.pres);
    const Module avMod = as_left(av.result);
    const Roughened rAv = roughen(a, avMod);
    const Mor step3 = roughen_mor(thetaV, rSmlv, rAv);
    rep.add("free-rough/step-multiplier-identification", a.name, step3.is_invertible(),
            "Rough(Smooth(Ml) (x) V) -> Rough(A (x) V), dims " +
                std::to_string(rSmlv.mod.dim()) + " -> " + std::to_string(rAv.mod.dim()));

    const bool chainOk =
        step1.is_invertible() && step2.is_invertible() && step3.is_invertible();
    rep.add("free-rough/identification", a.name, chainOk,
            "Rough(Ml (x) V) ~= Hom_A(A, A (x) V) through the three steps");

    const std::size_t lhsDim = K.dim() * dimV;
    const std::size_t rhsDim = rAv.mod.dim();
    rep.add("free-rough/mismatch-exhibited", a.name, lhsDim != rhsDim,
            "dim Ml (x) V = " + std::to_string(lhsDim) + ", dim Hom_A(A, A (x) V) = " +
                std::to_string(rhsDim) +
                "; exact finite-dimensional computation always makes these equal");
    return rep;
}

}  // namespace sia
