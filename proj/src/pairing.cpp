#include "sia/pairing.hpp"

namespace sia {

PairingAlgebra build_pairing_algebra(const PairingSpec& spec) {
    if (spec.dimV == 0 || spec.dimW == 0)
        throw InputError("pairing: both spaces must have positive dimension");
    if (spec.pairing.rows() != spec.dimW || spec.pairing.cols() != spec.dimV)
        throw InputError("pairing: matrix must be dimW x dimV");

    const Obj v = Obj::atom("v", spec.dimV);
    const Obj w = Obj::atom("w", spec.dimW);
    const Obj one = Obj::unit();

    Mat bRow(1, spec.dimW * spec.dimV);
    for (std::size_t j = 0; j < spec.dimW; ++j)
        for (std::size_t k = 0; k < spec.dimV; ++k)
            bRow.at(0, j * spec.dimV + k) = spec.pairing.at(j, k);
    const Mor b(Obj::tensor(w, v), one, bRow);

    const Obj carrier = Obj::tensor(v, w);
    const Mor idV = Mor::identity(v), idW = Mor::identity(w);

    // inner : W (x) (V (x) W) -> W collapsing the pairing.
    const Mor inner = left_unitor(w) * tensor_mor(b, idW) * associator_inv(w, v, w);
    const Mor mu = tensor_mor(idV, inner) * associator(v, w, carrier);
    Algebra alg = make_algebra(carrier, mu, std::nullopt,
                               "pair(" + std::to_string(spec.dimV) + "," +
                                   std::to_string(spec.dimW) + ")");

    const Mor actV = right_unitor(v) * tensor_mor(idV, b) * associator(v, w, v);
    const Mor actW = inner;  // W (x) A -> W is the same collapse
    Module vModule = make_left_module(alg, v, actV, "tensorV");
    Module wModule = make_right_module(alg, w, actW, "w");

    // Witness with <w, v> = 1: first nonzero pairing entry, scanned w-major.
    std::size_t ww = spec.dimW, vv = spec.dimV;
    for (std::size_t j = 0; j < spec.dimW && ww == spec.dimW; ++j)
        for (std::size_t k = 0; k < spec.dimV; ++k)
            if (!(spec.pairing.at(j, k) == Rat(0))) {
                ww = j;
                vv = k;
                break;
            }
    if (ww == spec.dimW) throw InputError("pairing: the pairing matrix is identically zero");
    Mat wVec(spec.dimW, 1), vVec(spec.dimV, 1);
    wVec.at(ww, 0) = Rat(1);
    vVec.at(vv, 0) = spec.pairing.at(ww, vv).inv();
    const Mor witnessW(one, w, wVec);
    const Mor witnessV(one, v, vVec);

    Report rep;
    rep.add("pairing/witness-normalized", alg.name,
            b * tensor_mor(witnessW, witnessV) * left_unitor_inv(one) == Mor::identity(one),
            "<w, v> = 1 for the chosen witness pair");

    const Mor splitting =
        tensor_mor(tensor_mor(idV, witnessW), tensor_mor(witnessV, idW)) *
        tensor_mor(right_unitor_inv(v), left_unitor_inv(w));
    rep.add("pairing/splitting-section", alg.name,
            mu * splitting == Mor::identity(carrier), "mu o sigma = id");

    const Mor outerLeft =
        tensor_mor(mu, Mor::identity(carrier)) * associator_inv(carrier, carrier, carrier);
    const Mor outerRight =
        tensor_mor(Mor::identity(carrier), mu) * associator(carrier, carrier, carrier);
    const bool leftLinear = splitting * mu == outerLeft * tensor_mor(Mor::identity(carrier), splitting);
    const bool rightLinear = splitting * mu == outerRight * tensor_mor(splitting, Mor::identity(carrier));
    rep.add("pairing/splitting-bimodule-map", alg.name, leftLinear && rightLinear,
            "sigma(ab) = a.sigma(b) = sigma(a).b");

    rep.add("pairing/self-induced", alg.name, is_self_induced(alg),
            "multiplication induces A (x)_A A ~= A");

    // The kernel of the canonical map A -> M_l(A) is rad(V) (x) W exactly.
    const Mor canonical = roughen(alg, left_regular_module(alg)).bar_mu_dagger;
    const std::size_t radV = kernel_basis(spec.pairing).cols();
    const bool canonicalMonic = radV == 0;
    rep.add("pairing/canonical-kernel-is-radical", alg.name,
            rank(canonical.mat()) == alg.dim() - radV * spec.dimW,
            "corank of A -> M_l(A) is dim rad(V) * dim W = " +
                std::to_string(radV * spec.dimW));

    return PairingAlgebra{spec,    v,       w,        b,
                          std::move(alg),   actV,     actW,
                          std::move(vModule), std::move(wModule),
                          splitting, canonicalMonic, std::move(rep)};
}

NonmonicDemo nonmonic_smoothening_demo(const PairingAlgebra& pa) {
    Report rep;
    if (pa.canonicalMonic) {
        rep.add("nonmonic/applicable", pa.alg.name, true,
                "pairing is non-degenerate on V; the canonical map is monic and the "
                "demonstration does not apply");
        return NonmonicDemo{true, std::move(rep)};
    }
    const Algebra& a = pa.alg;
    const Roughened rough = roughen(a, left_regular_module(a));  // M_l as a left module
    const Smoothened sm = smoothen(a, rough.mod);

    const Mor thetaAmbient =
        eval(a.carrier, a.carrier) * tensor_mor(Mor::identity(a.carrier), rough.bh.pres.into);
    const Mor theta = descend_from(thetaAmbient, sm.bt.pres);
    rep.add("nonmonic/smooth-multiplier-recovers-algebra", a.name, theta.is_invertible(),
            "Smooth(M_l) ~= A of dimension " + std::to_string(sm.mod.dim()));

    const std::size_t r = rank(sm.bar_mu.mat());
    rep.add("nonmonic/comparison-drops-rank", a.name, r < sm.mod.dim(),
            "comparison map Smooth(M_l) -> M_l has rank " + std::to_string(r) + " < " +
                std::to_string(sm.mod.dim()));
    return NonmonicDemo{false, std::move(rep)};
}

}  // namespace sia
