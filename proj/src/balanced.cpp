#include "sia/balanced.hpp"

namespace sia {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw TypeError(msg);
}

}  // namespace

BalancedTensor balanced_tensor(const Algebra& a, const Module& x, const Module& y) {
    require(x.actRight.has_value(), "balanced_tensor: left factor needs a right action");
    require(y.actLeft.has_value(), "balanced_tensor: right factor needs a left action");
    require(same_algebra(*x.algebraRight, a), "balanced_tensor: left factor acts over a different algebra");
    require(same_algebra(*y.algebraLeft, a), "balanced_tensor: right factor acts over a different algebra");

    const Obj X = x.carrier, Y = y.carrier, A = a.carrier;
    const Mor idX = Mor::identity(X), idY = Mor::identity(Y);
    const Mor balancer = tensor_mor(*x.actRight, idY) -
                         tensor_mor(idX, *y.actLeft) * associator(X, A, Y);
    Presentation pres = cokernel_presentation(balancer);
    const Obj Q = pres.obj;
    const std::string id = x.id + "(x)" + y.id;

    std::optional<Mor> actL, actR;
    if (x.actLeft) {
        const Obj B = x.algebraLeft->carrier;
        const Mor amb = tensor_mor(*x.actLeft, idY) * associator_inv(B, X, Y);
        if (!(pres.onto * amb * tensor_mor(Mor::identity(B), balancer)).is_zero())
            throw AxiomError("balanced-tensor/induced-action",
                             "left action does not preserve the balancing relations");
        actL = pres.onto * amb * tensor_mor(Mor::identity(B), pres.into);
        if (!(*actL * tensor_mor(Mor::identity(B), pres.onto) == pres.onto * amb))
            throw AxiomError("balanced-tensor/projection-linearity",
                             "projection fails to intertwine the left actions");
    }
    if (y.actRight) {
        const Obj C = y.algebraRight->carrier;
        const Mor amb = tensor_mor(idX, *y.actRight) * associator(X, Y, C);
        if (!(pres.onto * amb * tensor_mor(balancer, Mor::identity(C))).is_zero())
            throw AxiomError("balanced-tensor/induced-action",
                             "right action does not preserve the balancing relations");
        actR = pres.onto * amb * tensor_mor(pres.into, Mor::identity(C));
        if (!(*actR * tensor_mor(pres.onto, Mor::identity(C)) == pres.onto * amb))
            throw AxiomError("balanced-tensor/projection-linearity",
                             "projection fails to intertwine the right actions");
    }

    Module result;
    if (actL && actR)
        result = make_bimodule(*x.algebraLeft, *y.algebraRight, Q, *actL, *actR, id);
    else if (actL)
        result = make_left_module(*x.algebraLeft, Q, *actL, id);
    else if (actR)
        result = make_right_module(*y.algebraRight, Q, *actR, id);
    else
        result = Module{std::nullopt, std::nullopt, Q, std::nullopt, std::nullopt, id};
    return BalancedTensor{a, x, y, balancer, std::move(pres), std::move(result)};
}

BalancedHom balanced_hom(const Algebra& a, const Module& x, const Module& y) {
    require(x.actLeft.has_value(), "balanced_hom: source needs a left action");
    require(y.actLeft.has_value(), "balanced_hom: target needs a left action");
    require(same_algebra(*x.algebraLeft, a), "balanced_hom: source acts over a different algebra");
    require(same_algebra(*y.algebraLeft, a), "balanced_hom: target acts over a different algebra");

    const Obj X = x.carrier, Y = y.carrier;
    const Mor constraint = hom_pre(*x.actLeft, Y) - hom_post_inflate(*y.actLeft, X);
    Presentation pres = kernel_presentation(constraint);
    const Obj K = pres.obj;
    const std::string id = "hom(" + x.id + "," + y.id + ")";

    std::optional<Mor> actL, actR;
    if (x.actRight) {
        const Obj B = x.algebraRight->carrier;
        const Mor composite = hom_left_act_via_source(*x.actRight, Y) *
                              tensor_mor(Mor::identity(B), pres.into);
        actL = corestrict(composite, pres);
        if (!(pres.into * *actL == composite))
            throw AxiomError("balanced-hom/inclusion-linearity",
                             "inclusion fails to intertwine the left actions");
    }
    if (y.actRight) {
        const Obj C = y.algebraRight->carrier;
        const Mor composite = hom_right_act_via_target(*y.actRight, X) *
                              tensor_mor(pres.into, Mor::identity(C));
        actR = corestrict(composite, pres);
        if (!(pres.into * *actR == composite))
            throw AxiomError("balanced-hom/inclusion-linearity",
                             "inclusion fails to intertwine the right actions");
    }

    Module result;
    if (actL && actR)
        result = make_bimodule(*x.algebraRight, *y.algebraRight, K, *actL, *actR, id);
    else if (actL)
        result = make_left_module(*x.algebraRight, K, *actL, id);
    else if (actR)
        result = make_right_module(*y.algebraRight, K, *actR, id);
    else
        result = Module{std::nullopt, std::nullopt, K, std::nullopt, std::nullopt, id};
    return BalancedHom{a, x, y, std::move(pres), std::move(result)};
}

TripleAssoc triple_assoc(const Algebra& a, const Algebra& b, const Module& x, const Module& y,
                         const Module& z) {
    require(y.actLeft && y.actRight, "triple_assoc: middle module must be a bimodule");

    BalancedTensor innerLeft = balanced_tensor(a, x, y);        // X (x)_A Y, right-B
    BalancedTensor outerLeft = balanced_tensor(b, innerLeft.result, z);
    BalancedTensor innerRight = balanced_tensor(b, y, z);       // Y (x)_B Z, left-A
    BalancedTensor outerRight = balanced_tensor(a, x, innerRight.result);

    const Obj X = x.carrier, Y = y.carrier, Z = z.carrier;
    const Mor idX = Mor::identity(X), idZ = Mor::identity(Z);

    const Mor fwd = outerRight.pres.onto * tensor_mor(idX, innerRight.pres.onto) *
                    associator(X, Y, Z) * tensor_mor(innerLeft.pres.into, idZ) *
                    outerLeft.pres.into;
    const Mor bwd = outerLeft.pres.onto * tensor_mor(innerLeft.pres.onto, idZ) *
                    associator_inv(X, Y, Z) * tensor_mor(idX, innerRight.pres.into) *
                    outerRight.pres.into;

    if (!(fwd * bwd).is_identity() || !(bwd * fwd).is_identity())
        throw AxiomError("balanced-tensor/associativity",
                         "the two bracketings of the balanced tensor are not isomorphic");
    // Well-definedness on the ambient space: the map must not depend on the
    // chosen sections.
    const Mor viaLeft = fwd * outerLeft.pres.onto * tensor_mor(innerLeft.pres.onto, idZ);
    const Mor viaRight = outerRight.pres.onto * tensor_mor(idX, innerRight.pres.onto) *
                         associator(X, Y, Z);
    if (!(viaLeft == viaRight))
        throw AxiomError("balanced-tensor/associativity",
                         "rebracketing is not well defined on the ambient tensor");
    // The rebracketing respects any outer actions both sides carry.
    if (outerLeft.result.actLeft && outerRight.result.actLeft) {
        const Obj B0 = outerLeft.result.algebraLeft->carrier;
        if (!(fwd * *outerLeft.result.actLeft ==
              *outerRight.result.actLeft * tensor_mor(Mor::identity(B0), fwd)))
            throw AxiomError("balanced-tensor/associativity",
                             "rebracketing fails left-action linearity");
    }
    if (outerLeft.result.actRight && outerRight.result.actRight) {
        const Obj C0 = outerLeft.result.algebraRight->carrier;
        if (!(fwd * *outerLeft.result.actRight ==
              *outerRight.result.actRight * tensor_mor(fwd, Mor::identity(C0))))
            throw AxiomError("balanced-tensor/associativity",
                             "rebracketing fails right-action linearity");
    }

    return TripleAssoc{std::move(innerLeft), std::move(outerLeft), std::move(innerRight),
                       std::move(outerRight), fwd, bwd};
}

Presentation module_hom_space(const Module& x, const Module& y) {
    const Obj X = x.carrier, Y = y.carrier;
    const Obj H = hom_obj(X, Y);
    if (x.actLeft.has_value() != y.actLeft.has_value())
        throw TypeError("module_hom_space: one side has a left action and the other does not");
    if (x.actRight.has_value() != y.actRight.has_value())
        throw TypeError("module_hom_space: one side has a right action and the other does not");

    std::vector<Mat> rows;
    if (x.actLeft) {
        require(same_algebra(*x.algebraLeft, *y.algebraLeft),
                "module_hom_space: left actions are over different algebras");
        rows.push_back((hom_pre(*x.actLeft, Y) - hom_post_inflate(*y.actLeft, X)).mat());
    }
    if (x.actRight) {
        require(same_algebra(*x.algebraRight, *y.algebraRight),
                "module_hom_space: right actions are over different algebras");
        rows.push_back((hom_pre(*x.actRight, Y) - hom_post_coinflate(*y.actRight, X)).mat());
    }

    Mat stacked(0, H.dim());
    for (const Mat& m : rows) stacked = Mat::vstack(stacked, m);
    const Obj cod = Obj::atom("homset-constraints", stacked.rows());
    return kernel_presentation(Mor(H, cod, stacked));
}

HomTransport transport_hom_space(const Presentation& from, const Obj& fromDom, const Obj& fromCod,
                                 const Presentation& to, const Obj& toDom, const Obj& toCod,
                                 const std::function<Mor(const Mor&)>& transport) {
    Mat m(to.obj.dim(), from.obj.dim());
    bool landed = true;
    for (std::size_t i = 0; i < from.obj.dim(); ++i) {
        const Mor f = unflatten_map(fromDom, fromCod, from.into.mat().column_vec(i));
        const Mor g = transport(f);
        if (g.dom() != toDom || g.cod() != toCod)
            throw TypeError("transport_hom_space: transported map has the wrong type");
        const Mat flat = Mat::column(flatten_map(g));
        if (!(to.witness.mat() * flat).is_zero()) {
            landed = false;
            continue;
        }
        m.set_column(i, (to.onto.mat() * flat).column_vec(0));
    }
    return HomTransport{Mor(from.obj, to.obj, std::move(m)), landed};
}

TensorHomAdjunction adjunction_tensor_hom(const Algebra& a, const Algebra& b, const Module& x,
                                          const Module& y, const Module& z) {
    require(x.actLeft && x.actRight, "adjunction_tensor_hom: pivot must be a bimodule");
    require(y.actLeft && !y.actRight, "adjunction_tensor_hom: middle argument must be a plain left module");
    require(z.actLeft && !z.actRight, "adjunction_tensor_hom: target must be a plain left module");

    BalancedTensor tensor = balanced_tensor(b, x, y);  // X (x)_B Y, left-A
    BalancedHom innerHom = balanced_hom(a, x, z);      // Hom_A(X, Z), left-B
    Presentation lhs = module_hom_space(tensor.result, z);
    Presentation rhs = module_hom_space(y, innerHom.result);

    Report report;
    const Obj Q = tensor.pres.obj, Z = z.carrier, K = innerHom.pres.obj, Y = y.carrier;
    const HomTransport t = transport_hom_space(
        lhs, Q, Z, rhs, Y, K,
        [&](const Mor& f) { return corestrict(curry(f * tensor.pres.onto), innerHom.pres); });
    report.add("adjunction/transport-lands-in-homset", tensor.result.id, t.landed,
               t.landed ? "" : "curried map is not linear over the inner algebra");
    const bool dimsMatch = lhs.obj.dim() == rhs.obj.dim();
    report.add("adjunction/homset-dimensions", tensor.result.id, dimsMatch,
               "dim " + std::to_string(lhs.obj.dim()) + " vs " + std::to_string(rhs.obj.dim()));
    const bool invertible = dimsMatch && t.landed && t.map.is_invertible();
    report.add("adjunction/tensor-hom-bijective", tensor.result.id, invertible,
               invertible ? "" : "transport matrix is not invertible");
    return TensorHomAdjunction{std::move(tensor), std::move(innerHom), std::move(lhs),
                               std::move(rhs),    t.map,               std::move(report)};
}

}  // namespace sia
