#include "helpers.hpp"

#include "sia/category.hpp"
#include "sia/morita.hpp"
#include "sia/pairing.hpp"

using namespace sia;

namespace {

PairingAlgebra pairing_algebra(std::size_t dimV, std::size_t dimW, bool perfect) {
    Mat b = Mat::zero(dimW, dimV);
    if (perfect) {
        for (std::size_t i = 0; i < std::min(dimV, dimW); ++i) b.at(i, i) = Rat(1);
    } else {
        b.at(0, 0) = Rat(1);
    }
    return build_pairing_algebra({dimV, dimW, b});
}

std::vector<Module> default_samples(const Algebra& a) {
    return {left_regular_module(a), zero_action_module(a, 1)};
}

}  // namespace

TEST_CASE("matrix-unit witness: M_n is Morita equivalent to the scalars") {
    const MoritaWitness w = morita_witness_matrix_unit(2);
    CHECK(w.algA.carrier.dim() == 4);
    CHECK(w.algB.carrier.dim() == 1);
    const Report rep =
        verify_morita(w, default_samples(w.algA), {left_regular_module(w.algB)});
    CHECK(rep.all_pass());
}

TEST_CASE("pairing witnesses verify for perfect and degenerate pairings") {
    for (const bool perfect : {true, false}) {
        const PairingAlgebra pa = pairing_algebra(2, 1, perfect);
        const MoritaWitness w = morita_witness_from_pairing(pa);
        const Report rep = verify_morita(w, default_samples(w.algA),
                                         {left_regular_module(w.algB)});
        CHECK(rep.all_pass());
    }
}

TEST_CASE("a corrupted witness is rejected with a named law") {
    MoritaWitness w = morita_witness_matrix_unit(2);
    Mat broken = w.isoQP.mat();
    broken.at(0, 0) += Rat(1);
    w.isoQP = Mor(w.isoQP.dom(), w.isoQP.cod(), broken);
    const Report rep =
        verify_morita(w, default_samples(w.algA), {left_regular_module(w.algB)});
    CHECK(!rep.all_pass());
    bool namedFailure = false;
    for (const Check& c : rep.checks)
        if (!c.pass && c.law.rfind("morita/", 0) == 0) namedFailure = true;
    CHECK(namedFailure);
}

TEST_CASE("tensor functor preserves smooth, hom functor preserves rough") {
    const Algebra m2 = matrix_algebra(2);
    const Report rep =
        smooth_rough_preservation(regular_bimodule(m2), left_regular_module(m2));
    CHECK(rep.all_pass());

    const PairingAlgebra pa = pairing_algebra(2, 1, false);
    const Report rep2 = smooth_rough_preservation(regular_bimodule(pa.alg),
                                                  left_regular_module(pa.alg));
    CHECK(rep2.all_pass());
}

TEST_CASE("smoothened adjunction gives a bijection of module hom spaces") {
    const Algebra m2 = matrix_algebra(2);
    const Module m = regular_bimodule(m2);
    const SmoothenedHomAdjunction adj = smoothened_hom_adjunction(
        m, left_regular_module(m2), left_regular_module(m2));
    CHECK(adj.bijection.is_invertible());
    CHECK(adj.report.all_pass());

    const Report suite = smoothened_hom_adjunction_suite(
        m, {left_regular_module(m2), zero_action_module(m2, 1)},
        {left_regular_module(m2)});
    CHECK(suite.all_pass());
}

TEST_CASE("algebra maps induce hom functors with the expected structure") {
    const Algebra m1 = matrix_algebra(1);
    const Algebra m2 = matrix_algebra(2);
    const Mor f(m1.carrier, m2.carrier, m2.unit->mat());  // unital embedding
    const Report rep = hom_induced_functors(m1, m2, f,
                                            {left_regular_module(m2)},
                                            {left_regular_module(m1)})
                           .report;
    CHECK(rep.all_pass());
}

TEST_CASE("a non-multiplicative map is rejected by the induced-functor builder") {
    const Algebra m1 = matrix_algebra(1);
    const Algebra m2 = matrix_algebra(2);
    Mat bad = Mat::zero(4, 1);
    bad.at(1, 0) = Rat(1);  // 1 -> E_01, not multiplicative
    try {
        hom_induced_functors(m1, m2, Mor(m1.carrier, m2.carrier, bad),
                             {left_regular_module(m2)},
                             {left_regular_module(m1)});
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.law() == "hom-functors/multiplicative");
    }
}

TEST_CASE("the zero map between zero algebras records a self-inducedness failure") {
    const Obj c = Obj::atom("z", 1);
    const Algebra z =
        make_algebra(c, Mor::zero(tensor_obj(c, c), c), std::nullopt, "z");
    const Report rep =
        hom_induced_functors(z, z, Mor::zero(c, c), {}, {}).report;
    CHECK(!rep.all_pass());
    bool recorded = false;
    for (const Check& chk : rep.checks)
        if (chk.law == "hom-functors/self-induced") {
            recorded = true;
            CHECK(!chk.pass);
        }
    CHECK(recorded);
}

TEST_CASE("pullback along an algebra map is again a lawful module") {
    const Algebra m1 = matrix_algebra(1);
    const Algebra m2 = matrix_algebra(2);
    const Mor f(m1.carrier, m2.carrier, m2.unit->mat());
    const Module pulled = pullback_module(m1, f, left_regular_module(m2));
    CHECK(pulled.carrier.dim() == 4);
    CHECK(check_module_laws(pulled).all_pass());
    CHECK(pulled.algebraLeft.has_value());
    CHECK(same_algebra(*pulled.algebraLeft, m1));
}

TEST_CASE("a tabulated tensor functor is recognized as representable") {
    const Algebra m2 = matrix_algebra(2);
    const FunctorTable table =
        tabulate_tensor_functor(regular_bimodule(m2), {zero_action_module(m2, 1)});
    const TabulatedRepresentation rec = bimodule_of_tabulated_functor(table);
    CHECK(rec.representable);
    CHECK(rec.report.all_pass());
    REQUIRE(rec.bimodule.has_value());
    CHECK(check_module_laws(*rec.bimodule).all_pass());
}

TEST_CASE("a corrupted table is rejected with the failing cell recorded") {
    const Algebra m2 = matrix_algebra(2);
    const FunctorTable bad =
        tabulate_corrupted_tensor_functor(regular_bimodule(m2), {});
    const TabulatedRepresentation rec = bimodule_of_tabulated_functor(bad);
    CHECK(!rec.representable);
    CHECK(!rec.report.all_pass());
    CHECK(!rec.failureReason.empty());
}

TEST_CASE("functor maps commute with module maps through the presentations") {
    const Algebra m2 = matrix_algebra(2);
    const Module m = regular_bimodule(m2);
    const Module x = left_regular_module(m2);
    const Module z = zero_action_module(m2, 1);
    const BalancedTensor fx = tensor_functor(m, x);
    const BalancedTensor fz = tensor_functor(m, z);
    const Mor zeroMap = Mor::zero(x.carrier, z.carrier);
    CHECK(tensor_functor_mor(fx, fz, zeroMap).is_zero());
    CHECK(tensor_functor_mor(fx, fx, Mor::identity(x.carrier)).is_identity());
    const BalancedHom hx = hom_functor(m, x);
    CHECK(hom_functor_mor(hx, hx, Mor::identity(x.carrier)).is_identity());
}
