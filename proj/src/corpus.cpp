#include "sia/corpus.hpp"

#include <string>

namespace sia {

namespace {

constexpr std::size_t kGridCap = 36;        // dim(A) * dim(X) for grid-size suites
constexpr std::size_t kMultiplierCap = 36;  // dim(A)^2 for the multiplier suite
constexpr std::size_t kFunctorDimCap = 4;   // dim(A) for the bimodule-functor suite

Algebra zero_mult_algebra(std::size_t d) {
    const std::string name = "zero" + std::to_string(d);
    const Obj c = Obj::atom(name, d);
    return make_algebra(c, Mor::zero(Obj::tensor(c, c), c), std::nullopt, name);
}

// The direct sum of the regular module and a one-dimensional zero summand.
Module sum_module(const Algebra& a) {
    const std::size_t n = a.dim();
    const Obj c = Obj::atom("sum", n + 1);
    Mat act(n + 1, n * (n + 1));
    for (std::size_t aIdx = 0; aIdx < n; ++aIdx)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                act.at(y, aIdx * (n + 1) + x) = a.mu.mat().at(y, aIdx * n + x);
    return make_left_module(a, c, Mor(Obj::tensor(a.carrier, c), c, std::move(act)), "sum");
}

Mat full_pairing(std::size_t v, std::size_t w) {
    Mat b(w, v);
    for (std::size_t i = 0; i < w && i < v; ++i) b.at(i, i) = Rat(1);
    return b;
}

Mat min_pairing(std::size_t v, std::size_t w) {
    Mat b(w, v);
    b.at(0, 0) = Rat(1);
    return b;
}

void rename_pairing(PairingAlgebra& pa, const std::string& name) {
    const std::string old = pa.alg.name;
    pa.alg.name = name;
    for (Check& c : pa.report.checks)
        if (c.name == old) c.name = name;
}

CorpusEntry make_entry(Algebra alg, std::optional<PairingAlgebra> pairing = std::nullopt) {
    if (!alg.unit)
        if (std::optional<Mor> u = detect_unit(alg))
            alg = make_algebra(alg.carrier, alg.mu, std::move(u), alg.name);
    CorpusEntry e{std::move(alg), {}, false, false, std::nullopt};
    e.selfInduced = is_self_induced(e.alg);
    e.unital = e.alg.unit.has_value();
    e.modules.push_back(left_regular_module(e.alg));
    e.modules.push_back(zero_action_module(e.alg, 1));
    e.modules.push_back(sum_module(e.alg));
    if (pairing) {
        e.modules.push_back(
            make_left_module(e.alg, pairing->v, pairing->actV, "tensorV"));
        e.modules.push_back(make_left_module(
            e.alg, hom_obj(pairing->w, Obj::unit()),
            hom_left_act_via_source(pairing->actW, Obj::unit()), "homW"));
        e.pairing = std::move(pairing);
    }
    return e;
}

// The two fixed sample algebra homomorphisms of the functor suite.
HomInducedFunctors sample_hom_matrix_embedding() {
    const Algebra m1 = matrix_algebra(1);
    const Algebra m2 = matrix_algebra(2);
    const Mor f(m1.carrier, m2.carrier, m2.unit->mat());  // 1 -> identity matrix
    return hom_induced_functors(m1, m2, f, {left_regular_module(m2)},
                                {left_regular_module(m1)});
}

HomInducedFunctors sample_hom_idempotent_embedding() {
    PairingAlgebra a1 = build_pairing_algebra(PairingSpec{1, 1, full_pairing(1, 1)});
    PairingAlgebra a2 = build_pairing_algebra(PairingSpec{2, 1, min_pairing(2, 1)});
    rename_pairing(a1, "pair(1,1)/full");
    rename_pairing(a2, "pair(2,1)/min");
    Mat fm(2, 1);
    fm.at(0, 0) = Rat(1);  // generator -> the idempotent e_0 (x) f_0
    return hom_induced_functors(a1.alg, a2.alg, Mor(a1.alg.carrier, a2.alg.carrier, fm),
                                {left_regular_module(a2.alg)},
                                {left_regular_module(a1.alg)});
}

}  // namespace

std::vector<CorpusEntry> standard_corpus(std::size_t maxDim) {
    if (maxDim == 0) throw InputError("standard_corpus: maxDim must be at least 1");
    std::vector<CorpusEntry> out;
    out.push_back(make_entry(unit_algebra()));
    const std::size_t small = maxDim < 2 ? maxDim : 2;
    for (std::size_t d = 1; d <= small; ++d) out.push_back(make_entry(zero_mult_algebra(d)));
    for (std::size_t n = 1; n <= small; ++n) out.push_back(make_entry(matrix_algebra(n)));
    const std::size_t cap = maxDim * maxDim;
    for (std::size_t v = 1; v <= cap; ++v)
        for (std::size_t w = 1; v * w <= cap; ++w) {
            const std::string base =
                "pair(" + std::to_string(v) + "," + std::to_string(w) + ")";
            PairingAlgebra full =
                build_pairing_algebra(PairingSpec{v, w, full_pairing(v, w)});
            rename_pairing(full, base + "/full");
            Algebra fullAlg = full.alg;
            out.push_back(make_entry(std::move(fullAlg), std::move(full)));
            if (v == 1 && w == 1) continue;
            PairingAlgebra min =
                build_pairing_algebra(PairingSpec{v, w, min_pairing(v, w)});
            rename_pairing(min, base + "/min");
            Algebra minAlg = min.alg;
            out.push_back(make_entry(std::move(minAlg), std::move(min)));
        }
    return out;
}

Report corpus_axioms_suite(const std::vector<CorpusEntry>& corpus) {
    Report rep;
    for (const CorpusEntry& e : corpus) {
        const Algebra& a = e.alg;
        rep.merge(check_algebra(a));
        for (const Module& m : e.modules) rep.merge(check_module_laws(m));
        const bool oracleSelf = oracle::self_induced(a.dim(), mul_cube(a));
        rep.add("corpus/self-induced-oracle", a.name, e.selfInduced == oracleSelf,
                std::string("engine=") + (e.selfInduced ? "yes" : "no") +
                    " oracle=" + (oracleSelf ? "yes" : "no"));
        if (!e.selfInduced) continue;
        for (const Module& m : e.modules) {
            if (a.dim() * m.dim() > kGridCap) continue;
            rep.add("corpus/smoothening-smooth", a.name + ":" + m.id,
                    is_smooth(a, smoothen(a, m).mod), "");
            rep.add("corpus/roughening-rough", a.name + ":" + m.id,
                    is_rough(a, roughen(a, m).mod), "");
        }
    }
    return rep;
}

Report unital_suite(const std::vector<CorpusEntry>& corpus) {
    Report rep;
    for (const CorpusEntry& e : corpus) {
        const Algebra& a = e.alg;
        const bool roughSelf =
            roughen(a, left_regular_module(a)).bar_mu_dagger.is_invertible();
        rep.add("unital/rough-self-implies-unit", a.name, !roughSelf || e.unital,
                std::string("rough over itself=") + (roughSelf ? "yes" : "no") +
                    " unit detected=" + (e.unital ? "yes" : "no"));
        if (!e.unital || !e.selfInduced) continue;
        for (const Module& m : e.modules) {
            if (a.dim() * m.dim() > kGridCap) continue;
            const bool unitActs =
                *m.actLeft * tensor_mor(*a.unit, Mor::identity(m.carrier)) ==
                left_unitor(m.carrier);
            const bool sm = is_smooth(a, m), ro = is_rough(a, m);
            rep.add("unital/smooth-iff-rough-iff-unital", a.name + ":" + m.id,
                    sm == unitActs && ro == unitActs,
                    std::string("smooth=") + (sm ? "yes" : "no") +
                        " rough=" + (ro ? "yes" : "no") +
                        " unit acts as identity=" + (unitActs ? "yes" : "no"));
            rep.merge(unital_homotopy_check(a, m));
        }
    }
    return rep;
}

Report theorem_suite(const std::vector<CorpusEntry>& corpus) {
    Report rep;
    for (const CorpusEntry& e : corpus) {
        if (!e.selfInduced) continue;
        const Algebra& a = e.alg;
        std::vector<const Module*> eligible;
        for (const Module& m : e.modules)
            if (a.dim() * m.dim() <= kGridCap) eligible.push_back(&m);
        for (std::size_t i = 0; i < eligible.size(); ++i) {
            const Module& partner = *eligible[(i + 1) % eligible.size()];
            rep.merge(theorem_check(a, *eligible[i], partner));
        }
    }
    return rep;
}

Report multiplier_corpus_suite(const std::vector<CorpusEntry>& corpus) {
    Report rep;
    std::size_t scanned = 0;
    bool mismatch = false;
    for (const CorpusEntry& e : corpus) {
        const Algebra& a = e.alg;
        if (a.dim() * a.dim() > kMultiplierCap) continue;
        rep.merge(multiplier_suite(a));
        if (e.pairing) {
            const PairingSpec& s = e.pairing->spec;
            try {
                DoubleCentralizer dc = double_centralizer(s.dimV, s.dimW, s.pairing);
                rep.add("multiplier/double-centralizer", a.name, true,
                        "dim " + std::to_string(dc.alg.dim()));
            } catch (const std::exception& ex) {
                rep.add("multiplier/double-centralizer", a.name, false, ex.what());
            }
        }
        if (!e.selfInduced) continue;
        Report fr = free_rough_check(a, 2);
        for (const Check& c : fr.checks) {
            if (c.law == "free-rough/mismatch-exhibited") {
                ++scanned;
                if (c.pass) mismatch = true;
                continue;  // aggregated into the corpus-level existential below
            }
            rep.add(c);
        }
    }
    rep.add("free-rough/mismatch-exhibited", "corpus", mismatch,
            "searched " + std::to_string(scanned) +
                " self-induced algebras with dim V = 2; exact finite-dimensional "
                "computation makes dim M_l(A) (x) V and dim Hom_A(A, A (x) V) equal, "
                "so no witness instance exists");
    return rep;
}

Report bimodule_functor_suite(const std::vector<CorpusEntry>& corpus) {
    Report rep;
    for (const CorpusEntry& e : corpus) {
        if (!e.selfInduced || e.alg.dim() > kFunctorDimCap) continue;
        const Algebra& a = e.alg;
        const Module reg = left_regular_module(a);
        const Module zero = zero_action_module(a, 1);
        rep.merge(smooth_rough_preservation(regular_bimodule(a), reg));
        rep.merge(smoothened_hom_adjunction_suite(regular_bimodule(a), {reg, zero},
                                                  {reg, zero}));
        if (e.pairing) {
            MoritaWitness w = morita_witness_from_pairing(*e.pairing);
            const Module unitReg = left_regular_module(w.algB);
            rep.merge(smooth_rough_preservation(w.p, unitReg));
            rep.merge(smooth_rough_preservation(w.q, unitReg));
        }
        FunctorTable table = tabulate_tensor_functor(regular_bimodule(a), {zero});
        TabulatedRepresentation rec = bimodule_of_tabulated_functor(table);
        rep.merge(rec.report);
        rep.add("functor/representable", a.name, rec.representable,
                rec.representable ? "" : rec.failureReason);
        TabulatedRepresentation bad =
            bimodule_of_tabulated_functor(tabulate_corrupted_tensor_functor(
                regular_bimodule(a), {}));
        rep.add("functor/corrupted-rejected", a.name, !bad.representable,
                bad.representable
                    ? "a corrupted table was accepted"
                    : bad.failureCell + ": " + bad.failureReason);
    }
    rep.merge(sample_hom_matrix_embedding().report);
    rep.merge(sample_hom_idempotent_embedding().report);
    return rep;
}

Report morita_suite(std::size_t productCap) {
    Report rep;
    const Algebra one = unit_algebra();
    const std::vector<Module> samplesB = {left_regular_module(one)};
    auto run = [&](PairingAlgebra pa) {
        const std::vector<Module> samplesA = {left_regular_module(pa.alg),
                                              zero_action_module(pa.alg, 1)};
        rep.merge(verify_morita(morita_witness_from_pairing(pa), samplesA, samplesB));
    };
    for (std::size_t v = 1; v <= productCap; ++v)
        for (std::size_t w = 1; v * w <= productCap; ++w) {
            const std::string base =
                "pair(" + std::to_string(v) + "," + std::to_string(w) + ")";
            PairingAlgebra full =
                build_pairing_algebra(PairingSpec{v, w, full_pairing(v, w)});
            rename_pairing(full, base + "/full");
            run(std::move(full));
            if (v == 1 && w == 1) continue;
            PairingAlgebra min =
                build_pairing_algebra(PairingSpec{v, w, min_pairing(v, w)});
            rename_pairing(min, base + "/min");
            run(std::move(min));
        }
    MoritaWitness mw = morita_witness_matrix_unit(2);
    rep.merge(verify_morita(mw,
                            {left_regular_module(mw.algA), zero_action_module(mw.algA, 1)},
                            {left_regular_module(mw.algB)}));
    return rep;
}

Report oracle_suite(const std::vector<CorpusEntry>& corpus) {
    Report rep;
    for (const CorpusEntry& e : corpus) {
        const Algebra& a = e.alg;
        const oracle::Cube mul = mul_cube(a);
        for (const Module& m : e.modules) {
            if (a.dim() * m.dim() > kGridCap) continue;
            const oracle::Cube lm = left_cube(a, m);
            const std::size_t tEngine = smoothen(a, m).bt.result.dim();
            const std::size_t tOracle =
                oracle::balanced_tensor_dim(a.dim(), a.dim(), m.dim(), mul, lm);
            rep.add("oracle/balanced-tensor-dim", a.name + ":A(x)" + m.id,
                    tEngine == tOracle,
                    "engine " + std::to_string(tEngine) + " oracle " +
                        std::to_string(tOracle));
            const std::size_t hEngine = roughen(a, m).bh.pres.obj.dim();
            const std::size_t hOracle =
                oracle::balanced_hom_dim(a.dim(), a.dim(), m.dim(), mul, lm);
            rep.add("oracle/balanced-hom-dim", a.name + ":Hom(A," + m.id + ")",
                    hEngine == hOracle,
                    "engine " + std::to_string(hEngine) + " oracle " +
                        std::to_string(hOracle));
        }
        if (e.pairing) {
            const PairingAlgebra& pa = *e.pairing;
            const std::size_t tEngine =
                balanced_tensor(a, pa.wModule, pa.vModule).result.dim();
            const std::size_t tOracle = oracle::balanced_tensor_dim(
                pa.w.dim(), a.dim(), pa.v.dim(), right_cube(pa.wModule),
                left_cube(a, pa.vModule));
            rep.add("oracle/balanced-tensor-dim", a.name + ":W(x)V", tEngine == tOracle,
                    "engine " + std::to_string(tEngine) + " oracle " +
                        std::to_string(tOracle));
            const std::size_t hEngine =
                balanced_hom(a, pa.vModule, pa.vModule).pres.obj.dim();
            const std::size_t hOracle = oracle::balanced_hom_dim(
                a.dim(), pa.v.dim(), pa.v.dim(), left_cube(a, pa.vModule),
                left_cube(a, pa.vModule));
            rep.add("oracle/balanced-hom-dim", a.name + ":Hom(V,V)", hEngine == hOracle,
                    "engine " + std::to_string(hEngine) + " oracle " +
                        std::to_string(hOracle));
        }
    }
    return rep;
}

Report pairing_suite(const std::vector<CorpusEntry>& corpus) {
    Report rep;
    for (const CorpusEntry& e : corpus) {
        if (!e.pairing) continue;
        rep.merge(e.pairing->report);
        rep.merge(nonmonic_smoothening_demo(*e.pairing).report);
    }
    return rep;
}

Report corpus_suite(std::size_t maxDim) {
    const std::vector<CorpusEntry> corpus = standard_corpus(maxDim);
    Report rep;
    rep.merge(corpus_axioms_suite(corpus));
    rep.merge(unital_suite(corpus));
    rep.merge(theorem_suite(corpus));
    rep.merge(multiplier_corpus_suite(corpus));
    rep.merge(bimodule_functor_suite(corpus));
    rep.merge(morita_suite(6));
    rep.merge(pairing_suite(corpus));
    rep.merge(oracle_suite(corpus));
    return rep;
}

oracle::Cube mul_cube(const Algebra& a) {
    const std::size_t n = a.dim();
    oracle::Cube c(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j][k] = a.mu.mat().at(k, i * n + j);
    return c;
}

oracle::Cube left_cube(const Algebra& a, const Module& x) {
    if (!x.actLeft) throw TypeError("left_cube: module has no left action");
    const std::size_t n = a.dim(), d = x.dim();
    oracle::Cube c(n, std::vector<std::vector<Rat>>(d, std::vector<Rat>(d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                c[i][j][k] = x.actLeft->mat().at(k, i * d + j);
    return c;
}

oracle::Cube right_cube(const Module& x) {
    if (!x.actRight || !x.algebraRight)
        throw TypeError("right_cube: module has no right action");
    const std::size_t n = x.algebraRight->dim(), d = x.dim();
    oracle::Cube c(d, std::vector<std::vector<Rat>>(n, std::vector<Rat>(d)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < d; ++k)
                c[i][j][k] = x.actRight->mat().at(k, i * n + j);
    return c;
}

}  // namespace sia
