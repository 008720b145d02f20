#include "helpers.hpp"

#include "sia/corpus.hpp"
#include "sia/pairing.hpp"

#include <algorithm>
#include <set>

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

const CorpusEntry& entry(const std::vector<CorpusEntry>& corpus,
                         const std::string& name) {
    const auto it = std::find_if(corpus.begin(), corpus.end(),
                                 [&](const CorpusEntry& e) { return e.alg.name == name; });
    REQUIRE(it != corpus.end());
    return *it;
}

}  // namespace

TEST_CASE("pairing algebra structure: degenerate case") {
    const PairingAlgebra pa = pairing_algebra(2, 1, false);
    CHECK(pa.alg.carrier.dim() == 2);
    CHECK(pa.report.all_pass());
    CHECK(!pa.canonicalMonic);
    CHECK(check_module_laws(pa.vModule).all_pass());
    CHECK(check_module_laws(pa.wModule).all_pass());
    // splitting is a section of the multiplication
    CHECK((pa.alg.mu * pa.splitting).is_identity());

    const NonmonicDemo demo = nonmonic_smoothening_demo(pa);
    CHECK(!demo.canonicalMonic);
    CHECK(demo.report.all_pass());
    bool sawDrop = false;
    for (const Check& c : demo.report.checks)
        if (c.law == "nonmonic/comparison-drops-rank") {
            sawDrop = true;
            CHECK(c.pass);
        }
    CHECK(sawDrop);
}

TEST_CASE("pairing algebra structure: perfect cases stay monic") {
    const PairingAlgebra p11 = pairing_algebra(1, 1, true);
    CHECK(p11.canonicalMonic);
    const NonmonicDemo demo = nonmonic_smoothening_demo(p11);
    CHECK(demo.canonicalMonic);
    CHECK(demo.report.all_pass());
    REQUIRE(demo.report.checks.size() == 1);
    CHECK(demo.report.checks[0].law == "nonmonic/applicable");

    const PairingAlgebra p22 = pairing_algebra(2, 2, true);
    CHECK(p22.canonicalMonic);
    CHECK(detect_unit(p22.alg).has_value());  // frozen: the identity pairing
                                              // on 2x2 gives a unital algebra
}

TEST_CASE("the zero pairing is rejected") {
    CHECK_THROWS_AS(build_pairing_algebra({2, 2, Mat::zero(2, 2)}), InputError);
}

TEST_CASE("standard corpus contents are stable") {
    const auto c1 = standard_corpus(1);
    REQUIRE(c1.size() == 4);
    std::set<std::string> names;
    for (const auto& e : c1) names.insert(e.alg.name);
    CHECK(names ==
          std::set<std::string>{"unit", "zero1", "mat1", "pair(1,1)/full"});

    const auto c2 = standard_corpus(2);
    CHECK(c2.size() == 20);
    CHECK(standard_corpus(3).size() == 50);

    CHECK(entry(c2, "pair(2,2)/full").unital);   // identity pairing: unital
    CHECK(!entry(c2, "pair(2,2)/min").unital);
    CHECK(entry(c2, "pair(2,1)/min").selfInduced);
    CHECK(!entry(c2, "zero2").selfInduced);
    CHECK(entry(c2, "mat2").unital);
    CHECK(entry(c2, "mat2").alg.unit.has_value());  // detected and attached

    // every entry carries the three standard modules, in order
    for (const auto& e : c2) {
        REQUIRE(e.modules.size() >= 3);
        CHECK(e.modules[0].id == "regular");
        CHECK(e.modules[1].id == "zero");
        CHECK(e.modules[2].id == "sum");
        CHECK(e.modules[2].carrier.dim() == e.alg.carrier.dim() + 1);
        if (e.pairing.has_value()) {
            REQUIRE(e.modules.size() == 5);
            CHECK(e.modules[3].id == "tensorV");
            CHECK(e.modules[4].id == "homW");
        }
    }
}

TEST_CASE("structure-constant oracle agrees with the engine on self-inducedness") {
    const auto c2 = standard_corpus(2);
    for (const auto& e : c2)
        CHECK(oracle::self_induced(e.alg.carrier.dim(), mul_cube(e.alg)) ==
              e.selfInduced);
}

TEST_CASE("oracle suite: smoothening/roughening dimensions match the "
          "independent computation corpus-wide") {
    CHECK(oracle_suite(standard_corpus(2)).all_pass());
}

TEST_CASE("axioms and unital suites pass corpus-wide") {
    const auto c1 = standard_corpus(1);
    CHECK(corpus_axioms_suite(c1).all_pass());
    CHECK(unital_suite(c1).all_pass());
    CHECK(theorem_suite(c1).all_pass());
    CHECK(pairing_suite(c1).all_pass());
}

TEST_CASE("the full suite at max dimension 1 has exactly one honest failure") {
    const Report rep = corpus_suite(1);
    std::vector<const Check*> failing;
    for (const Check& c : rep.checks)
        if (!c.pass) failing.push_back(&c);
    REQUIRE(failing.size() == 1);
    CHECK(failing[0]->law == "free-rough/mismatch-exhibited");
    CHECK(failing[0]->name == "corpus");
    CHECK(failing[0]->details.find("no witness instance exists") !=
          std::string::npos);
}
