#include "helpers.hpp"

#include "sia/algebra.hpp"
#include "sia/category.hpp"

using namespace sia;

namespace {

std::vector<Rat> basis_product(const Algebra& a, std::size_t i, std::size_t j) {
    return a.mu.mat().column_vec(i * a.carrier.dim() + j);
}

Rat coeff(const std::vector<Rat>& v, std::size_t k) { return v.at(k); }

}  // namespace

TEST_CASE("matrix algebra multiplies matrix units correctly") {
    const Algebra a = matrix_algebra(2);
    REQUIRE(a.carrier.dim() == 4);
    REQUIRE(a.unit.has_value());
    // E_ij has basis index i*2+j; E_ij E_kl = delta_jk E_il
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    const auto prod = basis_product(a, i * 2 + j, k * 2 + l);
                    for (std::size_t m = 0; m < 4; ++m)
                        CHECK(coeff(prod, m) ==
                              Rat(j == k && m == i * 2 + l ? 1 : 0));
                }
    // the declared unit is E_00 + E_11
    CHECK(a.unit->mat().column_vec(0) ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK(check_algebra(a).all_pass());
}

TEST_CASE("make_algebra rejects a non-associative multiplication") {
    const Obj c = Obj::atom("bad", 2);
    Mat mu = Mat::zero(2, 4);
    mu.at(0, 1) = Rat(1);  // e0*e1 = e0
    mu.at(1, 2) = Rat(1);  // e1*e0 = e1  (and e0e0 = e1e1 = 0): not associative
    try {
        make_algebra(c, Mor(tensor_obj(c, c), c, mu));
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.law() == "algebra/associativity");
    }
    const Report rep =
        check_algebra_laws(c, Mor(tensor_obj(c, c), c, mu), std::nullopt, "bad");
    CHECK(!rep.all_pass());
}

TEST_CASE("make_algebra rejects a wrong unit") {
    const Algebra m2 = matrix_algebra(2);
    Mat wrong = Mat::zero(4, 1);
    wrong.at(0, 0) = Rat(1);  // E_00 is only a one-sided partial identity
    try {
        make_algebra(m2.carrier, m2.mu, Mor(Obj::unit(), m2.carrier, wrong));
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.law().substr(0, 8) == "algebra/");
    }
}

TEST_CASE("detect_unit finds the unit; nonunital algebras give nullopt") {
    const Algebra m2 = matrix_algebra(2);
    const Algebra stripped{m2.carrier, m2.mu, std::nullopt, m2.name};
    const auto u = detect_unit(stripped);
    REQUIRE(u.has_value());
    CHECK(u->mat() == m2.unit->mat());

    const Obj z = Obj::atom("zero1", 1);
    const Algebra zero = make_algebra(z, Mor::zero(tensor_obj(z, z), z));
    CHECK(!detect_unit(zero).has_value());
}

TEST_CASE("same_algebra compares carrier and multiplication only") {
    const Algebra m2 = matrix_algebra(2);
    const Algebra renamed{m2.carrier, m2.mu, std::nullopt, "other"};
    CHECK(same_algebra(m2, renamed));
    CHECK(!same_algebra(m2, matrix_algebra(1)));
}

TEST_CASE("opposite reverses multiplication and is an involution") {
    const Algebra m2 = matrix_algebra(2);
    const Algebra op = opposite(m2);
    CHECK(check_algebra(op).all_pass());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(basis_product(op, i, j) == basis_product(m2, j, i));
    CHECK(same_algebra(opposite(op), m2));
    CHECK(op.unit.has_value());
}

TEST_CASE("unit algebra is the monoidal unit with unitor multiplication") {
    const Algebra one = unit_algebra();
    CHECK(one.carrier == Obj::unit());
    CHECK(one.mu.mat().is_identity());
    CHECK(one.unit.has_value());
    CHECK(check_algebra(one).all_pass());
}

TEST_CASE("standard modules satisfy their laws") {
    const Algebra m2 = matrix_algebra(2);
    const Module reg = regular_bimodule(m2);
    CHECK(reg.actLeft.has_value());
    CHECK(reg.actRight.has_value());
    CHECK(check_module_laws(reg).all_pass());
    CHECK(check_module_laws(left_regular_module(m2)).all_pass());
    CHECK(check_module_laws(zero_action_module(m2, 3)).all_pass());
    CHECK(check_module_laws(module_over_unit(Obj::atom("v", 2))).all_pass());

    const Module l = as_left(reg);
    CHECK(!l.actRight.has_value());
    CHECK(l.actLeft.has_value());

    const Module opged = right_as_left_op(reg);
    CHECK(opged.algebraLeft.has_value());
    CHECK(check_module_laws(opged).all_pass());
}

TEST_CASE("make_left_module rejects a non-associative action") {
    const Algebra m1 = matrix_algebra(1);
    const Obj x = Obj::atom("x", 1);
    Mat act = Mat::zero(1, 1);
    act.at(0, 0) = Rat(2);  // a.(b.x) = 4x but (ab).x = 2x
    try {
        make_left_module(m1, x, Mor(tensor_obj(m1.carrier, x), x, act));
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.law() == "module/left-associativity");
    }
}

TEST_CASE("bimodule compatibility is checked separately from associativity") {
    // Left action: matrix multiplication.  Right action: x.a := transpose(a).x,
    // which is right-associative (transpose is an antihomomorphism) but does
    // not commute with the left action.
    const Algebra m2 = matrix_algebra(2);
    const Obj x = m2.carrier;
    Mat right = Mat::zero(4, 16);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    if (i == k)  // E_ji E_kl = delta_ik E_jl
                        right.at(j * 2 + l, (k * 2 + l) * 4 + (i * 2 + j)) +=
                            Rat(1);
    const Mor actRight(tensor_obj(x, m2.carrier), x, right);
    const Module raw{m2, m2, x, m2.mu, actRight, "twisted"};
    const Report rep = check_module_laws(raw);
    CHECK(!rep.all_pass());
    for (const Check& c : rep.checks) {
        if (c.law == "module/bimodule-compatibility")
            CHECK(!c.pass);
        else
            CHECK(c.pass);
    }
    CHECK_THROWS_AS(make_bimodule(m2, m2, x, m2.mu, actRight, "twisted"),
                    AxiomError);
}

TEST_CASE("module factories reject shape and algebra mismatches") {
    const Algebra m1 = matrix_algebra(1);
    const Algebra m2 = matrix_algebra(2);
    const Module reg = regular_bimodule(m2);
    CHECK_THROWS_AS(make_left_module(m1, reg.carrier, *reg.actLeft), TypeError);
    const Obj r = Obj::atom("r", 1);
    const Module rightOnly =
        make_right_module(m2, r, Mor::zero(tensor_obj(r, m2.carrier), r));
    CHECK_THROWS_AS(as_left(rightOnly), TypeError);
    // zero_action_module has no right action, so right_as_left_op must refuse
    CHECK_THROWS_AS(right_as_left_op(zero_action_module(m2, 1)), TypeError);
}
