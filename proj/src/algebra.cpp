#include "sia/algebra.hpp"

namespace sia {

Report check_algebra_laws(const Obj& carrier, const Mor& mu, const std::optional<Mor>& unit,
                          const std::string& name) {
    Report rep;
    if (mu.dom() != Obj::tensor(carrier, carrier) || mu.cod() != carrier)
        throw TypeError("multiplication must be A(x)A -> A, got " + mu.to_string());
    const Mor idA = Mor::identity(carrier);
    const Mor lhs = mu * tensor_mor(mu, idA);
    const Mor rhs = mu * tensor_mor(idA, mu) * associator(carrier, carrier, carrier);
    const bool assoc = lhs == rhs;
    rep.add_mats("algebra/associativity", name, assoc, assoc ? "" : "mu(mu(x)id) != mu(id(x)mu)",
                 assoc ? std::vector<std::pair<std::string, Mat>>{}
                       : std::vector<std::pair<std::string, Mat>>{{"lhs", lhs.mat()},
                                                                  {"rhs", rhs.mat()}});
    if (unit) {
        if (unit->dom() != Obj::unit() || unit->cod() != carrier)
            throw TypeError("unit must be 1 -> A");
        const Mor lu = mu * tensor_mor(*unit, idA) * left_unitor_inv(carrier);
        const bool lpass = lu == idA;
        rep.add_mats("algebra/left-unit", name, lpass, lpass ? "" : "mu(eta(x)id) != id",
                     lpass ? std::vector<std::pair<std::string, Mat>>{}
                           : std::vector<std::pair<std::string, Mat>>{{"composite", lu.mat()}});
        const Mor ru = mu * tensor_mor(idA, *unit) * right_unitor_inv(carrier);
        const bool rpass = ru == idA;
        rep.add_mats("algebra/right-unit", name, rpass, rpass ? "" : "mu(id(x)eta) != id",
                     rpass ? std::vector<std::pair<std::string, Mat>>{}
                           : std::vector<std::pair<std::string, Mat>>{{"composite", ru.mat()}});
    }
    return rep;
}

Algebra make_algebra(Obj carrier, Mor mu, std::optional<Mor> unit, std::string name) {
    const Report rep = check_algebra_laws(carrier, mu, unit, name);
    for (const Check& c : rep.checks)
        if (!c.pass) throw AxiomError(c.law, "algebra '" + name + "' rejected: " + c.details);
    return Algebra{std::move(carrier), std::move(mu), std::move(unit), std::move(name)};
}

Report check_algebra(const Algebra& a) {
    Report rep = check_algebra_laws(a.carrier, a.mu, a.unit, a.name);
    const std::optional<Mor> u = detect_unit(a);
    rep.add("algebra/unital", a.name, true, u ? "unital" : "non-unital");
    if (a.unit && u) {
        rep.add("algebra/stored-unit-recovered", a.name, *a.unit == *u,
                "detect_unit must reproduce the stored unit");
    } else if (a.unit && !u) {
        rep.add("algebra/stored-unit-recovered", a.name, false,
                "stored unit exists but detect_unit found none");
    }
    return rep;
}

std::optional<Mor> detect_unit(const Algebra& a) {
    const std::size_t n = a.dim();
    // Unknown u with mu(u (x) e_j) = e_j and mu(e_j (x) u) = e_j for all j.
    Mat sys(2 * n * n, n);
    Mat rhs(2 * n * n, 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys.at(j * n + k, i) = a.mu.mat().at(k, i * n + j);
                sys.at(n * n + j * n + k, i) = a.mu.mat().at(k, j * n + i);
            }
            rhs.at(j * n + k, 0) = j == k ? Rat(1) : Rat(0);
            rhs.at(n * n + j * n + k, 0) = j == k ? Rat(1) : Rat(0);
        }
    const auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    return Mor(Obj::unit(), a.carrier, *sol);
}

Algebra opposite(const Algebra& a) {
    Mor muOp = a.mu * braiding(a.carrier, a.carrier);
    return make_algebra(a.carrier, std::move(muOp), a.unit,
                        a.name.empty() ? "op" : a.name + ".op");
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    return a.carrier == b.carrier && a.mu == b.mu;
}

namespace {

void require_same_algebra(const Algebra& a, const Algebra& b, const char* what) {
    if (!same_algebra(a, b))
        throw TypeError(std::string(what) + ": algebras differ (" + a.name + " vs " + b.name + ")");
}

}  // namespace

Report check_module_laws(const Module& m) {
    Report rep;
    const Mor idX = Mor::identity(m.carrier);
    if (m.actLeft) {
        const Algebra& a = *m.algebraLeft;
        if (m.actLeft->dom() != Obj::tensor(a.carrier, m.carrier) || m.actLeft->cod() != m.carrier)
            throw TypeError("left action must be A(x)X -> X");
        const Mor lhs = *m.actLeft * tensor_mor(a.mu, idX);
        const Mor rhs = *m.actLeft * tensor_mor(Mor::identity(a.carrier), *m.actLeft) *
                        associator(a.carrier, a.carrier, m.carrier);
        const bool ok = lhs == rhs;
        rep.add_mats("module/left-associativity", m.id, ok, ok ? "" : "(ab)x != a(bx)",
                     ok ? std::vector<std::pair<std::string, Mat>>{}
                        : std::vector<std::pair<std::string, Mat>>{{"lhs", lhs.mat()},
                                                                   {"rhs", rhs.mat()}});
    }
    if (m.actRight) {
        const Algebra& b = *m.algebraRight;
        if (m.actRight->dom() != Obj::tensor(m.carrier, b.carrier) || m.actRight->cod() != m.carrier)
            throw TypeError("right action must be X(x)B -> X");
        const Mor lhs = *m.actRight * tensor_mor(idX, b.mu);
        const Mor rhs = *m.actRight * tensor_mor(*m.actRight, Mor::identity(b.carrier)) *
                        associator_inv(m.carrier, b.carrier, b.carrier);
        const bool ok = lhs == rhs;
        rep.add_mats("module/right-associativity", m.id, ok, ok ? "" : "x(ab) != (xa)b",
                     ok ? std::vector<std::pair<std::string, Mat>>{}
                        : std::vector<std::pair<std::string, Mat>>{{"lhs", lhs.mat()},
                                                                   {"rhs", rhs.mat()}});
    }
    if (m.actLeft && m.actRight) {
        const Algebra& a = *m.algebraLeft;
        const Algebra& b = *m.algebraRight;
        const Mor lhs = *m.actRight * tensor_mor(*m.actLeft, Mor::identity(b.carrier));
        const Mor rhs = *m.actLeft * tensor_mor(Mor::identity(a.carrier), *m.actRight) *
                        associator(a.carrier, m.carrier, b.carrier);
        const bool ok = lhs == rhs;
        rep.add_mats("module/bimodule-compatibility", m.id, ok, ok ? "" : "(ax)b != a(xb)",
                     ok ? std::vector<std::pair<std::string, Mat>>{}
                        : std::vector<std::pair<std::string, Mat>>{{"lhs", lhs.mat()},
                                                                   {"rhs", rhs.mat()}});
    }
    return rep;
}

namespace {

Module checked(Module m) {
    const Report rep = check_module_laws(m);
    for (const Check& c : rep.checks)
        if (!c.pass) throw AxiomError(c.law, "module '" + m.id + "' rejected: " + c.details);
    return m;
}

}  // namespace

Module make_left_module(const Algebra& a, Obj carrier, Mor act, std::string id) {
    return checked(Module{a, std::nullopt, std::move(carrier), std::move(act), std::nullopt,
                          std::move(id)});
}

Module make_right_module(const Algebra& b, Obj carrier, Mor act, std::string id) {
    return checked(Module{std::nullopt, b, std::move(carrier), std::nullopt, std::move(act),
                          std::move(id)});
}

Module make_bimodule(const Algebra& a, const Algebra& b, Obj carrier, Mor actLeft, Mor actRight,
                     std::string id) {
    return checked(Module{a, b, std::move(carrier), std::move(actLeft), std::move(actRight),
                          std::move(id)});
}

Module regular_bimodule(const Algebra& a) {
    return make_bimodule(a, a, a.carrier, a.mu, a.mu, a.name.empty() ? "regular" : a.name);
}

Module zero_action_module(const Algebra& a, std::size_t dim, std::string id) {
    const Obj x = Obj::atom("zero-action", dim);
    return make_left_module(a, x, Mor::zero(Obj::tensor(a.carrier, x), x), std::move(id));
}

Module left_regular_module(const Algebra& a) {
    return make_left_module(a, a.carrier, a.mu, "regular");
}

Algebra unit_algebra() {
    const Obj one = Obj::unit();
    return make_algebra(one, left_unitor(one), Mor::identity(one), "unit");
}

Algebra matrix_algebra(std::size_t n) {
    const Obj carrier = Obj::atom("mat" + std::to_string(n), n * n);
    Mat mu(n * n, n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                mu.at(i * n + l, (i * n + j) * n * n + (j * n + l)) = Rat(1);
    Mat unit(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) unit.at(i * n + i, 0) = Rat(1);
    return make_algebra(carrier, Mor(Obj::tensor(carrier, carrier), carrier, mu),
                        Mor(Obj::unit(), carrier, unit), "mat" + std::to_string(n));
}

Module module_over_unit(const Obj& v, std::string id) {
    return make_left_module(unit_algebra(), v, left_unitor(v),
                            id.empty() ? v.to_string() : std::move(id));
}

Module as_left(const Module& m) {
    if (!m.actLeft) throw TypeError("as_left: module has no left action");
    return Module{m.algebraLeft, std::nullopt, m.carrier, m.actLeft, std::nullopt, m.id};
}

Module right_as_left_op(const Module& m) {
    if (!m.actRight) throw TypeError("right_as_left_op needs a right action");
    const Algebra aop = opposite(*m.algebraRight);
    Mor actOp = *m.actRight * braiding(aop.carrier, m.carrier);
    return make_left_module(aop, m.carrier, std::move(actOp),
                            m.id.empty() ? "op" : m.id + ".op");
}

Module left_op_as_right(const Module& m, const Algebra& original) {
    if (!m.actLeft) throw TypeError("left_op_as_right needs a left action");
    require_same_algebra(opposite(original), *m.algebraLeft, "left_op_as_right");
    Mor act = *m.actLeft * braiding(m.carrier, original.carrier);
    return make_right_module(original, m.carrier, std::move(act),
                             m.id.size() > 3 && m.id.substr(m.id.size() - 3) == ".op"
                                 ? m.id.substr(0, m.id.size() - 3)
                                 : m.id);
}

bool check_unital_module(const Module& m) {
    bool any = false, all = true;
    if (m.actLeft) {
        const Algebra& a = *m.algebraLeft;
        if (!a.unit) throw TypeError("check_unital_module: left algebra is not unital");
        any = true;
        const Mor comp = *m.actLeft * tensor_mor(*a.unit, Mor::identity(m.carrier)) *
                         left_unitor_inv(m.carrier);
        all = all && comp == Mor::identity(m.carrier);
    }
    if (m.actRight) {
        const Algebra& b = *m.algebraRight;
        if (!b.unit) throw TypeError("check_unital_module: right algebra is not unital");
        any = true;
        const Mor comp = *m.actRight * tensor_mor(Mor::identity(m.carrier), *b.unit) *
                         right_unitor_inv(m.carrier);
        all = all && comp == Mor::identity(m.carrier);
    }
    if (!any) throw TypeError("check_unital_module: module has no action");
    return all;
}

}  // namespace sia
