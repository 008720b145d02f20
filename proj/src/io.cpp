#include "sia/io.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

namespace sia::io {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

const ordered_json& field(const ordered_json& j, const std::string& where,
                          const std::string& key) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing required key \"" + key + "\"");
    return *it;
}

std::string string_field(const ordered_json& j, const std::string& where,
                         const std::string& key) {
    const ordered_json& v = field(j, where, key);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::size_t size_field(const ordered_json& j, const std::string& where,
                       const std::string& key) {
    const ordered_json& v = field(j, where, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(where + "." + key, "expected a non-negative integer");
    return static_cast<std::size_t>(v.get<long long>());
}

Rat rat_at(const ordered_json& j, const std::string& where) {
    if (!j.is_string())
        fail(where, "expected a rational rendered as \"p\" or \"p/q\"");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

const ordered_json& array_field(const ordered_json& j, const std::string& where,
                                std::size_t len) {
    if (!j.is_array() || j.size() != len)
        fail(where, "expected an array of length " + std::to_string(len));
    return j;
}

// cube[i][j][k] with i < d0, j < d1, k < dOut becomes the matrix of the
// bilinear map: entry at row k, column i*d1 + j.
Mat cube_mat(const ordered_json& j, const std::string& where, std::size_t d0,
             std::size_t d1, std::size_t dOut) {
    array_field(j, where, d0);
    Mat m = Mat::zero(dOut, d0 * d1);
    for (std::size_t i = 0; i < d0; ++i) {
        const std::string wi = where + "[" + std::to_string(i) + "]";
        array_field(j[i], wi, d1);
        for (std::size_t jj = 0; jj < d1; ++jj) {
            const std::string wj = wi + "[" + std::to_string(jj) + "]";
            array_field(j[i][jj], wj, dOut);
            for (std::size_t k = 0; k < dOut; ++k)
                m.at(k, i * d1 + jj) =
                    rat_at(j[i][jj][k], wj + "[" + std::to_string(k) + "]");
        }
    }
    return m;
}

std::vector<Rat> vec_at(const ordered_json& j, const std::string& where,
                        std::size_t len) {
    array_field(j, where, len);
    std::vector<Rat> v(len);
    for (std::size_t i = 0; i < len; ++i)
        v[i] = rat_at(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

Mat matrix_at(const ordered_json& j, const std::string& where, std::size_t rows,
              std::size_t cols) {
    array_field(j, where, rows);
    Mat m = Mat::zero(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string wr = where + "[" + std::to_string(r) + "]";
        array_field(j[r], wr, cols);
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rat_at(j[r][c], wr + "[" + std::to_string(c) + "]");
    }
    return m;
}

ordered_json cube_json(const Mat& m, std::size_t d0, std::size_t d1,
                       std::size_t dOut) {
    ordered_json cube = ordered_json::array();
    for (std::size_t i = 0; i < d0; ++i) {
        ordered_json plane = ordered_json::array();
        for (std::size_t j = 0; j < d1; ++j) {
            ordered_json fiber = ordered_json::array();
            for (std::size_t k = 0; k < dOut; ++k)
                fiber.push_back(m.at(k, i * d1 + j).to_string());
            plane.push_back(std::move(fiber));
        }
        cube.push_back(std::move(plane));
    }
    return cube;
}

ordered_json matrix_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json parse_top(const std::string& text, const std::string& kind) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail("$", std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("$", "expected a top-level object");
    if (size_field(j, "$", "format") != 1)
        fail("$.format", "unsupported format (expected 1)");
    if (string_field(j, "$", "kind") != kind)
        fail("$.kind", "expected \"" + kind + "\"");
    return j;
}

// {"name", "dim", "mul", "unit"?} -> a structurally parsed (unchecked) algebra.
Algebra algebra_at(const ordered_json& j, const std::string& where) {
    const std::string name = string_field(j, where, "name");
    if (name.empty()) fail(where + ".name", "must be non-empty");
    const std::size_t n = size_field(j, where, "dim");
    Obj carrier = Obj::atom(name, n);
    Mat mul = cube_mat(field(j, where, "mul"), where + ".mul", n, n, n);
    std::optional<Mor> unit;
    if (j.contains("unit"))
        unit = Mor(Obj::unit(), carrier,
                   Mat::column(vec_at(j["unit"], where + ".unit", n)));
    return Algebra{carrier, Mor(tensor_obj(carrier, carrier), carrier, std::move(mul)),
                   std::move(unit), name};
}

ordered_json algebra_json(const Algebra& a) {
    const std::size_t n = a.carrier.dim();
    ordered_json ja;
    ja["name"] = a.name;
    ja["dim"] = n;
    ja["mul"] = cube_json(a.mu.mat(), n, n, n);
    if (a.unit) {
        ordered_json u = ordered_json::array();
        for (std::size_t k = 0; k < n; ++k)
            u.push_back(a.unit->mat().at(k, 0).to_string());
        ja["unit"] = u;
    }
    return ja;
}

// {"id", "dim", "left"?, "right"?} over the given algebras.
Module module_at(const ordered_json& j, const std::string& where,
                 const Algebra& leftAlg, const Algebra& rightAlg) {
    const std::string id = string_field(j, where, "id");
    if (id.empty()) fail(where + ".id", "must be non-empty");
    const std::size_t d = size_field(j, where, "dim");
    Obj carrier = Obj::atom(id, d);
    const std::size_t nl = leftAlg.carrier.dim();
    const std::size_t nr = rightAlg.carrier.dim();
    std::optional<Mor> left, right;
    if (j.contains("left"))
        left = Mor(tensor_obj(leftAlg.carrier, carrier), carrier,
                   cube_mat(j["left"], where + ".left", nl, d, d));
    if (j.contains("right"))
        right = Mor(tensor_obj(carrier, rightAlg.carrier), carrier,
                    cube_mat(j["right"], where + ".right", d, nr, d));
    if (!left && !right)
        fail(where, "module needs a \"left\" or \"right\" action cube");
    return Module{left ? std::optional<Algebra>(leftAlg) : std::nullopt,
                  right ? std::optional<Algebra>(rightAlg) : std::nullopt,
                  std::move(carrier), std::move(left), std::move(right), id};
}

ordered_json module_json(const Module& m) {
    const std::size_t d = m.carrier.dim();
    ordered_json jm;
    jm["id"] = m.id;
    jm["dim"] = d;
    if (m.actLeft)
        jm["left"] = cube_json(m.actLeft->mat(),
                               m.algebraLeft->carrier.dim(), d, d);
    if (m.actRight)
        jm["right"] = cube_json(m.actRight->mat(), d,
                                m.algebraRight->carrier.dim(), d);
    return jm;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
    ordered_json j = parse_top(text, "algebra");
    // The algebra block carries dim/mul/unit; its display name lives at the top.
    ordered_json ja = field(j, "$", "algebra");
    ja["name"] = string_field(j, "$", "name");
    Algebra alg = algebra_at(ja, "$.algebra");
    AlgebraFile f{std::move(alg), {}, {}};
    if (j.contains("provenance")) {
        if (!j["provenance"].is_string())
            fail("$.provenance", "expected a string");
        f.provenance = j["provenance"].get<std::string>();
    }
    if (j.contains("modules")) {
        if (!j["modules"].is_array()) fail("$.modules", "expected an array");
        for (std::size_t i = 0; i < j["modules"].size(); ++i) {
            const std::string where = "$.modules[" + std::to_string(i) + "]";
            Module m = module_at(j["modules"][i], where, f.alg, f.alg);
            for (const Module& seen : f.modules)
                if (seen.id == m.id) fail(where + ".id", "duplicate id \"" + m.id + "\"");
            f.modules.push_back(std::move(m));
        }
    }
    return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
    return parse_algebra_file(read_file(path));
}

std::string emit_algebra_file(const Algebra& a, const std::vector<Module>& modules,
                              const std::string& provenance) {
    ordered_json j;
    j["format"] = 1;
    j["kind"] = "algebra";
    j["name"] = a.name;
    if (!provenance.empty()) j["provenance"] = provenance;
    ordered_json ja = algebra_json(a);
    ja.erase("name");
    j["algebra"] = std::move(ja);
    ordered_json jm = ordered_json::array();
    for (const Module& m : modules) jm.push_back(module_json(m));
    j["modules"] = std::move(jm);
    return j.dump(2) + "\n";
}

AlgebraFile validated(const AlgebraFile& f) {
    AlgebraFile out{make_algebra(f.alg.carrier, f.alg.mu, f.alg.unit, f.alg.name),
                    {}, f.provenance};
    for (const Module& m : f.modules) {
        if (m.actLeft && m.actRight)
            out.modules.push_back(make_bimodule(out.alg, out.alg, m.carrier,
                                                *m.actLeft, *m.actRight, m.id));
        else if (m.actLeft)
            out.modules.push_back(make_left_module(out.alg, m.carrier, *m.actLeft, m.id));
        else
            out.modules.push_back(make_right_module(out.alg, m.carrier, *m.actRight, m.id));
    }
    return out;
}

const Module& module_by_id(const AlgebraFile& f, const std::string& id) {
    for (const Module& m : f.modules)
        if (m.id == id) return m;
    std::string have;
    for (const Module& m : f.modules)
        have += (have.empty() ? "" : ", ") + ("\"" + m.id + "\"");
    throw InputError("no module with id \"" + id + "\" in file (available: " +
                     (have.empty() ? "none" : have) + ")");
}

MoritaWitness parse_morita_witness(const std::string& text) {
    ordered_json j = parse_top(text, "morita-witness");
    Algebra algA = algebra_at(field(j, "$", "algebra_a"), "$.algebra_a");
    Algebra algB = algebra_at(field(j, "$", "algebra_b"), "$.algebra_b");
    Module p = module_at(field(j, "$", "p"), "$.p", algA, algB);
    Module q = module_at(field(j, "$", "q"), "$.q", algB, algA);
    if (!p.actLeft || !p.actRight)
        fail("$.p", "the bimodule needs both \"left\" and \"right\" action cubes");
    if (!q.actLeft || !q.actRight)
        fail("$.q", "the bimodule needs both \"left\" and \"right\" action cubes");
    const std::size_t dp = p.carrier.dim(), dq = q.carrier.dim();
    Mat pq = matrix_at(field(j, "$", "iso_pq"), "$.iso_pq",
                       algA.carrier.dim(), dp * dq);
    Mat qp = matrix_at(field(j, "$", "iso_qp"), "$.iso_qp",
                       algB.carrier.dim(), dq * dp);
    Mor isoPQ(tensor_obj(p.carrier, q.carrier), algA.carrier, std::move(pq));
    Mor isoQP(tensor_obj(q.carrier, p.carrier), algB.carrier, std::move(qp));
    return MoritaWitness{std::move(algA), std::move(algB), std::move(p),
                         std::move(q), std::move(isoPQ), std::move(isoQP)};
}

MoritaWitness load_morita_witness(const std::string& path) {
    return parse_morita_witness(read_file(path));
}

std::string emit_morita_witness(const MoritaWitness& w) {
    ordered_json j;
    j["format"] = 1;
    j["kind"] = "morita-witness";
    j["algebra_a"] = algebra_json(w.algA);
    j["algebra_b"] = algebra_json(w.algB);
    j["p"] = module_json(w.p);
    j["q"] = module_json(w.q);
    j["iso_pq"] = matrix_json(w.isoPQ.mat());
    j["iso_qp"] = matrix_json(w.isoQP.mat());
    return j.dump(2) + "\n";
}

MoritaWitness validated(const MoritaWitness& w) {
    Algebra a = make_algebra(w.algA.carrier, w.algA.mu, w.algA.unit, w.algA.name);
    Algebra b = make_algebra(w.algB.carrier, w.algB.mu, w.algB.unit, w.algB.name);
    Module p = make_bimodule(a, b, w.p.carrier, *w.p.actLeft, *w.p.actRight, w.p.id);
    Module q = make_bimodule(b, a, w.q.carrier, *w.q.actLeft, *w.q.actRight, w.q.id);
    return MoritaWitness{std::move(a), std::move(b), std::move(p), std::move(q),
                         w.isoPQ, w.isoQP};
}

std::string report_json(const Report& rep, const Summary& summary) {
    ordered_json j;
    j["format"] = 1;
    j["kind"] = "report";
    for (const auto& [key, value] : summary) j[key] = value;
    j["all_pass"] = rep.all_pass();
    std::size_t failures = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> byLaw;
    for (const Check& c : rep.checks) {
        if (!c.pass) ++failures;
        auto& [p, f] = byLaw[c.law];
        (c.pass ? p : f) += 1;
    }
    ordered_json counts;
    counts["checks"] = rep.checks.size();
    counts["failures"] = failures;
    j["counts"] = std::move(counts);
    ordered_json lawCounts;  // std::map iteration = lexicographic key order
    for (const auto& [law, pf] : byLaw) {
        ordered_json e;
        e["pass"] = pf.first;
        e["fail"] = pf.second;
        lawCounts[law] = std::move(e);
    }
    j["law_counts"] = std::move(lawCounts);
    ordered_json checks = ordered_json::array();
    for (const Check& c : rep.checks) {
        ordered_json jc;
        jc["law"] = c.law;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["details"] = c.details;
        if (!c.pass && !c.mats.empty()) {
            ordered_json mats = ordered_json::array();
            for (const auto& [label, mat] : c.mats) {
                ordered_json jmat;
                jmat["label"] = label;
                jmat["rows"] = matrix_json(mat);
                mats.push_back(std::move(jmat));
            }
            jc["mats"] = std::move(mats);
        }
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string report_text(const Report& rep, const Summary& summary) {
    std::ostringstream out;
    for (const auto& [key, value] : summary)
        out << key << ": " << (value ? "yes" : "no") << "\n";
    if (!summary.empty()) out << "\n";

    std::map<std::string, std::pair<std::size_t, std::size_t>> byLaw;
    std::size_t failures = 0;
    for (const Check& c : rep.checks) {
        if (!c.pass) ++failures;
        auto& [p, f] = byLaw[c.law];
        (c.pass ? p : f) += 1;
    }
    std::size_t width = 4;
    for (const auto& [law, pf] : byLaw) width = std::max(width, law.size());
    out << pad("law", width) << "  " << std::setw(6) << "pass"
        << "  " << std::setw(6) << "fail" << "\n";
    for (const auto& [law, pf] : byLaw)
        out << pad(law, width) << "  " << std::setw(6) << pf.first << "  "
            << std::setw(6) << pf.second << "\n";

    bool first = true;
    for (const Check& c : rep.checks) {
        if (c.pass) continue;
        if (first) out << "\n";
        first = false;
        out << "FAIL " << c.law << " [" << c.name << "]\n";
        if (!c.details.empty()) out << "     " << c.details << "\n";
        for (const auto& [label, mat] : c.mats) {
            out << "     " << label << ":\n";
            std::istringstream lines(mat.to_string());
            for (std::string line; std::getline(lines, line);)
                out << "       " << line << "\n";
        }
    }

    out << "\n";
    if (failures == 0)
        out << "result: all " << rep.checks.size() << " checks passed\n";
    else
        out << "result: " << failures << " of " << rep.checks.size()
            << " checks FAILED\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw InputError("error while reading file: " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << text;
    out.flush();
    if (!out) throw InputError("error while writing file: " + path);
}

}  // namespace sia::io
