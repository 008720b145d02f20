// Command-line front end: loads algebra/witness files, runs the requested
// verification suite, renders the report as text or deterministic JSON.
//
// Exit codes: 0 all requested checks passed; 1 at least one check failed;
// 2 malformed input, unusable file, or bad usage.

#include "sia/corpus.hpp"
#include "sia/io.hpp"
#include "sia/pairing.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace sia;

int finish(const Report& rep, const std::string& format,
           const io::Summary& summary = {}) {
    std::cout << (format == "json" ? io::report_json(rep, summary)
                                   : io::report_text(rep, summary));
    return rep.all_pass() ? 0 : 1;
}

// Loads, law-checks and (when absent in the file) attaches a detected unit.
io::AlgebraFile load_for_computation(const std::string& path) {
    io::AlgebraFile f = io::validated(io::load_algebra_file(path));
    if (!f.alg.unit) {
        if (std::optional<Mor> u = detect_unit(f.alg))
            f.alg = make_algebra(f.alg.carrier, f.alg.mu, std::move(u), f.alg.name);
    }
    return f;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            out.push_back(Rat::parse(cur));
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--b: ") + e.what());
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t')
            flush();
        else
            cur += ch;
    }
    flush();
    return out;
}

int run_check(const std::string& path, const std::string& format) {
    io::AlgebraFile f = io::load_algebra_file(path);
    Report rep = check_algebra(f.alg);
    for (const Module& m : f.modules) rep.merge(check_module_laws(m));
    io::Summary summary;
    if (rep.all_pass()) {
        const bool unital = f.alg.unit.has_value() || detect_unit(f.alg).has_value();
        const bool si = is_self_induced(f.alg);
        summary.push_back({"self_induced", si});
        summary.push_back({"unital", unital});
        rep.add("info/self-induced", f.alg.name, true,
                si ? "multiplication descends to an isomorphism from the balanced "
                     "tensor square"
                   : "not self-induced");
        rep.add("info/unital", f.alg.name, true,
                unital ? "a two-sided unit exists" : "no two-sided unit");
        if (si) {
            for (const Module& m : f.modules) {
                if (!m.actLeft) continue;
                rep.add("info/smooth", m.id, true,
                        is_smooth(f.alg, as_left(m)) ? "smooth" : "not smooth");
                rep.add("info/rough", m.id, true,
                        is_rough(f.alg, as_left(m)) ? "rough" : "not rough");
            }
        }
    }
    return finish(rep, format, summary);
}

int run_transform(bool rough, const std::string& path, const std::string& moduleId,
                  const std::string& outPath) {
    io::AlgebraFile f = load_for_computation(path);
    const Module& m = io::module_by_id(f, moduleId);
    if (!m.actLeft)
        throw InputError("module \"" + moduleId + "\" has no left action");
    const Module result = rough ? roughen(f.alg, m).mod : smoothen(f.alg, m).mod;
    const std::string text = io::emit_algebra_file(
        f.alg, {result},
        std::string(rough ? "roughening" : "smoothening") + " of module \"" +
            moduleId + "\"");
    if (outPath.empty())
        std::cout << text;
    else
        io::write_file(outPath, text);
    return 0;
}

int run_theorem(const std::string& path, const std::string& format) {
    io::AlgebraFile f = load_for_computation(path);
    if (!is_self_induced(f.alg))
        throw InputError("the smooth/rough equivalence suite needs a self-induced "
                         "algebra and \"" +
                         f.alg.name + "\" is not one (see `sia check`)");
    std::vector<Module> mods;
    for (const Module& m : f.modules)
        if (m.actLeft) mods.push_back(m);
    if (mods.empty())
        throw InputError("the file has no modules with a left action");
    Report rep;
    for (std::size_t i = 0; i < mods.size(); ++i)
        rep.merge(theorem_check(f.alg, mods[i], mods[(i + 1) % mods.size()]));
    if (f.alg.unit)
        for (const Module& m : mods) rep.merge(unital_homotopy_check(f.alg, m));
    return finish(rep, format);
}

int run_multipliers(const std::string& path, const std::string& format) {
    io::AlgebraFile f = load_for_computation(path);
    return finish(multiplier_suite(f.alg), format);
}

int run_morita(const std::string& path, const std::string& format) {
    MoritaWitness w = io::validated(io::load_morita_witness(path));
    const std::vector<Module> samplesA{left_regular_module(w.algA),
                                       zero_action_module(w.algA, 1)};
    const std::vector<Module> samplesB{left_regular_module(w.algB)};
    return finish(verify_morita(w, samplesA, samplesB), format);
}

int run_pairing(std::size_t dimV, std::size_t dimW, const std::string& bText,
                const std::string& outPath, const std::string& witnessPath,
                const std::string& format) {
    const std::vector<Rat> entries = parse_rat_list(bText);
    if (entries.size() != dimV * dimW)
        throw InputError("--b needs dimw*dimv = " + std::to_string(dimV * dimW) +
                         " entries (row-major W x V), got " +
                         std::to_string(entries.size()));
    Mat b = Mat::zero(dimW, dimV);
    for (std::size_t r = 0; r < dimW; ++r)
        for (std::size_t c = 0; c < dimV; ++c) b.at(r, c) = entries[r * dimV + c];
    const PairingAlgebra pa = build_pairing_algebra({dimV, dimW, std::move(b)});
    Report rep = pa.report;
    rep.merge(nonmonic_smoothening_demo(pa).report);
    if (!outPath.empty())
        io::write_file(outPath,
                       io::emit_algebra_file(pa.alg,
                                             {regular_bimodule(pa.alg), pa.vModule,
                                              pa.wModule},
                                             "algebra of the bilinear pairing"));
    if (!witnessPath.empty())
        io::write_file(witnessPath, io::emit_morita_witness(
                                        morita_witness_from_pairing(pa)));
    const io::Summary summary{{"self_induced", is_self_induced(pa.alg)},
                              {"canonical_map_monic", pa.canonicalMonic}};
    return finish(rep, format, summary);
}

int run(int argc, char** argv) {
    CLI::App app{"exact verification of self-induced algebras and smooth/rough "
                 "modules over the rationals"};
    app.require_subcommand(1);
    std::string format = "text";
    auto addFormat = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "report rendering")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    std::string checkPath;
    CLI::App* check = app.add_subcommand(
        "check", "verify the algebra/module laws of a file; report self-induced, "
                 "unital and smooth/rough status");
    check->add_option("file", checkPath, "algebra file (JSON)")->required();
    addFormat(check);

    std::string smoothenPath, smoothenModule, smoothenOut;
    CLI::App* smoothenCmd = app.add_subcommand(
        "smoothen", "compute the balanced tensor product of the algebra with a "
                    "module and write it as an algebra file");
    smoothenCmd->add_option("file", smoothenPath, "algebra file (JSON)")->required();
    smoothenCmd->add_option("--module", smoothenModule, "module id")->required();
    smoothenCmd->add_option("--out", smoothenOut, "write here instead of stdout");

    std::string roughenPath, roughenModule, roughenOut;
    CLI::App* roughenCmd = app.add_subcommand(
        "roughen", "compute the balanced hom from the algebra into a module and "
                   "write it as an algebra file");
    roughenCmd->add_option("file", roughenPath, "algebra file (JSON)")->required();
    roughenCmd->add_option("--module", roughenModule, "module id")->required();
    roughenCmd->add_option("--out", roughenOut, "write here instead of stdout");

    std::string theoremPath;
    CLI::App* theorem = app.add_subcommand(
        "theorem", "run the smooth/rough equivalence suite over the file's modules "
                   "(needs a self-induced algebra)");
    theorem->add_option("file", theoremPath, "algebra file (JSON)")->required();
    addFormat(theorem);

    std::string multPath;
    CLI::App* mult = app.add_subcommand(
        "multipliers", "build the left/right multiplier algebras and verify the "
                       "canonical homomorphisms");
    mult->add_option("file", multPath, "algebra file (JSON)")->required();
    addFormat(mult);

    std::string moritaPath;
    CLI::App* morita = app.add_subcommand(
        "morita", "verify a Morita equivalence witness file");
    morita->add_option("file", moritaPath, "witness file (JSON)")->required();
    addFormat(morita);

    std::size_t dimV = 0, dimW = 0;
    std::string bText, pairingOut, pairingWitness;
    CLI::App* pairing = app.add_subcommand(
        "pairing", "build the algebra of a bilinear pairing W (x) V -> 1 and "
                   "verify its structure");
    pairing->add_option("--dimv", dimV, "dimension of V")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
    pairing->add_option("--dimw", dimW, "dimension of W")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
    pairing->add_option("--b", bText,
                        "pairing matrix, row-major W x V, comma-separated "
                        "rationals (e.g. \"1,0,0,1\")")
        ->required();
    pairing->add_option("--out", pairingOut, "also write the algebra file here");
    pairing->add_option("--emit-witness", pairingWitness,
                        "also write the induced Morita witness file here");
    addFormat(pairing);

    std::size_t maxDim = 2;
    CLI::App* corpus = app.add_subcommand(
        "corpus", "run every suite over the standard corpus of algebras");
    corpus->add_option("--max-dim", maxDim,
                       "corpus size bound; pairing factors range over "
                       "dimV*dimW <= max-dim^2")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4}))
        ->capture_default_str();
    addFormat(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (check->parsed()) return run_check(checkPath, format);
    if (smoothenCmd->parsed())
        return run_transform(false, smoothenPath, smoothenModule, smoothenOut);
    if (roughenCmd->parsed())
        return run_transform(true, roughenPath, roughenModule, roughenOut);
    if (theorem->parsed()) return run_theorem(theoremPath, format);
    if (mult->parsed()) return run_multipliers(multPath, format);
    if (morita->parsed()) return run_morita(moritaPath, format);
    if (pairing->parsed())
        return run_pairing(dimV, dimW, bText, pairingOut, pairingWitness, format);
    if (corpus->parsed()) return finish(corpus_suite(maxDim), format);
    return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sia::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const sia::AxiomError& e) {
        std::cerr << "input rejected, a law fails on the given data: " << e.what()
                  << "\n";
        return 2;
    } catch (const sia::TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
