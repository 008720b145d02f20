#include "helpers.hpp"

#include "sia/corpus.hpp"
#include "sia/io.hpp"
#include "sia/pairing.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace sia;

namespace {

std::string tmp_path(const std::string& tag) {
    return "/tmp/sia-test-" + std::to_string(::getpid()) + "-" + tag;
}

struct RunResult {
    int exitCode;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
    const std::string outPath = tmp_path(tag + ".out");
    const std::string cmd =
        std::string(SIA_CLI_PATH) + " " + args + " > " + outPath + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return RunResult{WEXITSTATUS(rc), io::read_file(outPath)};
}

void write_tmp(const std::string& path, const std::string& text) {
    io::write_file(path, text);
}

const char* kNonAssociative =
    R"({"format":1,"kind":"algebra","name":"bad","algebra":{"dim":2,
        "mul":[[["0","1"],["0","0"]],[["1","0"],["0","1"]]]},"modules":[]})";

}  // namespace

TEST_CASE("algebra files round-trip byte-identically") {
    const Algebra a = matrix_algebra(2);
    const std::vector<Module> mods{regular_bimodule(a), zero_action_module(a, 1)};
    const std::string text = io::emit_algebra_file(a, mods, "round-trip probe");
    const io::AlgebraFile f = io::parse_algebra_file(text);
    CHECK(f.alg.name == "mat2");
    CHECK(f.provenance == "round-trip probe");
    CHECK(f.alg.mu.mat() == a.mu.mat());
    REQUIRE(f.alg.unit.has_value());
    CHECK(f.alg.unit->mat() == a.unit->mat());
    REQUIRE(f.modules.size() == 2);
    CHECK(f.modules[0].actLeft->mat() == mods[0].actLeft->mat());
    CHECK(f.modules[0].actRight->mat() == mods[0].actRight->mat());
    CHECK(!f.modules[1].actRight.has_value());
    const io::AlgebraFile v = io::validated(f);
    CHECK(io::emit_algebra_file(v.alg, v.modules, v.provenance) == text);
}

TEST_CASE("witness files round-trip byte-identically") {
    const MoritaWitness w = morita_witness_matrix_unit(2);
    const std::string text = io::emit_morita_witness(w);
    const MoritaWitness w2 = io::validated(io::parse_morita_witness(text));
    CHECK(w2.isoPQ.mat() == w.isoPQ.mat());
    CHECK(w2.isoQP.mat() == w.isoQP.mat());
    CHECK(w2.p.actLeft->mat() == w.p.actLeft->mat());
    CHECK(io::emit_morita_witness(w2) == text);
}

TEST_CASE("parse errors carry JSON-path locations") {
    auto diag = [](const std::string& text) -> std::string {
        try {
            io::parse_algebra_file(text);
        } catch (const InputError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(diag("{").find("$: not valid JSON") == 0);
    CHECK(diag("[]").find("top-level object") != std::string::npos);
    CHECK(diag(R"({"format":2,"kind":"algebra"})").find("$.format") == 0);
    CHECK(diag(R"({"format":1,"kind":"wrong"})").find("$.kind") == 0);
    CHECK(diag(R"({"format":1,"kind":"algebra","name":"x","algebra":{"dim":1,
                 "mul":[[["boom"]]]}})")
              .find("$.algebra.mul[0][0][0]") == 0);
    CHECK(diag(R"({"format":1,"kind":"algebra","name":"x","algebra":{"dim":1,
                 "mul":[[["1"]]]},"modules":[{"id":"m","dim":1}]})")
              .find("left") != std::string::npos);
    // duplicate module ids are rejected
    CHECK(diag(R"({"format":1,"kind":"algebra","name":"x","algebra":{"dim":1,
                 "mul":[[["1"]]]},"modules":[
                 {"id":"m","dim":1,"left":[[["1"]]]},
                 {"id":"m","dim":1,"left":[[["1"]]]}]})")
              .find("duplicate") != std::string::npos);
}

TEST_CASE("validated() enforces the laws that parsing defers") {
    const io::AlgebraFile f = io::parse_algebra_file(kNonAssociative);  // fine
    CHECK_THROWS_AS(io::validated(f), AxiomError);
}

TEST_CASE("report JSON shape: sorted law counts, mats only on failures") {
    Report rep;
    rep.add("b_law/x", "n", true);
    rep.add("a_law/y", "n", false, "broke");
    rep.add_mats("c_law/z", "n", false, "with mats", {{"m", Mat::identity(1)}});
    const std::string js = io::report_json(rep, {{"flag", true}});
    const auto j = nlohmann::json::parse(js);
    CHECK(j["format"] == 1);
    CHECK(j["kind"] == "report");
    CHECK(j["flag"] == true);
    CHECK(j["all_pass"] == false);
    CHECK(j["counts"]["checks"] == 3);
    CHECK(j["counts"]["failures"] == 2);
    std::vector<std::string> laws;
    for (auto it = j["law_counts"].begin(); it != j["law_counts"].end(); ++it)
        laws.push_back(it.key());
    CHECK(laws == std::vector<std::string>{"a_law/y", "b_law/x", "c_law/z"});
    CHECK(!j["checks"][0].contains("mats"));
    CHECK(!j["checks"][1].contains("mats"));
    REQUIRE(j["checks"][2].contains("mats"));
    CHECK(j["checks"][2]["mats"][0]["label"] == "m");
    const std::string txt = io::report_text(rep);
    CHECK(txt.find("FAIL a_law/y [n]") != std::string::npos);
    CHECK(txt.find("result: 2 of 3 checks FAILED") != std::string::npos);
}

TEST_CASE("cli: help and usage errors") {
    CHECK(run_cli("--help", "help").exitCode == 0);
    CHECK(run_cli("", "noargs").exitCode == 2);
    CHECK(run_cli("frobnicate", "unknown").exitCode == 2);
    CHECK(run_cli("check /nonexistent.json", "missing").exitCode == 2);
}

TEST_CASE("cli: pairing pipeline drives every file-based subcommand") {
    const std::string algPath = tmp_path("alg.json");
    const std::string witPath = tmp_path("wit.json");
    const RunResult mk = run_cli("pairing --dimv 2 --dimw 1 --b 1,0 --out " +
                                     algPath + " --emit-witness " + witPath +
                                     " --format json",
                                 "pairing");
    CHECK(mk.exitCode == 0);
    const auto pj = nlohmann::json::parse(mk.out);
    CHECK(pj["all_pass"] == true);
    CHECK(pj["self_induced"] == true);
    CHECK(pj["canonical_map_monic"] == false);

    CHECK(run_cli("check " + algPath, "check").exitCode == 0);
    CHECK(run_cli("theorem " + algPath, "theorem").exitCode == 0);
    CHECK(run_cli("multipliers " + algPath, "mult").exitCode == 0);
    CHECK(run_cli("morita " + witPath, "morita").exitCode == 0);

    const RunResult sm = run_cli("smoothen " + algPath + " --module tensorV",
                                 "smoothen");
    CHECK(sm.exitCode == 0);
    const io::AlgebraFile smf = io::parse_algebra_file(sm.out);
    REQUIRE(smf.modules.size() == 1);
    CHECK(smf.modules[0].id == "smooth(tensorV)");

    const RunResult ro = run_cli("roughen " + algPath + " --module 'pair(2,1)'",
                                 "roughen");
    CHECK(ro.exitCode == 0);
    const io::AlgebraFile rof = io::parse_algebra_file(ro.out);
    REQUIRE(rof.modules.size() == 1);
    CHECK(rof.modules[0].id == "rough(pair(2,1))");
    CHECK(rof.modules[0].carrier.dim() == 1);  // M_l of the degenerate pairing

    CHECK(run_cli("smoothen " + algPath + " --module nope", "badmod").exitCode ==
          2);
    CHECK(run_cli("pairing --dimv 2 --dimw 2 --b 0,0,0,0", "zerob").exitCode == 2);
}

TEST_CASE("cli: law violations exit 1 from check but 2 from computations") {
    const std::string badPath = tmp_path("bad.json");
    write_tmp(badPath, kNonAssociative);
    const RunResult chk = run_cli("check " + badPath + " --format json", "chkbad");
    CHECK(chk.exitCode == 1);
    const auto j = nlohmann::json::parse(chk.out);
    CHECK(j["all_pass"] == false);
    CHECK(j["law_counts"]["algebra/associativity"]["fail"] == 1);
    CHECK(run_cli("smoothen " + badPath + " --module x", "smbad").exitCode == 2);
    CHECK(run_cli("theorem " + badPath, "thbad").exitCode == 2);
}

TEST_CASE("cli: corpus run is deterministic and honestly red") {
    const RunResult a = run_cli("corpus --max-dim 1 --format json", "corpus1");
    CHECK(a.exitCode == 1);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["all_pass"] == false);
    CHECK(j["counts"]["failures"] == 1);
    std::vector<std::string> failingLaws;
    for (const auto& c : j["checks"])
        if (c["pass"] == false) failingLaws.push_back(c["law"]);
    CHECK(failingLaws ==
          std::vector<std::string>{"free-rough/mismatch-exhibited"});

    const RunResult b = run_cli("corpus --max-dim 1 --format json", "corpus2");
    CHECK(a.out == b.out);  // byte-identical reruns
}
