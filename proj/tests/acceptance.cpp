// Acceptance gate: one line per criterion, exact zero-tolerance checks only.
//
// Criterion 5 is expected to FAIL: its final clause asks for a corpus instance
// where Hom_A(A,A) (x) V and Hom_A(A, A (x) V) differ in dimension, but over
// exact finite-dimensional coefficients the comparison map is always an
// isomorphism, so no witness can exist.  The engine runs the search and
// reports the miss honestly instead of weakening the check.

#include "sia/category.hpp"
#include "sia/corpus.hpp"
#include "sia/io.hpp"
#include "sia/pairing.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace sia;

namespace {

int g_failures = 0;

void line(int n, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << n << ". " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string suite_detail(const Report& rep, double secs = -1.0) {
    std::ostringstream os;
    std::size_t fails = 0;
    for (const auto& c : rep.checks)
        if (!c.pass) ++fails;
    os << rep.checks.size() << " checks, " << fails << " failures";
    if (secs >= 0.0) os << ", " << secs << " s";
    return os.str();
}

Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-4, 4);
    Mat m = Mat::zero(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rat(num(rng));
    return m;
}

Mor random_mor(std::mt19937& rng, const Obj& dom, const Obj& cod) {
    return Mor(dom, cod, random_mat(rng, cod.dim(), dom.dim()));
}

bool same_mor(const Mor& f, const Mor& g) {
    return f.dom() == g.dom() && f.cod() == g.cod() && f.mat() == g.mat();
}

bool coherence_suite() {
    const std::vector<std::size_t> dims{1, 2, 3};
    std::vector<Obj> objs;
    for (std::size_t d : dims)
        objs.push_back(Obj::atom("c" + std::to_string(d), d));
    bool ok = true;
    for (const Obj& a : objs)
        for (const Obj& b : objs) {
            // symmetry: swapping twice is the identity
            ok = ok && same_mor(braiding(b, a) * braiding(a, b),
                                Mor::identity(Obj::tensor(a, b)));
            for (const Obj& c : objs) {
                const Mor triangleL =
                    tensor_mor(Mor::identity(a), left_unitor(b)) *
                    associator(a, Obj::unit(), b);
                const Mor triangleR =
                    tensor_mor(right_unitor(a), Mor::identity(b));
                ok = ok && same_mor(triangleL, triangleR);
                const Mor hex1L = associator(b, c, a) *
                                  braiding(a, Obj::tensor(b, c)) *
                                  associator(a, b, c);
                const Mor hex1R = tensor_mor(Mor::identity(b), braiding(a, c)) *
                                  associator(b, a, c) *
                                  tensor_mor(braiding(a, b), Mor::identity(c));
                ok = ok && same_mor(hex1L, hex1R);
                const Mor hex2L = associator_inv(c, a, b) *
                                  braiding(Obj::tensor(a, b), c) *
                                  associator_inv(a, b, c);
                const Mor hex2R = tensor_mor(braiding(a, c), Mor::identity(b)) *
                                  associator_inv(a, c, b) *
                                  tensor_mor(Mor::identity(a), braiding(b, c));
                ok = ok && same_mor(hex2L, hex2R);
                for (const Obj& d : objs) {
                    const Mor pentL = associator(a, b, Obj::tensor(c, d)) *
                                      associator(Obj::tensor(a, b), c, d);
                    const Mor pentR =
                        tensor_mor(Mor::identity(a), associator(b, c, d)) *
                        associator(a, Obj::tensor(b, c), d) *
                        tensor_mor(associator(a, b, c), Mor::identity(d));
                    ok = ok && same_mor(pentL, pentR);
                }
            }
        }
    return ok;
}

bool closedness_suite() {
    std::mt19937 rng(20240517);
    bool ok = true;
    for (std::size_t da = 1; da <= 3; ++da)
        for (std::size_t db = 1; db <= 3; ++db)
            for (std::size_t dc = 1; dc <= 3; ++dc) {
                const Obj a = Obj::atom("a", da);
                const Obj b = Obj::atom("b", db);
                const Obj c = Obj::atom("c", dc);
                const Mor f = random_mor(rng, Obj::tensor(a, b), c);
                ok = ok && same_mor(uncurry(curry(f)), f);
                const Mor g = random_mor(rng, b, Obj::hom(a, c));
                ok = ok && same_mor(curry(uncurry(g)), g);
                const Mor ev =
                    eval(a, c) * tensor_mor(Mor::identity(a), curry(f));
                ok = ok && same_mor(ev, f);
                ok = ok && is_invertible(hom_lift(a, b, c).mat());
                // composition map realizes matrix multiplication
                const Mor p = random_mor(rng, a, b);
                const Mor q = random_mor(rng, b, c);
                const Mat pq = kernels::kron(Mat::column(flatten_map(p)),
                                             Mat::column(flatten_map(q)));
                ok = ok && composition_map(a, b, c).mat().apply(
                               pq.column_vec(0)) == flatten_map(q * p);
                // inflation realizes Id (x) f
                ok = ok &&
                     inflation_map(a, b, c).mat().apply(flatten_map(p)) ==
                         flatten_map(tensor_mor(Mor::identity(c), p));
                ok = ok &&
                     coinflation_map(a, b, c).mat().apply(flatten_map(p)) ==
                         flatten_map(tensor_mor(p, Mor::identity(c)));
            }
    return ok;
}

struct CliRun {
    int exitCode = -1;
    std::string out;
};

CliRun run_corpus_cli(const std::string& tag) {
    const std::string path =
        "/tmp/sia-acceptance-" + std::to_string(::getpid()) + "-" + tag + ".json";
    const std::string cmd = std::string(SIA_CLI_PATH) +
                            " corpus --max-dim 2 --format json > " + path +
                            " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    CliRun run;
    if (rc == -1 || !WIFEXITED(rc)) return run;
    run.exitCode = WEXITSTATUS(rc);
    run.out = io::read_file(path);
    return run;
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    const bool coherent = coherence_suite();
    line(1, "monoidal coherence (pentagon, triangle, hexagons, symmetry; dims 1-3)",
         coherent && seconds_since(t0) < 10.0,
         "elapsed " + std::to_string(seconds_since(t0)) + " s (budget 10 s)");

    line(2, "closed structure (curry/uncurry, eval, hom-lift, composition, inflation; dims 1-3)",
         closedness_suite(), "");

    const std::vector<CorpusEntry> corpus2 = standard_corpus(2);

    {
        const Report rep = unital_suite(corpus2);
        line(3, "unital algebras: smooth = rough = unital, homotopy identities, unit detection",
             rep.all_pass(), suite_detail(rep));
    }

    {
        const auto t4 = std::chrono::steady_clock::now();
        const Report rep = theorem_suite(standard_corpus(3));
        const double secs = seconds_since(t4);
        line(4, "smooth/rough equivalence theorem over the full corpus (ambient dims <= 36)",
             rep.all_pass() && secs < 120.0, suite_detail(rep, secs));
    }

    {
        const Report rep = multiplier_corpus_suite(corpus2);
        std::set<std::string> failingLaws;
        for (const auto& c : rep.checks)
            if (!c.pass) failingLaws.insert(c.law);
        const bool onlyExpected =
            failingLaws ==
            std::set<std::string>{"free-rough/mismatch-exhibited"};
        std::string detail = suite_detail(rep);
        if (onlyExpected)
            detail +=
                "; the one failure is the existential search for an instance "
                "with dim Hom_A(A,A) (x) V != dim Hom_A(A, A (x) V): the "
                "comparison map is invertible for every finite-dimensional "
                "algebra in exact arithmetic, so no witness exists and the "
                "check is honestly red";
        line(5, "multiplier algebras: unitality, homomorphism property, free-module displays",
             rep.all_pass(), detail);
    }

    {
        const Report rep = bimodule_functor_suite(corpus2);
        line(6, "bimodule-induced functors: smooth/rough preservation, adjunctions, pull-backs",
             rep.all_pass(), suite_detail(rep));
    }

    {
        const Report rep = morita_suite(6);
        line(7, "Morita witnesses: pairing algebras (dimV*dimW <= 6) and the matrix-unit case",
             rep.all_pass(), suite_detail(rep));
    }

    {
        Mat b = Mat::zero(1, 2);
        b.at(0, 0) = Rat(1);
        const PairingAlgebra degenerate =
            build_pairing_algebra(PairingSpec{2, 1, b});
        const NonmonicDemo demo = nonmonic_smoothening_demo(degenerate);
        bool ok = degenerate.report.all_pass() && !degenerate.canonicalMonic &&
                  demo.report.all_pass();
        bool sawDrop = false;
        for (const auto& c : demo.report.checks)
            if (c.law == "nonmonic/comparison-drops-rank" && c.pass)
                sawDrop = true;
        ok = ok && sawDrop;
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            const PairingAlgebra perfect = build_pairing_algebra(
                PairingSpec{n, n, Mat::identity(n)});
            const NonmonicDemo pd = nonmonic_smoothening_demo(perfect);
            ok = ok && perfect.canonicalMonic && pd.report.all_pass() &&
                 pd.report.checks.size() == 1 &&
                 pd.report.checks[0].law == "nonmonic/applicable";
        }
        line(8, "non-monic smoothening demo: rank drop for b=[1 0], monic for perfect pairings",
             ok, "");
    }

    {
        const Report rep = oracle_suite(corpus2);
        line(9, "independent oracle agreement for every balanced tensor/Hom dimension",
             rep.all_pass(), suite_detail(rep));
    }

    {
        const CliRun first = run_corpus_cli("run1");
        const CliRun second = run_corpus_cli("run2");
        const bool ok = first.exitCode != -1 && second.exitCode != -1 &&
                        !first.out.empty() && first.out == second.out &&
                        first.exitCode == second.exitCode;
        line(10, "determinism: corpus CLI output byte-identical across two runs",
             ok,
             "exit " + std::to_string(first.exitCode) + ", " +
                 std::to_string(first.out.size()) + " bytes each");
    }

    std::cout << (g_failures == 0
                      ? "acceptance: all criteria passed\n"
                      : "acceptance: " + std::to_string(g_failures) +
                            " criterion(s) failed\n");
    return g_failures == 0 ? 0 : 1;
}
