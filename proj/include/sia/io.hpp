#pragma once
// JSON (de)serialization for algebra files, Morita witness files and check
// reports, plus the plain-text report renderer used by the CLI.
//
// Algebra file (format 1):
//   {
//     "format": 1,
//     "kind": "algebra",
//     "name": "mat2",
//     "provenance": "optional free-form note",
//     "algebra": { "dim": n, "mul": [[["p/q", ...], ...], ...], "unit": ["1", ...] },
//     "modules": [ { "id": "regular", "dim": d, "left": cube, "right": cube } ]
//   }
// Scalars are exact rationals rendered in lowest terms as "p" or "p/q".
// Cubes are structure constants: mul[i][j][k] is the coefficient of e_k in
// e_i * e_j; a left action cube is left[a][x][y] (coefficient of e_y in
// a . x), a right action cube is right[x][a][y].  "unit" and both action
// cubes are optional; at least one action must be present per module.
//
// Morita witness file (format 1):
//   {
//     "format": 1,
//     "kind": "morita-witness",
//     "algebra_a": { "name", "dim", "mul", "unit"? },
//     "algebra_b": { ... },
//     "p": { "id", "dim", "left": cube over A, "right": cube over B },
//     "q": { "id", "dim", "left": cube over B, "right": cube over A },
//     "iso_pq": row-major matrix, dim(A) x (dim(P) * dim(Q)),
//     "iso_qp": row-major matrix, dim(B) x (dim(Q) * dim(P))
//   }
//
// Parsing reports malformed input as InputError with a JSON-path-style
// location ("$.algebra.mul[1][2]: ...").  Parsing is purely structural; the
// algebra/module laws are checked separately by `validated`, so that the
// `check` subcommand can report law failures instead of refusing to load.

#include "sia/algebra.hpp"
#include "sia/morita.hpp"
#include "sia/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sia::io {

struct AlgebraFile {
    Algebra alg;                  // raw: not law-checked at parse time
    std::vector<Module> modules;  // raw: actions attached without law checks
    std::string provenance;       // empty when the file carries none
};

AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);
std::string emit_algebra_file(const Algebra& a, const std::vector<Module>& modules,
                              const std::string& provenance = "");

// Re-runs the constructor-time law checks (associativity, unit triangles,
// module laws).  Throws AxiomError naming the violated law.
AlgebraFile validated(const AlgebraFile& f);

// Finds a module by id; throws InputError listing the available ids.
const Module& module_by_id(const AlgebraFile& f, const std::string& id);

MoritaWitness parse_morita_witness(const std::string& text);
MoritaWitness load_morita_witness(const std::string& path);
std::string emit_morita_witness(const MoritaWitness& w);
MoritaWitness validated(const MoritaWitness& w);

// Extra top-level keys prepended to a report rendering ("self_induced", ...).
using Summary = std::vector<std::pair<std::string, bool>>;

// Deterministic JSON rendering: fixed key order, two-space indent, trailing
// newline, law_counts sorted lexicographically, no timings or paths.
std::string report_json(const Report& rep, const Summary& summary = {});

// Human-oriented rendering: per-law pass/fail table, details of each failing
// check (with offending matrices), one-line verdict.
std::string report_text(const Report& rep, const Summary& summary = {});

std::string read_file(const std::string& path);           // InputError on failure
void write_file(const std::string& path, const std::string& text);

}  // namespace sia::io
