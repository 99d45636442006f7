#pragma once

#include <iosfwd>
#include <string>

#include "qg/free_word.hpp"
#include "qg/group_ring.hpp"
#include "qg/mendelsohn.hpp"
#include "qg/module_rep.hpp"
#include "qg/quasigroup.hpp"
#include "qg/term.hpp"

namespace qg {

// Latin-square text format:
//   line 1: n
//   lines 2..n+1: n space-separated 0-based entries of the
//                 multiplication table
//   optional last line: "labels: e a b ..."
// Ragged rows and out-of-range entries are rejected.
Quasigroup read_quasigroup(std::istream& in);
Quasigroup read_quasigroup_file(const std::string& path);
std::string write_quasigroup(const Quasigroup& q, bool with_labels = true);

// Triple-system JSON: {"n": int, "triples": [[i,j,k], ...]}
TripleSystem read_triple_system(std::istream& in);
TripleSystem read_triple_system_file(const std::string& path);
std::string write_triple_system(const TripleSystem& ts);

// Module JSON:
//   {"modulus": m, "dim": k, "assign": {"<label>": [[row], ...], ...}}
// Labels resolve through the quasigroup; every element needs a matrix.
ModuleAssignment read_module(std::istream& in, const Quasigroup& q);
ModuleAssignment read_module_file(const std::string& path,
                                  const Quasigroup& q);

// Infix word syntax with explicit parentheses: element labels, the
// literal X, variables x1, x2, ... (when allowed), and operators
// *, /, \.  Example: (e*X)*e
Term parse_term(const std::string& text, const Quasigroup& q,
                bool allow_variables = false);
std::string format_term(const Term& t, const Quasigroup& q);

// Free-word syntax: whitespace-separated letters R(a), R(a)^-1; the
// empty word prints as 1.
FreeWord parse_free_word(const std::string& text, const Quasigroup& q);
std::string format_free_word(const FreeWord& w, const Quasigroup& q);

// Ring elements print as signed terms over free words, e.g.
//   R(x) R(y) + R(yx)^-1   or   2 R(a) - 1
std::string format_ring_element(const RingElement& r, const Quasigroup& q);

}  // namespace qg
