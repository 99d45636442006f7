#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qg/quasigroup.hpp"

namespace qg {

// A Mendelsohn triple system: cyclic triples over {0..n-1} covering every
// ordered pair of distinct points exactly once.  Triples are stored in
// canonical form (least point first, list sorted) so equality is plain
// field equality.
struct TripleSystem {
  int n = 0;
  std::vector<std::array<int, 3>> triples;

  // Rotates each triple least-point-first and sorts the list.
  static TripleSystem canonical(int n, std::vector<std::array<int, 3>> triples);

  bool operator==(const TripleSystem&) const = default;
};

struct TripleSystemReport {
  bool ok = true;
  // Human-readable findings; first entry is the primary violation.
  std::vector<std::string> problems;
  // First uncovered / multiply-covered ordered pair, when applicable.
  int pair_x = -1, pair_y = -1, pair_count = -1;
};

TripleSystemReport validate(const TripleSystem& ts);

// Quasigroup on the point set: x*x = x and x*y = z for each triple
// (x y z), read cyclically.  The result is idempotent and semisymmetric.
Quasigroup to_quasigroup(const TripleSystem& ts);

// Inverse direction for idempotent semisymmetric quasigroups of order
// at least 3: the triples are (x y x*y) over distinct pairs.
TripleSystem from_quasigroup(const Quasigroup& q);

struct SearchLimits {
  // Upper bound on value-placement attempts before giving up with
  // SearchBudgetExceeded; keeps "no system exists" (search space
  // exhausted) distinguishable from "ran out of budget".
  std::uint64_t node_budget = 50'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Deterministic backtracking search for a triple system of order n, run
// over the idempotent semisymmetric multiplication table: cells in
// row-major order, candidate values ascending, fixing x*y = z propagates
// y*z = x and z*x = y.  Returns the lexicographically least system, or
// nullopt once the space is exhausted.  n = 1 is treated as nonexistent.
std::optional<TripleSystem> search_triple_system(
    int n, const SearchLimits& limits = {}, SearchStats* stats = nullptr);

}  // namespace qg
