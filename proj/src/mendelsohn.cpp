#include "qg/mendelsohn.hpp"

#include <algorithm>

#include "qg/error.hpp"

namespace qg {

TripleSystem TripleSystem::canonical(int n,
                                     std::vector<std::array<int, 3>> triples) {
  for (auto& t : triples) {
    int least = static_cast<int>(
        std::min_element(t.begin(), t.end()) - t.begin());
    std::rotate(t.begin(), t.begin() + least, t.end());
  }
  std::sort(triples.begin(), triples.end());
  return TripleSystem{n, std::move(triples)};
}

TripleSystemReport validate(const TripleSystem& ts) {
  TripleSystemReport rep;
  const int n = ts.n;
  if (n < 0) {
    rep.ok = false;
    rep.problems.push_back("negative point count");
    return rep;
  }
  for (const auto& t : ts.triples) {
    for (int v : t)
      if (v < 0 || v >= n) {
        rep.ok = false;
        rep.problems.push_back("triple point out of range");
        return rep;
      }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      rep.ok = false;
      rep.problems.push_back("triple with repeated point");
      return rep;
    }
  }
  // Cover counts for ordered pairs; cyclic reading (x y z) covers
  // (x,y), (y,z), (z,x).  Rotation-duplicate triples show up here as
  // multiply-covered pairs.
  std::vector<int> cover(static_cast<size_t>(n) * n, 0);
  for (const auto& t : ts.triples)
    for (int i = 0; i < 3; ++i)
      ++cover[static_cast<size_t>(t[i]) * n + t[(i + 1) % 3]];
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const int c = cover[static_cast<size_t>(x) * n + y];
      if (c != 1) {
        rep.ok = false;
        rep.pair_x = x;
        rep.pair_y = y;
        rep.pair_count = c;
        rep.problems.push_back(
            (c == 0 ? "uncovered pair (" : "multiply covered pair (") +
            std::to_string(x) + "," + std::to_string(y) + ")");
        return rep;
      }
    }
  }
  return rep;
}

Quasigroup to_quasigroup(const TripleSystem& ts) {
  const auto rep = validate(ts);
  if (!rep.ok)
    fail(Errc::InvalidTripleSystem,
         rep.problems.empty() ? "invalid triple system" : rep.problems.front());
  const int n = ts.n;
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) table[x][x] = x;
  for (const auto& t : ts.triples)
    for (int i = 0; i < 3; ++i) table[t[i]][t[(i + 1) % 3]] = t[(i + 2) % 3];
  return Quasigroup::from_mul_table(table);
}

TripleSystem from_quasigroup(const Quasigroup& q) {
  if (q.order() < 3) fail(Errc::OrderTooSmall, "order must be at least 3");
  if (!is_idempotent(q)) fail(Errc::NotIdempotent, "quasigroup not idempotent");
  if (!is_semisymmetric(q))
    fail(Errc::NotSemisymmetric, "quasigroup not semisymmetric");
  // (x y x*y) for x != y; keeping only the rotation whose least point
  // comes first takes each cyclic triple exactly once.
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      if (x < y && x < q.mul(x, y)) triples.push_back({x, y, q.mul(x, y)});
  return TripleSystem::canonical(q.order(), std::move(triples));
}

namespace {

// Backtracking state over the multiplication table.  Row and column
// bitmasks make the Latin feasibility test O(1); the diagonal is fixed
// to the idempotent values up front.
struct TableSearch {
  int n;
  std::vector<int> mul;          // -1 = unset
  std::vector<std::uint64_t> row_used, col_used;
  std::uint64_t budget, nodes = 0;

  explicit TableSearch(int n_, std::uint64_t budget_)
      : n(n_),
        mul(static_cast<size_t>(n_) * n_, -1),
        row_used(n_, 0),
        col_used(n_, 0),
        budget(budget_) {
    for (int x = 0; x < n; ++x) set(x, x, x);
  }

  int at(int x, int y) const { return mul[static_cast<size_t>(x) * n + y]; }

  void set(int x, int y, int z) {
    mul[static_cast<size_t>(x) * n + y] = z;
    row_used[x] |= 1ull << z;
    col_used[y] |= 1ull << z;
  }

  void unset(int x, int y, int z) {
    mul[static_cast<size_t>(x) * n + y] = -1;
    row_used[x] &= ~(1ull << z);
    col_used[y] &= ~(1ull << z);
  }

  bool can_set(int x, int y, int z) const {
    const int cur = at(x, y);
    if (cur != -1) return cur == z;
    return !((row_used[x] >> z) & 1) && !((col_used[y] >> z) & 1);
  }

  // Places x*y = z together with the forced companions y*z = x and
  // z*x = y; records what was newly placed for rollback.
  bool place(int x, int y, int z, std::vector<std::array<int, 3>>& placed) {
    const std::array<std::array<int, 3>, 3> cells = {
        {{x, y, z}, {y, z, x}, {z, x, y}}};
    for (const auto& c : cells) {
      if (!can_set(c[0], c[1], c[2])) {
        rollback(placed);
        return false;
      }
      if (at(c[0], c[1]) == -1) {
        set(c[0], c[1], c[2]);
        placed.push_back(c);
      }
    }
    return true;
  }

  void rollback(const std::vector<std::array<int, 3>>& placed) {
    for (auto it = placed.rbegin(); it != placed.rend(); ++it)
      unset((*it)[0], (*it)[1], (*it)[2]);
  }

  // True once a full table is found; false when the subtree is
  // exhausted.  Throws when the node budget runs out.
  bool solve(int from) {
    int cell = from;
    const int total = n * n;
    while (cell < total && mul[cell] != -1) ++cell;
    if (cell == total) return true;
    const int x = cell / n, y = cell % n;
    for (int z = 0; z < n; ++z) {
      if (++nodes > budget)
        fail(Errc::SearchBudgetExceeded,
             "search budget exhausted after " + std::to_string(nodes - 1) +
                 " placements");
      std::vector<std::array<int, 3>> placed;
      if (!place(x, y, z, placed)) continue;
      if (solve(cell + 1)) return true;
      rollback(placed);
    }
    return false;
  }
};

}  // namespace

std::optional<TripleSystem> search_triple_system(int n,
                                                 const SearchLimits& limits,
                                                 SearchStats* stats) {
  if (n < 1) fail(Errc::OutOfRange, "order must be positive");
  if (stats) stats->nodes = 0;
  // No system on a single point: one point yields no ordered pairs and
  // no triples of distinct points.
  if (n == 1) return std::nullopt;
  if (n > 63) fail(Errc::TableCapExceeded, "search supports orders up to 63");
  TableSearch s(n, limits.node_budget);
  const bool found = s.solve(0);
  if (stats) stats->nodes = s.nodes;
  if (!found) return std::nullopt;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = s.at(x, y);
  return from_quasigroup(Quasigroup::from_mul_table(table));
}

}  // namespace qg
