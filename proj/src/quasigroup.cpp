#include "qg/quasigroup.hpp"

#include <algorithm>

#include "qg/error.hpp"

namespace qg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotLatin: return "NotLatin";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotSemisymmetric: return "NotSemisymmetric";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::EmptyQuasigroup: return "EmptyQuasigroup";
    case Errc::InvalidTripleSystem: return "InvalidTripleSystem";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::ClosureCapExceeded: return "ClosureCapExceeded";
    case Errc::TableCapExceeded: return "TableCapExceeded";
    case Errc::NotInStabilizer: return "NotInStabilizer";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ModuleCheckFailed: return "ModuleCheckFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

Quasigroup::Quasigroup(int n, std::vector<int> mul, std::vector<int> rdiv,
                       std::vector<int> ldiv, std::vector<std::string> labels)
    : n_(n),
      mul_(std::move(mul)),
      rdiv_(std::move(rdiv)),
      ldiv_(std::move(ldiv)),
      labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(n_);
}

Quasigroup Quasigroup::from_mul_table(
    const std::vector<std::vector<int>>& table,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n < 1) fail(Errc::OutOfRange, "order must be at least 1");
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      fail(Errc::OutOfRange, "row " + std::to_string(x) + " has " +
                                 std::to_string(table[x].size()) +
                                 " entries, expected " + std::to_string(n));
    for (int y = 0; y < n; ++y) {
      const int v = table[x][y];
      if (v < 0 || v >= n)
        fail(Errc::OutOfRange, "entry (" + std::to_string(x) + "," +
                                   std::to_string(y) + ") = " +
                                   std::to_string(v) + " out of range");
      mul[static_cast<size_t>(x) * n + y] = v;
    }
  }
  // Latin check and division tables in one pass: x*y = z gives
  // z/y = x (column inversion) and x\z = y (row inversion).
  std::vector<int> rdiv(mul.size(), -1), ldiv(mul.size(), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int z = mul[static_cast<size_t>(x) * n + y];
      int& r = rdiv[static_cast<size_t>(z) * n + y];
      if (r != -1)
        fail(Errc::NotLatin, "column " + std::to_string(y) +
                                 " repeats entry " + std::to_string(z));
      r = x;
      int& l = ldiv[static_cast<size_t>(x) * n + z];
      if (l != -1)
        fail(Errc::NotLatin, "row " + std::to_string(x) + " repeats entry " +
                                 std::to_string(z));
      l = y;
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(Errc::OutOfRange, "label count does not match order");
  return Quasigroup(n, std::move(mul), std::move(rdiv), std::move(ldiv),
                    std::move(labels));
}

Quasigroup Quasigroup::from_abelian_group(const std::vector<int>& moduli) {
  long long order = 1;
  for (int m : moduli) {
    if (m < 1) fail(Errc::OutOfRange, "modulus must be positive");
    order *= m;
    if (order > (1 << 20)) fail(Errc::TableCapExceeded, "group too large");
  }
  const int n = static_cast<int>(order);
  const int k = static_cast<int>(moduli.size());
  // Mixed-radix coordinates, first component most significant.
  auto decode = [&](int v) {
    std::vector<int> c(k);
    for (int i = k - 1; i >= 0; --i) {
      c[i] = v % moduli[i];
      v /= moduli[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = 0; i < k; ++i) v = v * moduli[i] + c[i];
    return v;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const auto cx = decode(x);
    for (int y = 0; y < n; ++y) {
      auto c = decode(y);
      for (int i = 0; i < k; ++i) c[i] = (c[i] + cx[i]) % moduli[i];
      table[x][y] = encode(c);
    }
  }
  return from_mul_table(table);
}

Quasigroup Quasigroup::from_raw_tables(int n, std::vector<int> mul,
                                       std::vector<int> rdiv,
                                       std::vector<int> ldiv,
                                       std::vector<std::string> labels) {
  if (n < 1) fail(Errc::OutOfRange, "order must be at least 1");
  const size_t cells = static_cast<size_t>(n) * n;
  if (mul.size() != cells || rdiv.size() != cells || ldiv.size() != cells)
    fail(Errc::OutOfRange, "table size mismatch");
  for (const auto* t : {&mul, &rdiv, &ldiv})
    for (int v : *t)
      if (v < 0 || v >= n) fail(Errc::OutOfRange, "entry out of range");
  return Quasigroup(n, std::move(mul), std::move(rdiv), std::move(ldiv),
                    std::move(labels));
}

Quasigroup Quasigroup::opposite() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) t[x][y] = mul(y, x);
  return from_mul_table(t, labels_);
}

std::optional<int> Quasigroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Quasigroup Quasigroup::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_)
    fail(Errc::OutOfRange, "label count does not match order");
  Quasigroup out = *this;
  out.labels_ = std::move(labels);
  return out;
}

bool is_semisymmetric(const Quasigroup& q) {
  const int n = q.order();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (q.mul(q.mul(y, x), y) != x) return false;
  return true;
}

bool is_idempotent(const Quasigroup& q) {
  for (int x = 0; x < q.order(); ++x)
    if (q.mul(x, x) != x) return false;
  return true;
}

AxiomReport check_axioms(const Quasigroup& q) {
  AxiomReport rep;
  const int n = q.order();
  auto note = [](AxiomCheck& c, int x, int y) {
    if (c.ok) {
      c.ok = false;
      c.witness_x = x;
      c.witness_y = y;
    }
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (q.ldiv(y, q.mul(y, x)) != x) note(rep.il, x, y);
      if (q.rdiv(q.mul(x, y), y) != x) note(rep.ir, x, y);
      if (q.mul(y, q.ldiv(y, x)) != x) note(rep.sl, x, y);
      if (q.mul(q.rdiv(x, y), y) != x) note(rep.sr, x, y);
    }
  }
  return rep;
}

}  // namespace qg
