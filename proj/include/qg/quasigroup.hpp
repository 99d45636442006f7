#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qg {

// A finite quasigroup on {0..n-1}: a Latin-square multiplication table
// together with the two division tables it determines.  Values are
// immutable after construction; every operation on them is pure.
class Quasigroup {
 public:
  // Validates that `table` is an n-by-n Latin square and derives the
  // division tables by row/column inversion.
  static Quasigroup from_mul_table(const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> labels = {});

  // Direct product of cyclic groups Z_m1 x ... x Z_mk as a quasigroup:
  // multiplication is componentwise addition, x/y = x-y, x\y = y-x.
  static Quasigroup from_abelian_group(const std::vector<int>& moduli);

  // Escape hatch for tests and diagnostics: installs the three tables
  // verbatim after a range check only.  The result may violate the
  // quasigroup axioms; check_axioms() is the sanity oracle for it.
  static Quasigroup from_raw_tables(int n, std::vector<int> mul,
                                    std::vector<int> rdiv,
                                    std::vector<int> ldiv,
                                    std::vector<std::string> labels = {});

  int order() const { return n_; }

  int mul(int x, int y) const { return mul_[idx(x, y)]; }
  int rdiv(int x, int y) const { return rdiv_[idx(x, y)]; }  // x/y
  int ldiv(int x, int y) const { return ldiv_[idx(x, y)]; }  // x\y

  // Multiplication table transposed; divisions rederived.
  Quasigroup opposite() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  std::optional<int> index_of(const std::string& label) const;
  Quasigroup with_labels(std::vector<std::string> labels) const;

  // Table equality; labels are display-only and do not participate.
  bool operator==(const Quasigroup& other) const {
    return n_ == other.n_ && mul_ == other.mul_ && rdiv_ == other.rdiv_ &&
           ldiv_ == other.ldiv_;
  }

 private:
  Quasigroup(int n, std::vector<int> mul, std::vector<int> rdiv,
             std::vector<int> ldiv, std::vector<std::string> labels);

  int idx(int x, int y) const { return x * n_ + y; }

  int n_;
  std::vector<int> mul_, rdiv_, ldiv_;  // row-major n*n
  std::vector<std::string> labels_;     // size n, defaults to "0".."n-1"
};

// True iff (y*x)*y = x for all x, y.
bool is_semisymmetric(const Quasigroup& q);

// True iff x*x = x for all x.
bool is_idempotent(const Quasigroup& q);

// Pass/fail for each of the four quasigroup axioms, with the first
// counterexample pair when an axiom fails.
struct AxiomCheck {
  bool ok = true;
  int witness_x = -1;
  int witness_y = -1;
};

struct AxiomReport {
  AxiomCheck il;  // y\(y*x) = x
  AxiomCheck ir;  // (x*y)/y = x
  AxiomCheck sl;  // y*(y\x) = x
  AxiomCheck sr;  // (x/y)*y = x
  bool all_ok() const { return il.ok && ir.ok && sl.ok && sr.ok; }
};

AxiomReport check_axioms(const Quasigroup& q);

}  // namespace qg
