#pragma once

#include <vector>

#include "qg/error.hpp"

namespace qg {

// Dense square matrix with entries in Z_m.  Vectors act on the right
// (row vector times matrix), so products of matrices compose left to
// right with the words they evaluate.
class MatrixMod {
 public:
  MatrixMod(int dim, long long mod);
  static MatrixMod identity(int dim, long long mod);
  static MatrixMod from_rows(const std::vector<std::vector<long long>>& rows,
                             long long mod);

  int dim() const { return dim_; }
  long long mod() const { return mod_; }
  long long at(int r, int c) const { return a_[idx(r, c)]; }
  void set(int r, int c, long long v) { a_[idx(r, c)] = norm(v); }

  MatrixMod operator*(const MatrixMod& o) const;
  MatrixMod operator+(const MatrixMod& o) const;
  MatrixMod operator-(const MatrixMod& o) const;
  MatrixMod scaled(long long c) const;

  // Adjugate-based inverse; throws NotInvertible when the determinant
  // is not a unit mod m.
  MatrixMod inverse() const;
  long long det() const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const MatrixMod&) const = default;

  // Row vector times matrix.
  std::vector<long long> apply_row(const std::vector<long long>& v) const;

  // Least k >= 1 with M^k = I, or 0 if none up to `limit`.
  int multiplicative_order(int limit = 1000) const;

 private:
  int idx(int r, int c) const { return r * dim_ + c; }
  long long norm(long long v) const { return ((v % mod_) + mod_) % mod_; }

  int dim_;
  long long mod_;
  std::vector<long long> a_;
};

}  // namespace qg
