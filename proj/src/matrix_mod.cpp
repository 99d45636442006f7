#include "qg/matrix_mod.hpp"

#include <numeric>

namespace qg {

namespace {

// Inverse of a mod m via the extended Euclidean algorithm.
long long scalar_inverse(long long a, long long m) {
  long long r0 = m, r1 = ((a % m) + m) % m;
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1)
    fail(Errc::NotInvertible,
         "scalar " + std::to_string(a) + " has no inverse mod " +
             std::to_string(m));
  return ((t0 % m) + m) % m;
}

}  // namespace

MatrixMod::MatrixMod(int dim, long long mod)
    : dim_(dim), mod_(mod), a_(static_cast<size_t>(dim) * dim, 0) {
  if (dim < 1) fail(Errc::OutOfRange, "dimension must be at least 1");
  if (mod < 2) fail(Errc::OutOfRange, "modulus must be at least 2");
}

MatrixMod MatrixMod::identity(int dim, long long mod) {
  MatrixMod m(dim, mod);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

MatrixMod MatrixMod::from_rows(const std::vector<std::vector<long long>>& rows,
                               long long mod) {
  const int dim = static_cast<int>(rows.size());
  MatrixMod m(dim, mod);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(rows[r].size()) != dim)
      fail(Errc::OutOfRange, "matrix is not square");
    for (int c = 0; c < dim; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

MatrixMod MatrixMod::operator*(const MatrixMod& o) const {
  MatrixMod out(dim_, mod_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const long long v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < dim_; ++c)
        out.a_[out.idx(r, c)] = (out.a_[out.idx(r, c)] + v * o.at(k, c)) % mod_;
    }
  return out;
}

MatrixMod MatrixMod::operator+(const MatrixMod& o) const {
  MatrixMod out(dim_, mod_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + o.a_[i]) % mod_;
  return out;
}

MatrixMod MatrixMod::operator-(const MatrixMod& o) const {
  MatrixMod out(dim_, mod_);
  for (size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = ((a_[i] - o.a_[i]) % mod_ + mod_) % mod_;
  return out;
}

MatrixMod MatrixMod::scaled(long long c) const {
  MatrixMod out(dim_, mod_);
  const long long cc = ((c % mod_) + mod_) % mod_;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] * cc) % mod_;
  return out;
}

namespace {

// Determinant by cofactor expansion along the first row; dimensions
// stay small here (module fibers), so the factorial cost is fine.
long long det_rec(const std::vector<long long>& a, int dim, long long mod) {
  if (dim == 1) return a[0];
  if (dim == 2) return ((a[0] * a[3] - a[1] * a[2]) % mod + mod) % mod;
  long long sum = 0;
  std::vector<long long> minor((dim - 1) * (dim - 1));
  for (int c = 0; c < dim; ++c) {
    if (a[c] == 0) continue;
    int mi = 0;
    for (int r = 1; r < dim; ++r)
      for (int cc = 0; cc < dim; ++cc)
        if (cc != c) minor[mi++] = a[r * dim + cc];
    const long long cof = det_rec(minor, dim - 1, mod);
    sum += (c % 2 == 0 ? 1 : -1) * a[c] * cof;
    sum %= mod;
  }
  return (sum + mod) % mod;
}

}  // namespace

long long MatrixMod::det() const { return det_rec(a_, dim_, mod_); }

MatrixMod MatrixMod::inverse() const {
  const long long d = det();
  const long long dinv = scalar_inverse(d, mod_);  // throws if not a unit
  MatrixMod out(dim_, mod_);
  if (dim_ == 1) {
    out.set(0, 0, dinv);
    return out;
  }
  // adj(M)[c][r] = (-1)^(r+c) det(minor_rc); inverse = adj / det.
  std::vector<long long> minor((dim_ - 1) * (dim_ - 1));
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      int mi = 0;
      for (int rr = 0; rr < dim_; ++rr) {
        if (rr == r) continue;
        for (int cc = 0; cc < dim_; ++cc)
          if (cc != c) minor[mi++] = a_[idx(rr, cc)];
      }
      long long cof = det_rec(minor, dim_ - 1, mod_);
      if ((r + c) % 2 == 1) cof = (mod_ - cof) % mod_;
      out.set(c, r, cof * dinv);
    }
  }
  return out;
}

bool MatrixMod::is_zero() const {
  for (long long v : a_)
    if (v != 0) return false;
  return true;
}

bool MatrixMod::is_identity() const { return *this == identity(dim_, mod_); }

std::vector<long long> MatrixMod::apply_row(
    const std::vector<long long>& v) const {
  std::vector<long long> out(dim_, 0);
  for (int c = 0; c < dim_; ++c) {
    long long s = 0;
    for (int r = 0; r < dim_; ++r) s += v[r] * at(r, c);
    out[c] = ((s % mod_) + mod_) % mod_;
  }
  return out;
}

int MatrixMod::multiplicative_order(int limit) const {
  MatrixMod p = *this;
  for (int k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  return 0;
}

}  // namespace qg
