#include "qg/extension.hpp"

#include "qg/error.hpp"

namespace qg {

int Extension::fiber_size() const {
  long long s = 1;
  for (int i = 0; i < dim; ++i) s *= modulus;
  return static_cast<int>(s);
}

std::vector<long long> Extension::fiber_vector(int elem) const {
  int fi = fiber_index(elem);
  std::vector<long long> v(dim, 0);
  for (int i = dim - 1; i >= 0; --i) {
    v[i] = fi % modulus;
    fi = static_cast<int>(fi / modulus);
  }
  return v;
}

int Extension::encode(const std::vector<long long>& fiber,
                      int base_elem) const {
  long long fi = 0;
  for (int i = 0; i < dim; ++i) fi = fi * modulus + fiber[i];
  return static_cast<int>(fi) * base.order() + base_elem;
}

namespace {

Extension build_impl(const Quasigroup& q, const ModuleAssignment& a,
                     int order_cap) {
  const int n = q.order();
  const long long m = a.modulus();
  const int k = a.dim();
  long long fiber = 1;
  for (int i = 0; i < k; ++i) {
    fiber *= m;
    if (fiber * n > order_cap)
      fail(Errc::TableCapExceeded,
           "extension order exceeds cap of " + std::to_string(order_cap));
  }
  const int fs = static_cast<int>(fiber);
  const int total = fs * n;

  auto decode = [&](int fi) {
    std::vector<long long> v(k);
    for (int i = k - 1; i >= 0; --i) {
      v[i] = fi % m;
      fi = static_cast<int>(fi / m);
    }
    return v;
  };
  auto encode = [&](const std::vector<long long>& v) {
    long long fi = 0;
    for (int i = 0; i < k; ++i) fi = fi * m + v[i];
    return static_cast<int>(fi);
  };

  // Fiber images under each M_q and M_q^-1, precomputed per base element.
  std::vector<std::vector<long long>> vecs(fs);
  for (int f = 0; f < fs; ++f) vecs[f] = decode(f);
  std::vector<std::vector<std::vector<long long>>> fwd(n), inv(n);
  for (int p = 0; p < n; ++p) {
    fwd[p].reserve(fs);
    inv[p].reserve(fs);
    for (int f = 0; f < fs; ++f) {
      fwd[p].push_back(a.matrix(p).apply_row(vecs[f]));
      inv[p].push_back(a.matrix_inverse(p).apply_row(vecs[f]));
    }
  }

  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  std::vector<long long> sum(k);
  for (int xv = 0; xv < total; ++xv) {
    const int p = xv % n, fx = xv / n;
    for (int yv = 0; yv < total; ++yv) {
      const int qq = yv % n, fy = yv / n;
      const auto& va = fwd[qq][fx];  // v M_q
      const auto& vb = inv[p][fy];   // w M_p^-1
      for (int i = 0; i < k; ++i) sum[i] = (va[i] + vb[i]) % m;
      table[xv][yv] = encode(sum) * n + q.mul(p, qq);
    }
  }
  return Extension{q, m, k, Quasigroup::from_mul_table(table)};
}

}  // namespace

Extension build_extension(const Quasigroup& q, const ModuleAssignment& a,
                          int base_for_check, int order_cap) {
  const auto rep = check_module(q, base_for_check, a);
  if (!rep.ok)
    fail(Errc::ModuleCheckFailed,
         std::to_string(rep.failing.size()) +
             " ideal generator(s) do not annihilate the module");
  return build_impl(q, a, order_cap);
}

Extension build_extension_unchecked(const Quasigroup& q,
                                    const ModuleAssignment& a, int order_cap) {
  return build_impl(q, a, order_cap);
}

ExtensionReport verify_extension(const Extension& ext) {
  ExtensionReport rep;
  const Quasigroup& t = ext.total;
  const int total = t.order();
  const int n = ext.base.order();

  // Latin square
  {
    std::vector<char> seen;
    for (int r = 0; r < total && rep.latin.ok; ++r) {
      seen.assign(total, 0);
      for (int c = 0; c < total; ++c) {
        const int v = t.mul(r, c);
        if (seen[v]) {
          rep.latin = {false, "row " + std::to_string(r) + " repeats " +
                                  std::to_string(v)};
          break;
        }
        seen[v] = 1;
      }
    }
    for (int c = 0; c < total && rep.latin.ok; ++c) {
      seen.assign(total, 0);
      for (int r = 0; r < total; ++r) {
        const int v = t.mul(r, c);
        if (seen[v]) {
          rep.latin = {false, "column " + std::to_string(c) + " repeats " +
                                  std::to_string(v)};
          break;
        }
        seen[v] = 1;
      }
    }
  }

  // (y x) y = x
  for (int y = 0; y < total && rep.semisymmetric.ok; ++y)
    for (int x = 0; x < total; ++x)
      if (t.mul(t.mul(y, x), y) != x) {
        rep.semisymmetric = {false, "fails at x=" + std::to_string(x) +
                                        " y=" + std::to_string(y)};
        break;
      }

  // projection is a homomorphism onto the base
  for (int x = 0; x < total && rep.projection.ok; ++x)
    for (int y = 0; y < total; ++y)
      if (ext.projection(t.mul(x, y)) !=
          ext.base.mul(ext.projection(x), ext.projection(y))) {
        rep.projection = {false, "fails at x=" + std::to_string(x) +
                                     " y=" + std::to_string(y)};
        break;
      }

  // each fiber is an abelian group under componentwise subtraction:
  // u - u = 0, u - 0 = u, and the exchange law (u-v)-w = (u-w)-v
  {
    const int fs = ext.fiber_size();
    const long long m = ext.modulus;
    auto sub = [&](const std::vector<long long>& a,
                   const std::vector<long long>& b) {
      std::vector<long long> out(ext.dim);
      for (int i = 0; i < ext.dim; ++i) out[i] = ((a[i] - b[i]) % m + m) % m;
      return out;
    };
    std::vector<std::vector<long long>> vecs(fs);
    for (int f = 0; f < fs; ++f) vecs[f] = ext.fiber_vector(f * n);
    const std::vector<long long> zero(ext.dim, 0);
    // cap the triple scan; fibers at desk scale stay tiny anyway
    const int wcap = fs * (long long)fs * fs <= 2'000'000 ? fs : 8;
    for (int u = 0; u < fs && rep.fibers.ok; ++u) {
      if (sub(vecs[u], vecs[u]) != zero || sub(vecs[u], zero) != vecs[u]) {
        rep.fibers = {false, "subtraction laws fail at fiber vector " +
                                 std::to_string(u)};
        break;
      }
      for (int v = 0; v < fs && rep.fibers.ok; ++v)
        for (int w = 0; w < wcap; ++w)
          if (sub(sub(vecs[u], vecs[v]), vecs[w]) !=
              sub(sub(vecs[u], vecs[w]), vecs[v])) {
            rep.fibers = {false, "exchange law fails"};
            break;
          }
    }
  }
  return rep;
}

}  // namespace qg
