#include "qg/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qg/error.hpp"

namespace qg {

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      fail(Errc::OutOfRange, "image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::operator*(const Permutation& then) const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[i] = then.images_[images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation right_translation(const Quasigroup& q, int elem) {
  std::vector<int> im(q.order());
  for (int x = 0; x < q.order(); ++x) im[x] = q.mul(x, elem);
  return Permutation(std::move(im));
}

Permutation left_translation(const Quasigroup& q, int elem) {
  std::vector<int> im(q.order());
  for (int x = 0; x < q.order(); ++x) im[x] = q.mul(elem, x);
  return Permutation(std::move(im));
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermutationGroup generate_group(std::vector<Permutation> generators,
                                size_t cap) {
  if (generators.empty()) fail(Errc::OutOfRange, "no generators");
  const int n = generators.front().degree();
  std::set<Permutation> closure;
  std::deque<Permutation> frontier;
  closure.insert(Permutation::identity(n));
  frontier.push_back(Permutation::identity(n));
  while (!frontier.empty()) {
    Permutation g = frontier.front();
    frontier.pop_front();
    for (const Permutation& s : generators) {
      Permutation next = g * s;
      if (closure.insert(next).second) {
        if (closure.size() > cap)
          fail(Errc::ClosureCapExceeded,
               "closure exceeded cap of " + std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }
  PermutationGroup out;
  out.generators = std::move(generators);
  out.elements.assign(closure.begin(), closure.end());
  return out;
}

PermutationGroup multiplication_group(const Quasigroup& q, size_t cap) {
  std::vector<Permutation> gens;
  gens.reserve(2 * static_cast<size_t>(q.order()));
  for (int e = 0; e < q.order(); ++e) gens.push_back(right_translation(q, e));
  for (int e = 0; e < q.order(); ++e) gens.push_back(left_translation(q, e));
  return generate_group(std::move(gens), cap);
}

}  // namespace qg
