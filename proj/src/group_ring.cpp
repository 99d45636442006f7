#include "qg/group_ring.hpp"

namespace qg {

RingElement RingElement::unit(const FreeWord& w, long long coeff) {
  RingElement e;
  if (coeff != 0) e.terms_[w] = coeff;
  return e;
}

long long RingElement::coeff(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void RingElement::add_term(const FreeWord& w, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

RingElement RingElement::operator*(const RingElement& o) const {
  RingElement out;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) out.add_term(w1 * w2, c1 * c2);
  return out;
}

RingElement RingElement::scaled(long long c) const {
  RingElement out;
  if (c == 0) return out;
  for (const auto& [w, k] : terms_) out.terms_[w] = k * c;
  return out;
}

}  // namespace qg
