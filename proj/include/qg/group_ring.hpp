#pragma once

#include <map>

#include "qg/free_word.hpp"

namespace qg {

// Integer group-ring element over free words: a finite formal sum of
// words with nonzero integer coefficients.  Words multiply by
// concatenation followed by free reduction.
class RingElement {
 public:
  RingElement() = default;  // zero
  static RingElement unit(const FreeWord& w, long long coeff = 1);
  static RingElement one() { return unit(FreeWord()); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<FreeWord, long long>& terms() const { return terms_; }
  long long coeff(const FreeWord& w) const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement scaled(long long c) const;

  bool operator==(const RingElement&) const = default;

 private:
  void add_term(const FreeWord& w, long long c);
  std::map<FreeWord, long long> terms_;
};

}  // namespace qg
