#pragma once

#include <compare>
#include <vector>

#include "qg/quasigroup.hpp"

namespace qg {

// Freely reduced word over the right-translation generators R(q), q an
// element index.  The empty word is the group identity.  Left
// translations never appear as letters: in the semisymmetric setting
// L(q) = R(q)^-1, so a letter is just a generator with exponent +-1.
class FreeWord {
 public:
  struct Letter {
    int gen;
    int exp;  // +1 or -1
    auto operator<=>(const Letter&) const = default;
  };

  FreeWord() = default;
  static FreeWord generator(int gen, int exp = +1);
  static FreeWord from_letters(const std::vector<Letter>& letters);

  bool is_identity() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  FreeWord operator*(const FreeWord& rhs) const;  // concat + free reduction
  FreeWord inverse() const;

  bool operator==(const FreeWord&) const = default;
  // Total order (length, then letters) used for deterministic printing
  // and as the group-ring key order.
  auto operator<=>(const FreeWord& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_ <=> o.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

// Convenience spellings for words built from translations.
FreeWord r_word(int gen);                 // R(q)
FreeWord l_word(int gen);                 // L(q) = R(q)^-1
FreeWord word_of(std::initializer_list<FreeWord::Letter> letters);

// Evaluates the word through the multiplication table: R(x) sends
// q -> q*x and R(x)^-1 = L(x) sends q -> x*q.  Letters apply left to
// right.  Requires a semisymmetric quasigroup for the inverse-letter
// reading to be the table division.
int act_on_element(const FreeWord& w, int elem, const Quasigroup& q);

}  // namespace qg
