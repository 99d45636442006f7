#include "qg/free_word.hpp"

#include "qg/error.hpp"

namespace qg {

namespace {

void push_reduced(std::vector<FreeWord::Letter>& out,
                  const FreeWord::Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

FreeWord FreeWord::generator(int gen, int exp) {
  if (exp != 1 && exp != -1) fail(Errc::OutOfRange, "exponent must be +-1");
  FreeWord w;
  w.letters_.push_back({gen, exp});
  return w;
}

FreeWord FreeWord::from_letters(const std::vector<Letter>& letters) {
  FreeWord w;
  for (const auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) fail(Errc::OutOfRange, "exponent must be +-1");
    push_reduced(w.letters_, l);
  }
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord w;
  w.letters_ = letters_;
  for (const auto& l : rhs.letters_) push_reduced(w.letters_, l);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

FreeWord r_word(int gen) { return FreeWord::generator(gen, +1); }
FreeWord l_word(int gen) { return FreeWord::generator(gen, -1); }

FreeWord word_of(std::initializer_list<FreeWord::Letter> letters) {
  return FreeWord::from_letters(std::vector<FreeWord::Letter>(letters));
}

int act_on_element(const FreeWord& w, int elem, const Quasigroup& q) {
  int p = elem;
  for (const auto& l : w.letters()) {
    if (l.gen < 0 || l.gen >= q.order())
      fail(Errc::OutOfRange, "letter generator out of range");
    p = l.exp > 0 ? q.mul(p, l.gen) : q.mul(l.gen, p);
  }
  return p;
}

}  // namespace qg
