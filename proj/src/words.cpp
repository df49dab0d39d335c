#include "evcom/words.hpp"

#include <sstream>

#include "evcom/errors.hpp"

namespace evcom {

Word word_of(const Permutation& p) { return p.images(); }

Permutation perm_of_word(const Word& w) { return Permutation(w); }

std::string render_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p > 0) out << ' ';
    out << 'x' << w[p];
  }
  return out.str();
}

Word lift_word(const Word& w, int m, int i) {
  if (i < 0 || i > m + 1) {
    throw InputError("lift index " + std::to_string(i) + " out of range 0.." +
                     std::to_string(m + 1));
  }
  Word out;
  out.reserve(w.size() + 1);
  if (i == 0) {
    out.push_back(1);
    for (int v : w) out.push_back(v + 1);
    return out;
  }
  if (i == m + 1) {
    out = w;
    out.push_back(m + 1);
    return out;
  }
  for (int v : w) {
    if (v < i) {
      out.push_back(v);
    } else if (v == i) {
      out.push_back(i);
      out.push_back(i + 1);
    } else {
      out.push_back(v + 1);
    }
  }
  return out;
}

}  // namespace evcom
