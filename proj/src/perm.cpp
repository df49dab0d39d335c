#include "evcom/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "evcom/errors.hpp"

namespace evcom {

Permutation Permutation::identity(int k) {
  if (k < 1) throw InputError("permutation size must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = size();
  if (k < 1) throw InputError("permutation size must be at least 1");
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int t = 1; t <= k; ++t) {
    const int v = images_[static_cast<std::size_t>(t) - 1];
    if (v < 1 || v > k) {
      throw InputError("image " + std::to_string(v) + " at position " + std::to_string(t) +
                       " out of range 1.." + std::to_string(k));
    }
    if (seen[static_cast<std::size_t>(v) - 1]) {
      throw InputError("repeated image " + std::to_string(v) + " at position " +
                       std::to_string(t));
    }
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int t = 1; t <= size(); ++t) {
    if ((*this)(t) != t) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw InputError("compose: size mismatch (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int t = 1; t <= a.size(); ++t) {
    images[static_cast<std::size_t>(t) - 1] = a(b(t));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& a) {
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int t = 1; t <= a.size(); ++t) {
    images[static_cast<std::size_t>(a(t)) - 1] = t;
  }
  return Permutation(std::move(images));
}

int parity(const Permutation& a) {
  // sign = (-1)^(k - number of cycles)
  const int k = a.size();
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  int cycles = 0;
  for (int t = 1; t <= k; ++t) {
    if (seen[static_cast<std::size_t>(t) - 1]) continue;
    ++cycles;
    int cur = t;
    while (!seen[static_cast<std::size_t>(cur) - 1]) {
      seen[static_cast<std::size_t>(cur) - 1] = 1;
      cur = a(cur);
    }
  }
  return ((k - cycles) % 2 == 0) ? 1 : -1;
}

Permutation hat_cycle(int i, int k) {
  if (i < 1 || i > k) {
    throw InputError("hat_cycle: i = " + std::to_string(i) + " out of range 1.." +
                     std::to_string(k));
  }
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  for (int t = i; t < k; ++t) images[static_cast<std::size_t>(t) - 1] = t + 1;
  images[static_cast<std::size_t>(k) - 1] = i;
  return Permutation(std::move(images));
}

Permutation from_cycle(int k, const std::vector<int>& points) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  if (points.size() < 2) return Permutation(std::move(images));
  for (std::size_t p = 0; p < points.size(); ++p) {
    const int from = points[p];
    const int to = points[(p + 1) % points.size()];
    if (from < 1 || from > k) {
      throw InputError("cycle point " + std::to_string(from) + " out of range 1.." +
                       std::to_string(k));
    }
    images[static_cast<std::size_t>(from) - 1] = to;
  }
  return Permutation(std::move(images));
}

Permutation transposition(int k, int a, int b) { return from_cycle(k, {a, b}); }

Permutation extend(const Permutation& p, int new_size) {
  if (new_size < p.size()) {
    throw InputError("extend: new size " + std::to_string(new_size) + " below current " +
                     std::to_string(p.size()));
  }
  std::vector<int> images = p.images();
  images.reserve(static_cast<std::size_t>(new_size));
  for (int t = p.size() + 1; t <= new_size; ++t) images.push_back(t);
  return Permutation(std::move(images));
}

bool in_s_nab(const Permutation& t, int a, int b) {
  const int k = t.size();
  if (a < 0 || b < 0 || a > k || b > k) {
    throw InputError("in_s_nab: block sizes must lie in 0.." + std::to_string(k));
  }
  if (a + b > k) return true;
  for (int x = 1; x <= a; ++x) {
    if (t(x) > a) return false;
  }
  for (int x = a + 1; x <= k - b; ++x) {
    if (t(x) != x) return false;
  }
  return true;  // the last block is preserved once the first two hold
}

BlockDecomposition block_decompose(const Permutation& sigma) {
  BlockDecomposition out;
  if (sigma.is_identity()) return out;  // (0, 0, no core) by convention
  const int n = sigma.size();
  int i = 0;
  while (sigma(i + 1) == i + 1) ++i;
  int j = n;
  while (sigma(j) == j) --j;
  std::vector<int> core(static_cast<std::size_t>(j - i));
  for (int t = i + 1; t <= j; ++t) {
    core[static_cast<std::size_t>(t - i) - 1] = sigma(t) - i;
  }
  out.fixed_prefix = i;
  out.moved_end = j;
  out.core = Permutation(std::move(core));
  return out;
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

int parse_int(const std::string& s, std::size_t& pos) {
  skip_ws(s, pos);
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) {
    throw InputError("expected a number at position " + std::to_string(start + 1));
  }
  return std::stoi(s.substr(start, pos - start));
}

Permutation parse_oneline(const std::string& text, std::optional<int> k) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  ++pos;  // '['
  std::vector<int> images;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] != ']') {
    for (;;) {
      images.push_back(parse_int(text, pos));
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  if (pos >= text.size() || text[pos] != ']') {
    throw InputError("expected ']' at position " + std::to_string(pos + 1));
  }
  ++pos;
  skip_ws(text, pos);
  if (pos != text.size()) {
    throw InputError("trailing characters at position " + std::to_string(pos + 1));
  }
  if (k && static_cast<int>(images.size()) != *k) {
    throw InputError("expected " + std::to_string(*k) + " images, got " +
                     std::to_string(images.size()));
  }
  return Permutation(std::move(images));
}

Permutation parse_cycles(const std::string& text, std::optional<int> k) {
  if (!k) throw InputError("cycle notation requires an explicit size k");
  std::vector<int> images(static_cast<std::size_t>(*k));
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> used(static_cast<std::size_t>(*k), 0);
  std::size_t pos = 0;
  skip_ws(text, pos);
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw InputError("expected '(' at position " + std::to_string(pos + 1));
    }
    ++pos;
    std::vector<int> cycle;
    skip_ws(text, pos);
    while (pos < text.size() && text[pos] != ')') {
      const std::size_t at = pos;
      const int v = parse_int(text, pos);
      if (v < 1 || v > *k) {
        throw InputError("letter " + std::to_string(v) + " at position " + std::to_string(at + 1) +
                         " out of range 1.." + std::to_string(*k));
      }
      if (used[static_cast<std::size_t>(v) - 1]) {
        throw InputError("repeated letter " + std::to_string(v) + " at position " +
                         std::to_string(at + 1));
      }
      used[static_cast<std::size_t>(v) - 1] = 1;
      cycle.push_back(v);
      skip_ws(text, pos);
    }
    if (pos >= text.size()) {
      throw InputError("unterminated cycle at position " + std::to_string(pos + 1));
    }
    ++pos;  // ')'
    if (cycle.size() > 1) {
      for (std::size_t p = 0; p < cycle.size(); ++p) {
        images[static_cast<std::size_t>(cycle[p]) - 1] = cycle[(p + 1) % cycle.size()];
      }
    }
    skip_ws(text, pos);
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation parse_perm(const std::string& text, std::optional<int> k) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size()) throw InputError("empty permutation");
  if (text[pos] == '[') return parse_oneline(text, k);
  if (text[pos] == '(') return parse_cycles(text, k);
  throw InputError("expected '[' or '(' at position " + std::to_string(pos + 1));
}

std::string format_oneline(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (int t = 1; t <= p.size(); ++t) {
    if (t > 1) out << ',';
    out << p(t);
  }
  out << ']';
  return out.str();
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> seen(static_cast<std::size_t>(p.size()), 0);
  for (int t = 1; t <= p.size(); ++t) {
    if (seen[static_cast<std::size_t>(t) - 1] || p(t) == t) continue;
    out << '(' << t;
    seen[static_cast<std::size_t>(t) - 1] = 1;
    for (int cur = p(t); cur != t; cur = p(cur)) {
      out << ' ' << cur;
      seen[static_cast<std::size_t>(cur) - 1] = 1;
    }
    out << ')';
  }
  if (out.str().empty()) return "()";
  return out.str();
}

std::string format_perm(const Permutation& p, PermStyle style) {
  return style == PermStyle::OneLine ? format_oneline(p) : format_cycles(p);
}

}  // namespace evcom
