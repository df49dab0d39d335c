#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace evcom {

/// A permutation of {1..k} stored in one-line form: images()[t-1] is the
/// image of t. Points and images are 1-based everywhere in the public API,
/// matching the notation used by the CLI and the reports. A permutation of
/// size k doubles as the multilinear monomial x_{tau(1)} ... x_{tau(k)}.
class Permutation {
public:
  static Permutation identity(int k);

  /// One-line form; validates that images is a bijection on {1..k}.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }

  /// Image of a 1-based point.
  int operator()(int point) const { return images_[static_cast<std::size_t>(point) - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

/// (a . b)(t) = a(b(t)). Under this convention the product of two monomial
/// identities x_id = x_a and x_id = x_b is x_id = x_{compose(a,b)}.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

/// +1 for even permutations, -1 for odd; multiplicative under compose.
int parity(const Permutation& a);

/// The cycle (i, i+1, ..., k) on {1..k}; i == k gives the identity.
Permutation hat_cycle(int i, int k);

/// Single cycle through the given points of {1..k}, everything else fixed.
Permutation from_cycle(int k, const std::vector<int>& points);

Permutation transposition(int k, int a, int b);

/// Same permutation on {1..new_size}, the added top points fixed.
Permutation extend(const Permutation& p, int new_size);

/// Membership in S(k; a, b): t maps {1..a} onto itself, maps the last b
/// letters onto themselves, and fixes every letter strictly between.
/// When a + b > k the subgroup is all of S_k and every t is a member.
bool in_s_nab(const Permutation& t, int a, int b);

/// sigma written as: identity on {1..i}, a moved interior on {i+1..j}
/// relabelled to {1..j-i}, identity on {j+1..n}. The core never fixes its
/// own first or last letter. sigma == id is reported as (0, 0, no core).
struct BlockDecomposition {
  int fixed_prefix = 0;             ///< i
  int moved_end = 0;                ///< j
  std::optional<Permutation> core;  ///< absent iff sigma == id

  int core_size() const { return moved_end - fixed_prefix; }
};

BlockDecomposition block_decompose(const Permutation& sigma);

enum class PermStyle { OneLine, Cycles };

/// Parses "[3,2,1]" (one-line) or "(1 3)(2 5)" (disjoint cycles, entries
/// whitespace-separated). Cycle form requires the ambient size k, because
/// fixed trailing points are invisible in cycle notation. "()" is the
/// identity. Errors carry the offending value and its position.
Permutation parse_perm(const std::string& text, std::optional<int> k = std::nullopt);

std::string format_perm(const Permutation& p, PermStyle style);
std::string format_oneline(const Permutation& p);
std::string format_cycles(const Permutation& p);

}  // namespace evcom
