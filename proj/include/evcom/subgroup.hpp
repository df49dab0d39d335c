#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evcom/perm.hpp"

namespace evcom {

std::uint64_t factorial(int k);

/// A finitely generated subgroup of S_k backed by a stabilizer chain with
/// base 1, 2, ..., k. Construction and add_generator are single-threaded;
/// all const queries are safe to run concurrently once construction is done.
///
/// Enumeration order is lexicographic by one-line form, so runs that
/// consume the element stream are reproducible bit-for-bit.
class Subgroup {
public:
  static constexpr std::uint64_t default_enumeration_cap = 5'000'000;

  explicit Subgroup(int degree);
  Subgroup(int degree, const std::vector<Permutation>& generators);

  int degree() const { return degree_; }

  std::uint64_t order() const;
  bool is_full() const { return order() == factorial(degree_); }

  bool contains(const Permutation& p) const;

  /// True iff every even permutation is a member (exact: checks the
  /// 3-cycles (1 2 t), which generate A_k). Vacuously true for k <= 2.
  bool contains_alternating() const;

  /// Adds g to the generating set; returns true iff the group grew.
  bool add_generator(const Permutation& g);

  /// The supplied generators that actually grew the group, in input order.
  const std::vector<Permutation>& generators() const { return accepted_; }

  /// Every element exactly once, sorted lexicographically by one-line form.
  /// Throws ResourceError when order() exceeds the cap.
  std::vector<Permutation> elements(std::uint64_t cap = default_enumeration_cap) const;

private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;  // fix all earlier base points
    std::vector<int> orbit;         // BFS discovery order, orbit[0] == base
    std::vector<std::optional<Permutation>> transversal;  // by point - 1
  };

  void rebuild_orbit(int level);
  void complete_from(int level);
  Permutation sift_from(int level, Permutation g) const;

  int degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> accepted_;
};

}  // namespace evcom
