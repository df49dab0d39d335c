#pragma once

#include <cstdint>
#include <vector>

#include "evcom/identity.hpp"
#include "evcom/perm.hpp"
#include "evcom/rational.hpp"

namespace evcom {

/// Ground truth for the degree-k consequences of a two-term identity,
/// built from first principles: one node per monomial of degree k, one
/// edge per block substitution into the identity, weights multiplied
/// along paths. Independent of the subgroup machinery by construction.
///
/// Two monomials in one live component with potentials p_a, p_b satisfy
/// x_a = (p_a / p_b) x_b; a component is dead when some derivation cycle
/// carries a weight other than 1, which forces every monomial in it to 0.
///
/// Construction is single-threaded; a built graph is immutable and safe
/// to query concurrently.
class EquivalenceGraph {
public:
  struct BuildOptions {
    int node_cap_k = 8;        ///< largest admissible k (k! nodes); 9 at most
    bool reverse_edges = false;  ///< audit knob: insert edges in reverse order
  };

  static EquivalenceGraph build(const TwoTermIdentity& identity, int k,
                                BuildOptions options = {});

  int degree() const { return k_; }
  std::uint64_t node_count() const { return static_cast<std::uint64_t>(root_.size()); }
  bool scaled() const { return !pot_.empty(); }

  struct Verdict {
    enum class Kind { Scalar, Zero, Absent } kind;
    Rational scalar;  ///< meaningful only for Kind::Scalar
  };

  /// The scalar c with x_a = c x_b when both live in one live component;
  /// Zero when their shared component is dead; Absent otherwise.
  Verdict equivalent(const Permutation& a, const Permutation& b) const;

  /// All tau with x_1...x_k = x_tau a consequence, sorted lexicographically.
  /// Empty when the identity's own component is dead (everything vanishes).
  std::vector<Permutation> identity_group() const;

  /// True iff x_1...x_k = 0 is a consequence.
  bool identity_vanishes() const;

  struct Component {
    Permutation representative;  ///< lex-least member
    std::uint64_t size = 0;
    bool dead = false;
  };
  /// Census sorted by representative.
  std::vector<Component> components() const;

private:
  EquivalenceGraph() = default;

  int k_ = 0;
  std::vector<std::uint32_t> root_;  ///< final root per node
  std::vector<Rational> pot_;        ///< node potential vs root; empty when q = 1
  std::vector<char> dead_;           ///< per node, via its root
};

/// Minimal-degree vanishing check: builds the degree-k graph and asks
/// whether the identity monomial's component is dead.
bool nilpotent_at(const TwoTermIdentity& identity, int k,
                  EquivalenceGraph::BuildOptions options = {});

}  // namespace evcom
