#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evcom/errors.hpp"
#include "evcom/identity.hpp"
#include "evcom/perm.hpp"
#include "evcom/rational.hpp"
#include "evcom/subgroup.hpp"

namespace evcom {

/// The monomial relation x_id = weight * x_perm, weight an exact power of q.
/// Unscaled (q = 1) runs only ever carry weight 1.
struct ScaledPerm {
  Permutation perm;
  Rational weight;
};

/// Degree raise of a two-term identity: substitutes the product x_i x_{i+1}
/// for x_i (1 <= i <= m), multiplies by a fresh variable on the left (i = 0)
/// or on the right (i = m+1), and returns the resulting permutation of
/// size m+1. Closed form: conjugation by the shift cycles.
Permutation lift_ti(const Permutation& sigma, int i);

/// The prefix/suffix commutation identities available one and two degrees
/// above n when sigma moves both endpoints; empty otherwise. All weights
/// are 1 regardless of q (the scalars cancel in the derivation).
struct LatyshevSeeds {
  std::vector<ScaledPerm> degree_n1;  ///< members of H_{n+1}
  std::vector<ScaledPerm> degree_n2;  ///< members of H_{n+2}
};
LatyshevSeeds latyshev_seed(const TwoTermIdentity& identity);

enum class IdentityFlag {
  Vacuous,            ///< sigma = id
  LongElement,        ///< sigma reverses 1..n
  Transposition1N,    ///< sigma = (1 n)
  FullCycle,          ///< sigma = (1 2 ... n) or its inverse
  SharpnessFamily,    ///< sigma = (1 2)(n-1 n), n >= 4
  FixesEndpoint,      ///< sigma(1) = 1 or sigma(n) = n
};

const char* flag_name(IdentityFlag flag);
std::optional<IdentityFlag> flag_from_name(const std::string& name);

/// Structural annotations for the report; every degree is still computed,
/// the flags never substitute for the computation.
std::vector<IdentityFlag> classify(const TwoTermIdentity& identity);

bool has_flag(const std::vector<IdentityFlag>& flags, IdentityFlag flag);

/// The degree the named families are known to reach (n >= 3, q = 1 only).
std::optional<int> predicted_degree(const TwoTermIdentity& identity,
                                    const std::vector<IdentityFlag>& flags);

struct ChainRow {
  int k = 0;
  std::uint64_t order = 0;
  bool is_full = false;
  bool contains_alternating = false;
  /// Generators that witnessed growth while building H_k, in the order
  /// they were accepted. Empty for scaled (q != 1) runs.
  std::vector<Permutation> witness_generators;
  /// Largest a, b with S(k; a, b) inside H_k (adjacent-transposition scan).
  int symmetric_prefix = 1;
  int symmetric_suffix = 1;
};

struct SaturationOptions {
  /// Default: max(2n-3, n+2) + 1, one degree past the guarantee so the
  /// stability of a fresh success is always re-checked.
  std::optional<int> max_degree;
  bool seed_latyshev = true;
  std::uint64_t enumeration_cap = Subgroup::default_enumeration_cap;
  /// Unscaled runs: keep computing degrees through max_degree instead of
  /// stopping one degree after the first full group. Every post-success
  /// degree is still checked to stay full. Scaled runs stop at collapse
  /// regardless.
  bool full_chain = false;
};

struct SaturationReport {
  std::optional<TwoTermIdentity> identity;
  std::vector<ChainRow> chain;
  std::optional<int> ec_degree;          ///< minimal k with H_k = S_k (q = 1)
  std::optional<int> nilpotency_degree;  ///< minimal k with x_1...x_k = 0 (q != 1)
  std::vector<IdentityFlag> classification;
  bool bound_respected = true;
  bool reached_max_degree = false;
  int max_degree_used = 0;
};

class SaturationCapError : public ResourceError {
public:
  SaturationCapError(const std::string& what, SaturationReport partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const SaturationReport& partial() const { return partial_; }

private:
  SaturationReport partial_;
};

int default_max_degree(int n);

/// Lifts every element of H_k through every T_i (plus the seed identities
/// at degrees n+1 and n+2), closes into the subgroup H_{k+1}, and repeats
/// until the group is full (q = 1), the scaled closure collapses (q != 1),
/// or max_degree is reached. A fresh success is always followed by one more
/// degree to confirm it persists.
SaturationReport saturate(const TwoTermIdentity& identity, SaturationOptions options = {});

/// Saturation of the moved interior of sigma plus the border arithmetic:
/// once the interior reaches its own degree, the bordered rearrangements
/// hold at total degree core_degree + prefix + suffix.
struct GeneralAnalysis {
  BlockDecomposition blocks;
  bool vacuous = false;
  std::optional<SaturationReport> core_report;
  std::optional<int> core_degree;
  std::optional<int> bordered_degree;
};
GeneralAnalysis analyze_general(const TwoTermIdentity& identity, SaturationOptions options = {});

}  // namespace evcom
