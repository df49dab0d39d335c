#include "evcom/saturate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace evcom {

Permutation lift_ti(const Permutation& sigma, int i) {
  const int m = sigma.size();
  if (i < 0 || i > m + 1) {
    throw InputError("lift index " + std::to_string(i) + " out of range 0.." +
                     std::to_string(m + 1));
  }
  if (i == 0) {
    std::vector<int> images(static_cast<std::size_t>(m) + 1);
    images[0] = 1;
    for (int t = 1; t <= m; ++t) images[static_cast<std::size_t>(t)] = sigma(t) + 1;
    return Permutation(std::move(images));
  }
  if (i == m + 1) return extend(sigma, m + 1);
  const Permutation extended = extend(sigma, m + 1);
  const int j = inverse(sigma)(i);
  return compose(hat_cycle(i + 1, m + 1),
                 compose(extended, inverse(hat_cycle(j + 1, m + 1))));
}

LatyshevSeeds latyshev_seed(const TwoTermIdentity& identity) {
  LatyshevSeeds out;
  const int n = identity.n;
  const Permutation& sigma = identity.sigma;
  const int i = sigma(1);  // first letter of the sigma word
  const int j = sigma(n);  // last letter
  if (i == 1 || j == n) return out;
  std::vector<int> prefix(static_cast<std::size_t>(i));
  std::iota(prefix.begin(), prefix.end(), 1);
  std::vector<int> suffix(static_cast<std::size_t>(n + 1 - j));
  std::iota(suffix.begin(), suffix.end(), j + 1);
  out.degree_n1.push_back({from_cycle(n + 1, prefix), Rational(1)});
  out.degree_n1.push_back({from_cycle(n + 1, suffix), Rational(1)});
  out.degree_n2.push_back({transposition(n + 2, 1, 2), Rational(1)});
  out.degree_n2.push_back({transposition(n + 2, n + 1, n + 2), Rational(1)});
  return out;
}

const char* flag_name(IdentityFlag flag) {
  switch (flag) {
    case IdentityFlag::Vacuous: return "vacuous";
    case IdentityFlag::LongElement: return "long_element";
    case IdentityFlag::Transposition1N: return "transposition_1n";
    case IdentityFlag::FullCycle: return "full_cycle";
    case IdentityFlag::SharpnessFamily: return "sharpness_family";
    case IdentityFlag::FixesEndpoint: return "fixes_endpoint";
  }
  return "?";
}

std::optional<IdentityFlag> flag_from_name(const std::string& name) {
  for (IdentityFlag f : {IdentityFlag::Vacuous, IdentityFlag::LongElement,
                         IdentityFlag::Transposition1N, IdentityFlag::FullCycle,
                         IdentityFlag::SharpnessFamily, IdentityFlag::FixesEndpoint}) {
    if (name == flag_name(f)) return f;
  }
  return std::nullopt;
}

std::vector<IdentityFlag> classify(const TwoTermIdentity& identity) {
  const Permutation& s = identity.sigma;
  const int n = identity.n;
  std::vector<IdentityFlag> flags;
  if (s.is_identity()) flags.push_back(IdentityFlag::Vacuous);

  bool longest = true;
  for (int t = 1; t <= n; ++t) longest = longest && s(t) == n + 1 - t;
  if (longest && n >= 2) flags.push_back(IdentityFlag::LongElement);

  if (n >= 2 && s == transposition(n, 1, n)) flags.push_back(IdentityFlag::Transposition1N);

  if (n >= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    const Permutation cycle = from_cycle(n, all);
    if (s == cycle || s == inverse(cycle)) flags.push_back(IdentityFlag::FullCycle);
  }

  if (n >= 4) {
    const Permutation sharp = compose(transposition(n, 1, 2), transposition(n, n - 1, n));
    if (s == sharp) flags.push_back(IdentityFlag::SharpnessFamily);
  }

  if (s(1) == 1 || s(n) == n) flags.push_back(IdentityFlag::FixesEndpoint);
  return flags;
}

bool has_flag(const std::vector<IdentityFlag>& flags, IdentityFlag flag) {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

std::optional<int> predicted_degree(const TwoTermIdentity& identity,
                                    const std::vector<IdentityFlag>& flags) {
  if (!identity.unscaled() || identity.n < 3) return std::nullopt;
  if (has_flag(flags, IdentityFlag::Vacuous) || has_flag(flags, IdentityFlag::FixesEndpoint)) {
    return std::nullopt;
  }
  const int n = identity.n;
  std::vector<int> predictions;
  if (has_flag(flags, IdentityFlag::LongElement)) {
    predictions.push_back(n % 4 == 1 ? n + 2 : n + 1);
  }
  if (has_flag(flags, IdentityFlag::Transposition1N)) predictions.push_back(n + 1);
  if (has_flag(flags, IdentityFlag::FullCycle)) predictions.push_back(n + 1);
  if (has_flag(flags, IdentityFlag::SharpnessFamily)) predictions.push_back(2 * n - 3);
  if (predictions.empty()) return std::nullopt;
  for (int p : predictions) {
    if (p != predictions.front()) {
      throw std::logic_error("conflicting family predictions for one identity");
    }
  }
  return predictions.front();
}

int default_max_degree(int n) { return std::max(2 * n - 3, n + 2) + 1; }

namespace {

// Largest a with all of (1 2), ..., (a-1 a) in the group, and the mirror
// count from the top; together the S(k;a,b) profile of H_k.
std::pair<int, int> symmetric_profile(const Subgroup& group) {
  const int k = group.degree();
  int a = 1;
  while (a < k && group.contains(transposition(k, a, a + 1))) ++a;
  int b = 1;
  while (b < k && group.contains(transposition(k, k - b, k - b + 1))) ++b;
  return {a, b};
}

ChainRow make_row(const Subgroup& group) {
  ChainRow row;
  row.k = group.degree();
  row.order = group.order();
  row.is_full = group.is_full();
  row.contains_alternating = group.contains_alternating();
  row.witness_generators = group.generators();
  auto [a, b] = symmetric_profile(group);
  row.symmetric_prefix = a;
  row.symmetric_suffix = b;
  return row;
}

void finish_report(SaturationReport& report) {
  const TwoTermIdentity& identity = *report.identity;
  const int n = identity.n;
  // The universal guarantee applies to unscaled identities moving both
  // endpoints, n >= 3: full by degree n+1 (n <= 4) respectively 2n-3.
  const bool applicable = identity.unscaled() && n >= 3 &&
                          !has_flag(report.classification, IdentityFlag::FixesEndpoint) &&
                          !has_flag(report.classification, IdentityFlag::Vacuous);
  if (!applicable) {
    report.bound_respected = true;
    return;
  }
  const int bound = n >= 5 ? 2 * n - 3 : n + 1;
  if (report.ec_degree) {
    report.bound_respected = *report.ec_degree <= bound;
  } else {
    report.bound_respected = report.max_degree_used < bound;
  }
}

SaturationReport saturate_unscaled(const TwoTermIdentity& identity,
                                   const SaturationOptions& options, int max_degree) {
  const int n = identity.n;
  // The vacuous relation has no consequence that moves a letter; its k = 1
  // group is formally full but says nothing about higher degrees, so it
  // never claims a success degree.
  const bool vacuous = identity.sigma.is_identity();
  SaturationReport report;
  report.identity = identity;
  report.classification = classify(identity);
  report.max_degree_used = max_degree;

  Subgroup group(n);
  if (!vacuous) group.add_generator(identity.sigma);
  report.chain.push_back(make_row(group));
  if (!vacuous && report.chain.back().is_full) report.ec_degree = n;

  const LatyshevSeeds seeds =
      options.seed_latyshev ? latyshev_seed(identity) : LatyshevSeeds{};

  for (int k = n; k < max_degree; ++k) {
    Subgroup next(k + 1);
    // Seeds first, then the lifts of every element in (element, i) order;
    // stop as soon as the group is visibly all of S_{k+1}.
    const std::vector<ScaledPerm>* seed_list = nullptr;
    if (k + 1 == n + 1) seed_list = &seeds.degree_n1;
    if (k + 1 == n + 2) seed_list = &seeds.degree_n2;
    if (seed_list) {
      for (const auto& seed : *seed_list) {
        if (next.is_full()) break;
        next.add_generator(seed.perm);
      }
    }
    if (!next.is_full()) {
      std::vector<Permutation> members;
      try {
        members = group.elements(options.enumeration_cap);
      } catch (const ResourceError& err) {
        finish_report(report);
        throw SaturationCapError(std::string(err.what()) + " while lifting degree " +
                                     std::to_string(k),
                                 std::move(report));
      }
      for (const auto& g : members) {
        for (int i = 0; i <= k + 1 && !next.is_full(); ++i) {
          next.add_generator(lift_ti(g, i));
        }
        if (next.is_full()) break;
      }
    }
    report.chain.push_back(make_row(next));
    group = std::move(next);
    if (vacuous) continue;

    if (report.ec_degree) {
      if (!report.chain.back().is_full) {
        throw std::logic_error("saturation lost fullness one degree above " +
                               std::to_string(*report.ec_degree));
      }
      if (!options.full_chain) break;  // the success was confirmed once
    } else if (report.chain.back().is_full) {
      report.ec_degree = k + 1;  // keep going for the confirmation degree
    }
  }
  report.reached_max_degree = !report.ec_degree && report.chain.back().k == max_degree;
  finish_report(report);
  return report;
}

// Closure of scaled monomial relations under products, tracked as a
// permutation -> weight table. Two derivations of the same permutation with
// different weights force (1 - c) x = 0, i.e. every monomial of this degree
// vanishes; the closure is then "dead".
class ScaledClosure {
public:
  ScaledClosure(int degree, const std::vector<ScaledPerm>& gens, std::uint64_t cap)
      : degree_(degree) {
    table_.emplace(Permutation::identity(degree), Rational(1));
    std::vector<const Permutation*> queue;
    queue.push_back(&table_.begin()->first);
    for (std::size_t head = 0; head < queue.size() && !dead_; ++head) {
      const Permutation current = *queue[head];
      const Rational weight = table_.at(current);
      for (const auto& gen : gens) {
        Permutation product = compose(current, gen.perm);
        Rational w = weight * gen.weight;
        auto [it, inserted] = table_.emplace(std::move(product), w);
        if (inserted) {
          if (table_.size() > cap) {
            throw ResourceError("enumeration cap exceeded: scaled closure above " +
                                std::to_string(cap) + " elements");
          }
          queue.push_back(&it->first);
        } else if (it->second != w) {
          dead_ = true;
          break;
        }
      }
    }
  }

  bool dead() const { return dead_; }
  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& table() const { return table_; }

  std::uint64_t weight_one_order() const {
    std::uint64_t count = 0;
    for (const auto& [perm, w] : table_) {
      if (w == 1) ++count;
    }
    return count;
  }

  bool weight_one_contains(const Permutation& p) const {
    auto it = table_.find(p);
    return it != table_.end() && it->second == 1;
  }

private:
  int degree_;
  std::map<Permutation, Rational> table_;
  bool dead_ = false;
};

ChainRow make_scaled_row(const ScaledClosure& closure) {
  ChainRow row;
  row.k = closure.degree();
  const int k = row.k;
  if (closure.dead()) {
    // Every monomial of this degree vanishes, so all of them are equal.
    row.order = factorial(k);
    row.is_full = true;
    row.contains_alternating = true;
    row.symmetric_prefix = k;
    row.symmetric_suffix = k;
    return row;
  }
  row.order = closure.weight_one_order();
  row.is_full = row.order == factorial(k);
  row.contains_alternating = k <= 2;
  if (k >= 3) {
    row.contains_alternating = true;
    for (int t = 3; t <= k && row.contains_alternating; ++t) {
      row.contains_alternating = closure.weight_one_contains(from_cycle(k, {1, 2, t}));
    }
  }
  int a = 1;
  while (a < k && closure.weight_one_contains(transposition(k, a, a + 1))) ++a;
  int b = 1;
  while (b < k && closure.weight_one_contains(transposition(k, k - b, k - b + 1))) ++b;
  row.symmetric_prefix = a;
  row.symmetric_suffix = b;
  return row;
}

SaturationReport saturate_scaled(const TwoTermIdentity& identity,
                                 const SaturationOptions& options, int max_degree) {
  const int n = identity.n;
  SaturationReport report;
  report.identity = identity;
  report.classification = classify(identity);
  report.max_degree_used = max_degree;

  const LatyshevSeeds seeds =
      options.seed_latyshev ? latyshev_seed(identity) : LatyshevSeeds{};

  std::vector<ScaledPerm> gens;
  gens.push_back({identity.sigma, identity.q});
  for (int k = n;; ++k) {
    std::optional<ScaledClosure> closure;
    try {
      closure.emplace(k, gens, options.enumeration_cap);
    } catch (const ResourceError& err) {
      finish_report(report);
      throw SaturationCapError(std::string(err.what()) + " at degree " + std::to_string(k),
                               std::move(report));
    }
    report.chain.push_back(make_scaled_row(*closure));
    if (closure->dead()) {
      report.nilpotency_degree = k;
      break;
    }
    if (k == max_degree) {
      report.reached_max_degree = true;
      break;
    }
    std::vector<ScaledPerm> next;
    if (k + 1 == n + 1) next = seeds.degree_n1;
    if (k + 1 == n + 2) next = seeds.degree_n2;
    for (const auto& [perm, weight] : closure->table()) {
      for (int i = 0; i <= k + 1; ++i) {
        next.push_back({lift_ti(perm, i), weight});
      }
    }
    gens = std::move(next);
  }
  finish_report(report);
  return report;
}

}  // namespace

SaturationReport saturate(const TwoTermIdentity& identity, SaturationOptions options) {
  const int n = identity.n;
  const int max_degree = options.max_degree.value_or(default_max_degree(n));
  if (max_degree < n) {
    throw InputError("max degree " + std::to_string(max_degree) +
                     " below the identity degree " + std::to_string(n));
  }
  if (identity.unscaled()) return saturate_unscaled(identity, options, max_degree);
  return saturate_scaled(identity, options, max_degree);
}

GeneralAnalysis analyze_general(const TwoTermIdentity& identity, SaturationOptions options) {
  GeneralAnalysis out;
  out.blocks = block_decompose(identity.sigma);
  if (!out.blocks.core) {
    out.vacuous = true;
    return out;
  }
  TwoTermIdentity core(*out.blocks.core, identity.q);
  out.core_report = saturate(core, options);
  out.core_degree = identity.unscaled() ? out.core_report->ec_degree
                                        : out.core_report->nilpotency_degree;
  if (out.core_degree) {
    out.bordered_degree =
        *out.core_degree + out.blocks.fixed_prefix + (identity.n - out.blocks.moved_end);
  }
  return out;
}

}  // namespace evcom
