#include "evcom/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "evcom/errors.hpp"
#include "evcom/subgroup.hpp"

namespace evcom {

namespace {

constexpr int kHardNodeCap = 9;  // 9! = 362880 nodes

// Lexicographic rank of a one-line word among all permutations of {1..k}.
std::uint32_t rank_word(const std::vector<int>& word) {
  const int k = static_cast<int>(word.size());
  std::uint32_t rank = 0;
  std::uint64_t suffix = factorial(k - 1);
  std::array<char, 16> used{};
  for (int pos = 0; pos < k; ++pos) {
    const int v = word[static_cast<std::size_t>(pos)];
    int smaller = 0;
    for (int t = 1; t < v; ++t) smaller += used[static_cast<std::size_t>(t)] ? 0 : 1;
    rank += static_cast<std::uint32_t>(static_cast<std::uint64_t>(smaller) * suffix);
    used[static_cast<std::size_t>(v)] = 1;
    if (pos + 1 < k) suffix /= static_cast<std::uint64_t>(k - 1 - pos);
  }
  return rank;
}

std::vector<int> unrank_word(std::uint32_t rank, int k) {
  std::vector<int> pool(static_cast<std::size_t>(k));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(k));
  std::uint64_t suffix = factorial(k - 1);
  std::uint64_t r = rank;
  for (int pos = 0; pos < k; ++pos) {
    const auto idx = static_cast<std::size_t>(r / suffix);
    r %= suffix;
    word.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    if (pos + 1 < k) suffix /= static_cast<std::uint64_t>(k - 1 - pos);
  }
  return word;
}

// All (offset, block lengths) with offset >= 0, each of the n lengths >= 1
// and a nonnegative tail, in lexicographic order.
struct Split {
  int offset;
  std::vector<int> lengths;
};

std::vector<Split> enumerate_splits(int k, int n) {
  std::vector<Split> out;
  std::vector<int> lengths(static_cast<std::size_t>(n), 1);
  for (int offset = 0; offset + n <= k; ++offset) {
    const int budget = k - offset;  // for the n blocks plus the tail
    std::fill(lengths.begin(), lengths.end(), 1);
    for (;;) {
      int used = std::accumulate(lengths.begin(), lengths.end(), 0);
      if (used <= budget) out.push_back({offset, lengths});
      // next composition in lex order, bounded by the budget
      int pos = n - 1;
      while (pos >= 0) {
        ++lengths[static_cast<std::size_t>(pos)];
        used = std::accumulate(lengths.begin(), lengths.end(), 0);
        if (used <= budget) break;
        lengths[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

// Weighted union-find used only during construction.
class Forest {
public:
  Forest(std::uint32_t nodes, bool weighted)
      : parent_(nodes), size_(nodes, 1), dead_(nodes, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
    if (weighted) pot_.assign(nodes, Rational(1));
  }

  bool weighted() const { return !pot_.empty(); }

  std::uint32_t find(std::uint32_t x) {
    if (!weighted()) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
      }
      return x;
    }
    path_.clear();
    while (parent_[x] != x) {
      path_.push_back(x);
      x = parent_[x];
    }
    Rational acc(1);
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      acc = pot_[*it] * acc;
      pot_[*it] = acc;
      parent_[*it] = x;
    }
    return x;
  }

  Rational potential(std::uint32_t x) {
    const std::uint32_t r = find(x);
    return x == r ? Rational(1) : pot_[x];
  }

  // value(a) = c * value(b)
  void unite(std::uint32_t a, std::uint32_t b, const Rational& c) {
    if (!weighted()) {
      std::uint32_t ra = find(a), rb = find(b);
      if (ra == rb) return;
      if (size_[ra] < size_[rb]) std::swap(ra, rb);
      parent_[rb] = ra;
      size_[ra] += size_[rb];
      return;
    }
    const std::uint32_t ra = find(a);
    const Rational pa = potential(a);
    const std::uint32_t rb = find(b);
    const Rational pb = potential(b);
    if (ra == rb) {
      if (pa != c * pb) dead_[ra] = 1;
      return;
    }
    if (size_[ra] >= size_[rb]) {
      parent_[rb] = ra;
      pot_[rb] = pa / (c * pb);
      size_[ra] += size_[rb];
      dead_[ra] |= dead_[rb];
    } else {
      parent_[ra] = rb;
      pot_[ra] = (c * pb) / pa;
      size_[rb] += size_[ra];
      dead_[rb] |= dead_[ra];
    }
  }

  bool root_dead(std::uint32_t root) const { return dead_[root] != 0; }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<char> dead_;
  std::vector<Rational> pot_;
  std::vector<std::uint32_t> path_;
};

}  // namespace

EquivalenceGraph EquivalenceGraph::build(const TwoTermIdentity& identity, int k,
                                         BuildOptions options) {
  const int n = identity.n;
  if (n > k) {
    throw InputError("oracle degree k = " + std::to_string(k) +
                     " below the identity degree n = " + std::to_string(n));
  }
  const int cap = std::min(options.node_cap_k, kHardNodeCap);
  if (k > cap) {
    throw ResourceError("oracle node cap: k = " + std::to_string(k) + " exceeds cap " +
                        std::to_string(cap) + " (" + std::to_string(cap) + "! nodes)");
  }
  const auto nodes = static_cast<std::uint32_t>(factorial(k));
  const bool weighted = !identity.unscaled();
  Forest forest(nodes, weighted);

  const std::vector<Split> splits = enumerate_splits(k, n);
  std::vector<int> rhs(static_cast<std::size_t>(k));
  auto insert_edge = [&](std::uint32_t lhs_rank, const std::vector<int>& lhs_word,
                         const Split& split) {
    // rhs word: untouched prefix, then the blocks in sigma order, then tail
    int out = 0;
    for (int p = 0; p < split.offset; ++p) rhs[static_cast<std::size_t>(out++)] = lhs_word[static_cast<std::size_t>(p)];
    std::array<int, 16> starts{};
    int run = split.offset;
    for (int b = 0; b < n; ++b) {
      starts[static_cast<std::size_t>(b)] = run;
      run += split.lengths[static_cast<std::size_t>(b)];
    }
    for (int b = 0; b < n; ++b) {
      const int src = identity.sigma(b + 1) - 1;
      const int from = starts[static_cast<std::size_t>(src)];
      for (int p = 0; p < split.lengths[static_cast<std::size_t>(src)]; ++p) {
        rhs[static_cast<std::size_t>(out++)] = lhs_word[static_cast<std::size_t>(from + p)];
      }
    }
    for (int p = run; p < k; ++p) rhs[static_cast<std::size_t>(out++)] = lhs_word[static_cast<std::size_t>(p)];
    // x_lhs = q * x_rhs
    forest.unite(lhs_rank, rank_word(rhs), identity.q);
  };

  if (!options.reverse_edges) {
    for (std::uint32_t r = 0; r < nodes; ++r) {
      const std::vector<int> word = unrank_word(r, k);
      for (const Split& split : splits) insert_edge(r, word, split);
    }
  } else {
    for (std::uint32_t rr = nodes; rr-- > 0;) {
      const std::vector<int> word = unrank_word(rr, k);
      for (auto it = splits.rbegin(); it != splits.rend(); ++it) insert_edge(rr, word, *it);
    }
  }

  EquivalenceGraph graph;
  graph.k_ = k;
  graph.root_.resize(nodes);
  graph.dead_.resize(nodes);
  if (weighted) graph.pot_.resize(nodes);
  for (std::uint32_t x = 0; x < nodes; ++x) {
    const std::uint32_t root = forest.find(x);
    graph.root_[x] = root;
    graph.dead_[x] = weighted && forest.root_dead(root) ? 1 : 0;
    if (weighted) graph.pot_[x] = forest.potential(x);
  }
  return graph;
}

EquivalenceGraph::Verdict EquivalenceGraph::equivalent(const Permutation& a,
                                                       const Permutation& b) const {
  if (a.size() != k_ || b.size() != k_) {
    throw InputError("equivalence query size does not match graph degree " +
                     std::to_string(k_));
  }
  const std::uint32_t ra = rank_word(a.images());
  const std::uint32_t rb = rank_word(b.images());
  if (root_[ra] != root_[rb]) return {Verdict::Kind::Absent, Rational(0)};
  if (dead_[ra]) return {Verdict::Kind::Zero, Rational(0)};
  if (pot_.empty()) return {Verdict::Kind::Scalar, Rational(1)};
  return {Verdict::Kind::Scalar, pot_[ra] / pot_[rb]};
}

std::vector<Permutation> EquivalenceGraph::identity_group() const {
  std::vector<Permutation> out;
  if (dead_[0]) return out;
  const std::uint32_t root = root_[0];
  for (std::uint32_t x = 0; x < root_.size(); ++x) {
    if (root_[x] != root) continue;
    if (!pot_.empty() && pot_[x] != pot_[0]) continue;
    out.push_back(Permutation(unrank_word(x, k_)));
  }
  return out;  // ascending rank is lexicographic order
}

bool EquivalenceGraph::identity_vanishes() const { return dead_[0] != 0; }

std::vector<EquivalenceGraph::Component> EquivalenceGraph::components() const {
  std::vector<Component> out;
  std::vector<std::uint32_t> index(root_.size(), UINT32_MAX);
  for (std::uint32_t x = 0; x < root_.size(); ++x) {
    const std::uint32_t root = root_[x];
    if (index[root] == UINT32_MAX) {
      index[root] = static_cast<std::uint32_t>(out.size());
      out.push_back({Permutation(unrank_word(x, k_)), 0, dead_[x] != 0});
    }
    ++out[index[root]].size;
  }
  return out;  // first members appear in rank order, hence sorted
}

bool nilpotent_at(const TwoTermIdentity& identity, int k,
                  EquivalenceGraph::BuildOptions options) {
  return EquivalenceGraph::build(identity, k, options).identity_vanishes();
}

}  // namespace evcom
