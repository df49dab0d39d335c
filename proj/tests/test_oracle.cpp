#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "evcom/errors.hpp"
#include "evcom/oracle.hpp"
#include "evcom/subgroup.hpp"

using namespace evcom;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

using Kind = EquivalenceGraph::Verdict::Kind;

}  // namespace

TEST_CASE("commutativity in degree 3 is one live component") {
  const TwoTermIdentity identity(transposition(2, 1, 2));
  const auto graph = EquivalenceGraph::build(identity, 3);
  const auto components = graph.components();
  REQUIRE(components.size() == 1);
  CHECK(components[0].size == 6);
  CHECK_FALSE(components[0].dead);
  CHECK(graph.identity_group().size() == 6);
}

TEST_CASE("anticommutativity kills every degree-3 monomial") {
  const TwoTermIdentity identity(transposition(2, 1, 2), Rational(-1));
  const auto graph = EquivalenceGraph::build(identity, 3);
  for (const auto& component : graph.components()) CHECK(component.dead);
  CHECK(graph.identity_vanishes());
  CHECK(graph.identity_group().empty());
  const auto verdict =
      graph.equivalent(Permutation::identity(3), Permutation({2, 1, 3}));
  CHECK(verdict.kind == Kind::Zero);
}

TEST_CASE("degree-3 reversal splits into the cosets of its own group") {
  const TwoTermIdentity identity(Permutation({3, 2, 1}));
  const auto graph = EquivalenceGraph::build(identity, 3);
  const auto components = graph.components();
  REQUIRE(components.size() == 3);
  for (const auto& component : components) CHECK(component.size == 2);
  const auto group = graph.identity_group();
  REQUIRE(group.size() == 2);
  CHECK(group[0] == Permutation::identity(3));
  CHECK(group[1] == Permutation({3, 2, 1}));
  // Components are exactly the left cosets of the identity group.
  for (const auto& tau : all_perms(3)) {
    for (const auto& nu : all_perms(3)) {
      const bool same_coset =
          std::find(group.begin(), group.end(), compose(inverse(tau), nu)) != group.end();
      const auto verdict = graph.equivalent(tau, nu);
      CHECK((verdict.kind == Kind::Scalar) == same_coset);
      if (verdict.kind == Kind::Scalar) CHECK(verdict.scalar == 1);
    }
  }
  CHECK(graph.equivalent(Permutation::identity(3), Permutation({2, 1, 3})).kind ==
        Kind::Absent);
}

TEST_CASE("scalar verdicts for the q = 1 identity itself") {
  const TwoTermIdentity identity(transposition(2, 1, 2));
  const auto graph = EquivalenceGraph::build(identity, 2);
  const auto verdict = graph.equivalent(Permutation::identity(2), Permutation({2, 1}));
  REQUIRE(verdict.kind == Kind::Scalar);
  CHECK(verdict.scalar == 1);
}

TEST_CASE("q = 2 commutation collapses at once") {
  const TwoTermIdentity identity(transposition(2, 1, 2), Rational(2));
  const auto graph = EquivalenceGraph::build(identity, 2);
  CHECK(graph.identity_vanishes());
  CHECK(graph.equivalent(Permutation::identity(2), Permutation({2, 1})).kind == Kind::Zero);
}

TEST_CASE("transposition word (1 5) reaches full symmetry at degree 6") {
  const TwoTermIdentity identity(transposition(5, 1, 5));
  const auto graph = EquivalenceGraph::build(identity, 6);
  CHECK(graph.identity_group().size() == 720);
}

TEST_CASE("sharpness family stays inside the block subgroup below its degree") {
  const TwoTermIdentity identity(compose(transposition(5, 1, 2), transposition(5, 4, 5)));
  const auto g5 = EquivalenceGraph::build(identity, 5).identity_group();
  CHECK(g5.size() == 2);
  const auto g6 = EquivalenceGraph::build(identity, 6).identity_group();
  CHECK(g6.size() == 36);
  for (const auto& t : g6) CHECK(in_s_nab(t, 3, 3));
  const auto g7 = EquivalenceGraph::build(identity, 7).identity_group();
  CHECK(g7.size() == factorial(7));
}

TEST_CASE("nilpotency degrees via the graph") {
  const TwoTermIdentity minus(transposition(2, 1, 2), Rational(-1));
  CHECK_FALSE(nilpotent_at(minus, 2));
  CHECK(nilpotent_at(minus, 3));
  const TwoTermIdentity twice(transposition(2, 1, 2), Rational(2));
  CHECK(nilpotent_at(twice, 2));
  const TwoTermIdentity reversal3(Permutation({3, 2, 1}), Rational(2));
  CHECK(nilpotent_at(reversal3, 3));
  const TwoTermIdentity reversal3_minus(Permutation({3, 2, 1}), Rational(-1));
  CHECK_FALSE(nilpotent_at(reversal3_minus, 3));
  CHECK_FALSE(nilpotent_at(reversal3_minus, 4));
  CHECK(nilpotent_at(reversal3_minus, 5));
}

TEST_CASE("vanishing persists in higher degrees") {
  for (int k = 3; k <= 5; ++k) {
    CHECK(nilpotent_at(TwoTermIdentity(transposition(2, 1, 2), Rational(-1)), k));
  }
  for (int k = 2; k <= 5; ++k) {
    CHECK(nilpotent_at(TwoTermIdentity(transposition(2, 1, 2), Rational(2)), k));
  }
}

TEST_CASE("identity group is closed under the group operations") {
  const TwoTermIdentity identity(Permutation({2, 3, 1}));
  const auto graph = EquivalenceGraph::build(identity, 4);
  const auto group = graph.identity_group();
  for (const auto& a : group) {
    CHECK(std::binary_search(group.begin(), group.end(), inverse(a)));
    for (const auto& b : group) {
      CHECK(std::binary_search(group.begin(), group.end(), compose(a, b)));
    }
  }
}

TEST_CASE("q = 1 never kills a component") {
  for (const auto& sigma : all_perms(3)) {
    const auto graph = EquivalenceGraph::build(TwoTermIdentity(sigma), 5);
    for (const auto& component : graph.components()) CHECK_FALSE(component.dead);
  }
}

TEST_CASE("verdicts are transitive with consistent scalars") {
  const TwoTermIdentity identity(Permutation({3, 2, 1}), Rational(-1));
  const auto graph = EquivalenceGraph::build(identity, 4);
  const auto perms = all_perms(4);
  for (std::size_t a = 0; a < perms.size(); a += 3) {
    for (std::size_t b = 0; b < perms.size(); b += 5) {
      for (std::size_t c = 0; c < perms.size(); c += 7) {
        const auto ab = graph.equivalent(perms[a], perms[b]);
        const auto bc = graph.equivalent(perms[b], perms[c]);
        const auto ac = graph.equivalent(perms[a], perms[c]);
        if (ab.kind == Kind::Scalar && bc.kind == Kind::Scalar) {
          REQUIRE(ac.kind == Kind::Scalar);
          CHECK(ac.scalar == ab.scalar * bc.scalar);
        }
      }
    }
  }
}

TEST_CASE("edge insertion order does not change the answers") {
  const TwoTermIdentity identity(Permutation({3, 2, 1}), Rational(-1));
  EquivalenceGraph::BuildOptions reversed;
  reversed.reverse_edges = true;
  const auto forward = EquivalenceGraph::build(identity, 4);
  const auto backward = EquivalenceGraph::build(identity, 4, reversed);
  const auto perms = all_perms(4);
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      const auto va = forward.equivalent(a, b);
      const auto vb = backward.equivalent(a, b);
      CHECK(va.kind == vb.kind);
      if (va.kind == Kind::Scalar) CHECK(va.scalar == vb.scalar);
    }
  }
}

TEST_CASE("caps and degenerate inputs") {
  const TwoTermIdentity identity(transposition(2, 1, 2));
  CHECK_THROWS_AS(EquivalenceGraph::build(identity, 9), ResourceError);
  EquivalenceGraph::BuildOptions raised;
  raised.node_cap_k = 9;
  CHECK_THROWS_AS(EquivalenceGraph::build(identity, 10, raised), ResourceError);
  CHECK_THROWS_AS(EquivalenceGraph::build(TwoTermIdentity(Permutation({3, 2, 1})), 2),
                  InputError);
}

TEST_CASE("vacuous identity separates everything") {
  const auto graph = EquivalenceGraph::build(TwoTermIdentity(Permutation::identity(3)), 4);
  CHECK(graph.components().size() == 24);
  CHECK(graph.identity_group().size() == 1);
}
