#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "evcom/errors.hpp"
#include "evcom/oracle.hpp"
#include "evcom/saturate.hpp"

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

Permutation reversal(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) images[static_cast<std::size_t>(t) - 1] = n + 1 - t;
  return Permutation(std::move(images));
}

const ChainRow& row_at(const SaturationReport& report, int k) {
  for (const auto& row : report.chain) {
    if (row.k == k) return row;
  }
  REQUIRE(false);
  return report.chain.front();
}

}  // namespace

TEST_CASE("degree-3 reversal becomes fully symmetric at 4") {
  const auto report = saturate(TwoTermIdentity(Permutation({3, 2, 1})));
  REQUIRE(report.ec_degree.has_value());
  CHECK(*report.ec_degree == 4);
  CHECK(row_at(report, 3).order == 2);
  CHECK(row_at(report, 4).is_full);
  CHECK(row_at(report, 5).is_full);  // confirmation degree
  CHECK(report.bound_respected);
}

TEST_CASE("degree-5 reversal needs 7") {
  const auto report = saturate(TwoTermIdentity(reversal(5)));
  REQUIRE(report.ec_degree.has_value());
  CHECK(*report.ec_degree == 7);
  // One degree below the answer the group is only the alternating one.
  CHECK(row_at(report, 6).contains_alternating);
  CHECK_FALSE(row_at(report, 6).is_full);
  CHECK(row_at(report, 6).order == factorial(6) / 2);
}

TEST_CASE("reversals contain the alternating group one degree up") {
  for (int n = 3; n <= 6; ++n) {
    const auto report = saturate(TwoTermIdentity(reversal(n)));
    CHECK(row_at(report, n + 1).contains_alternating);
  }
}

TEST_CASE("sharpness family reaches exactly 2n-3 and respects the block profile") {
  const Permutation sigma = compose(transposition(5, 1, 2), transposition(5, 4, 5));
  const auto report = saturate(TwoTermIdentity(sigma));
  REQUIRE(report.ec_degree.has_value());
  CHECK(*report.ec_degree == 7);
  CHECK(row_at(report, 5).order == 2);
  CHECK(row_at(report, 6).order == 36);
  for (int b = 0; b <= 1; ++b) {
    const ChainRow& row = row_at(report, 5 + b);
    const Subgroup group(row.k, row.witness_generators);
    for (const auto& t : group.elements()) CHECK(in_s_nab(t, 2 + b, 2 + b));
    CHECK(row.order < factorial(row.k));
  }
}

TEST_CASE("scaled doubling dies immediately") {
  const auto report = saturate(TwoTermIdentity(transposition(2, 1, 2), Rational(2)));
  REQUIRE(report.nilpotency_degree.has_value());
  CHECK(*report.nilpotency_degree == 2);
  CHECK_FALSE(report.ec_degree.has_value());
  CHECK(row_at(report, 2).is_full);  // everything vanished, everything equal
}

TEST_CASE("scaled anticommutativity dies one degree later") {
  const auto report = saturate(TwoTermIdentity(transposition(2, 1, 2), Rational(-1)));
  REQUIRE(report.nilpotency_degree.has_value());
  CHECK(*report.nilpotency_degree == 3);
  CHECK(row_at(report, 2).order == 1);  // only the identity has weight 1
}

TEST_CASE("scaled runs agree with the graph, including without seeds") {
  struct Case {
    Permutation sigma;
    Rational q;
    int expected;
  };
  const std::vector<Case> cases = {
      {transposition(2, 1, 2), Rational(2), 2},
      {transposition(2, 1, 2), Rational(-1), 3},
      {Permutation({3, 2, 1}), Rational(2), 3},
      {Permutation({3, 2, 1}), Rational(-1), 5},
  };
  for (const auto& c : cases) {
    const TwoTermIdentity identity(c.sigma, c.q);
    for (bool seeds : {true, false}) {
      SaturationOptions options;
      options.seed_latyshev = seeds;
      const auto report = saturate(identity, options);
      REQUIRE(report.nilpotency_degree.has_value());
      CHECK(*report.nilpotency_degree == c.expected);
    }
    CHECK(nilpotent_at(identity, c.expected));
    if (c.expected > identity.n) CHECK_FALSE(nilpotent_at(identity, c.expected - 1));
  }
}

TEST_CASE("exact rational q = 2/2 selects the unscaled theory") {
  const auto scaledish = saturate(TwoTermIdentity(Permutation({3, 2, 1}), parse_rational("2/2")));
  CHECK(scaledish.ec_degree == saturate(TwoTermIdentity(Permutation({3, 2, 1}))).ec_degree);
  CHECK_FALSE(scaledish.nilpotency_degree.has_value());
}

TEST_CASE("classification flags") {
  auto flags_of = [](const Permutation& sigma) {
    return classify(TwoTermIdentity(sigma));
  };
  CHECK(has_flag(flags_of(reversal(5)), IdentityFlag::LongElement));
  CHECK_FALSE(has_flag(flags_of(reversal(5)), IdentityFlag::Transposition1N));
  CHECK(has_flag(flags_of(Permutation({2, 3, 4, 5, 1})), IdentityFlag::FullCycle));
  CHECK(has_flag(flags_of(Permutation({5, 1, 2, 3, 4})), IdentityFlag::FullCycle));
  CHECK(has_flag(flags_of(Permutation({1, 3, 2})), IdentityFlag::FixesEndpoint));
  CHECK(has_flag(flags_of(Permutation::identity(3)), IdentityFlag::Vacuous));
  CHECK(has_flag(flags_of(compose(transposition(6, 1, 2), transposition(6, 5, 6))),
                 IdentityFlag::SharpnessFamily));
  CHECK(has_flag(flags_of(Permutation({3, 2, 1})), IdentityFlag::LongElement));
  CHECK(has_flag(flags_of(Permutation({3, 2, 1})), IdentityFlag::Transposition1N));
}

TEST_CASE("family degrees for the classified identities") {
  const TwoTermIdentity long5(reversal(5));
  CHECK(predicted_degree(long5, classify(long5)) == 7);
  const TwoTermIdentity long6(reversal(6));
  CHECK(predicted_degree(long6, classify(long6)) == 7);
  const TwoTermIdentity t15(transposition(5, 1, 5));
  CHECK(predicted_degree(t15, classify(t15)) == 6);
  const TwoTermIdentity sharp6(compose(transposition(6, 1, 2), transposition(6, 5, 6)));
  CHECK(predicted_degree(sharp6, classify(sharp6)) == 9);
  const TwoTermIdentity fixing(Permutation({1, 3, 2}));
  CHECK_FALSE(predicted_degree(fixing, classify(fixing)).has_value());
  const TwoTermIdentity scaled(reversal(5), Rational(2));
  CHECK_FALSE(predicted_degree(scaled, classify(scaled)).has_value());
}

TEST_CASE("universal bound over every degree-4 identity moving both endpoints") {
  int count = 0;
  for (const auto& sigma : all_perms(4)) {
    if (sigma(1) == 1 || sigma(4) == 4) continue;
    ++count;
    const auto report = saturate(TwoTermIdentity(sigma));
    REQUIRE(report.ec_degree.has_value());
    CHECK(*report.ec_degree <= 5);
  }
  CHECK(count == 14);
}

TEST_CASE("border lifts land inside the next group") {
  for (const auto& sigma :
       {Permutation({3, 2, 1}), Permutation({2, 3, 1}), Permutation({2, 1, 4, 3})}) {
    const auto report = saturate(TwoTermIdentity(sigma));
    for (std::size_t r = 0; r + 1 < report.chain.size(); ++r) {
      const ChainRow& row = report.chain[r];
      const ChainRow& next_row = report.chain[r + 1];
      const Subgroup group(row.k, row.witness_generators);
      const Subgroup next(next_row.k, next_row.witness_generators);
      for (const auto& g : group.elements()) {
        CHECK(next.contains(lift_ti(g, 0)));
        CHECK(next.contains(lift_ti(g, row.k + 1)));
      }
    }
  }
}

TEST_CASE("block symmetry grows along the chain") {
  for (const auto& sigma : all_perms(4)) {
    if (sigma(1) == 1 || sigma(4) == 4) continue;
    const auto report = saturate(TwoTermIdentity(sigma));
    for (std::size_t r = 0; r + 1 < report.chain.size(); ++r) {
      const ChainRow& row = report.chain[r];
      const ChainRow& next = report.chain[r + 1];
      if (row.symmetric_prefix >= 2) {
        CHECK(next.symmetric_prefix >= std::min(row.symmetric_prefix + 1, next.k));
      }
      if (row.symmetric_suffix >= 2) {
        CHECK(next.symmetric_suffix >= std::min(row.symmetric_suffix + 1, next.k));
      }
    }
  }
}

TEST_CASE("chains are identical with and without seeding") {
  for (const auto& sigma : {Permutation({3, 2, 1}), Permutation({2, 3, 1}),
                            Permutation({2, 1, 4, 3}), transposition(4, 1, 4)}) {
    SaturationOptions seedless;
    seedless.seed_latyshev = false;
    const auto with = saturate(TwoTermIdentity(sigma));
    const auto without = saturate(TwoTermIdentity(sigma), seedless);
    CHECK(with.ec_degree == without.ec_degree);
    REQUIRE(with.chain.size() == without.chain.size());
    for (std::size_t r = 0; r < with.chain.size(); ++r) {
      CHECK(with.chain[r].order == without.chain[r].order);
    }
  }
}

TEST_CASE("endpoint-fixing identities never fill up") {
  SaturationOptions options;
  options.max_degree = 6;
  options.full_chain = true;
  const auto report = saturate(TwoTermIdentity(Permutation({1, 3, 2})), options);
  CHECK_FALSE(report.ec_degree.has_value());
  CHECK(report.reached_max_degree);
  CHECK(has_flag(report.classification, IdentityFlag::FixesEndpoint));
  for (const auto& row : report.chain) CHECK_FALSE(row.is_full);
}

TEST_CASE("vacuous identity reports nothing but stays well-formed") {
  const auto report = saturate(TwoTermIdentity(Permutation::identity(3)));
  CHECK_FALSE(report.ec_degree.has_value());
  CHECK_FALSE(report.nilpotency_degree.has_value());
  CHECK(has_flag(report.classification, IdentityFlag::Vacuous));
  for (const auto& row : report.chain) CHECK(row.order == 1);
}

TEST_CASE("scaled vacuous identity still collapses") {
  const auto report = saturate(TwoTermIdentity(Permutation::identity(3), Rational(2)));
  REQUIRE(report.nilpotency_degree.has_value());
  CHECK(*report.nilpotency_degree == 3);
}

TEST_CASE("stability: full stays full one degree up") {
  for (const auto& sigma : all_perms(3)) {
    if (sigma(1) == 1 || sigma(3) == 3) continue;
    const auto report = saturate(TwoTermIdentity(sigma));
    REQUIRE(report.ec_degree.has_value());
    CHECK(row_at(report, *report.ec_degree + 1).is_full);
  }
}

TEST_CASE("interior blocks: bordered analysis") {
  SUBCASE("reversal buried in a size-6 word") {
    const auto analysis = analyze_general(TwoTermIdentity(Permutation({1, 2, 5, 4, 3, 6})));
    CHECK(analysis.blocks.fixed_prefix == 2);
    CHECK(analysis.blocks.moved_end == 5);
    REQUIRE(analysis.core_degree.has_value());
    CHECK(*analysis.core_degree == 4);
    CHECK(*analysis.bordered_degree == 7);
  }
  SUBCASE("interior swap") {
    const auto analysis = analyze_general(TwoTermIdentity(Permutation({1, 3, 2, 4})));
    REQUIRE(analysis.core_degree.has_value());
    CHECK(*analysis.core_degree == 2);
    CHECK(*analysis.bordered_degree == 4);
    // The oracle confirms the interior swap already holds at that degree.
    const auto graph = EquivalenceGraph::build(TwoTermIdentity(Permutation({1, 3, 2, 4})), 4);
    const auto verdict = graph.equivalent(Permutation::identity(4), Permutation({1, 3, 2, 4}));
    CHECK(verdict.kind == EquivalenceGraph::Verdict::Kind::Scalar);
  }
  SUBCASE("identity is vacuous") {
    const auto analysis = analyze_general(TwoTermIdentity(Permutation::identity(4)));
    CHECK(analysis.vacuous);
    CHECK_FALSE(analysis.core_degree.has_value());
  }
}

TEST_CASE("resource cap carries the partial chain") {
  SaturationOptions options;
  options.enumeration_cap = 10;
  try {
    saturate(TwoTermIdentity(transposition(5, 1, 5)), options);
    FAIL("expected a cap error");
  } catch (const SaturationCapError& err) {
    CHECK_FALSE(err.partial().chain.empty());
    CHECK(err.partial().chain.front().k == 5);
  }
}

TEST_CASE("max degree below n is rejected") {
  SaturationOptions options;
  options.max_degree = 2;
  CHECK_THROWS_AS(saturate(TwoTermIdentity(Permutation({3, 2, 1})), options), InputError);
}
