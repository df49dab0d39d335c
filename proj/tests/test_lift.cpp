#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "evcom/errors.hpp"
#include "evcom/saturate.hpp"
#include "evcom/words.hpp"

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

}  // namespace

TEST_CASE("lift examples") {
  const Permutation sigma({3, 2, 1});
  CHECK(lift_ti(sigma, 1) == Permutation({4, 3, 1, 2}));
  CHECK(lift_ti(sigma, 0) == Permutation({1, 4, 3, 2}));
  CHECK(lift_ti(sigma, 4) == Permutation({3, 2, 1, 4}));
  for (int m = 1; m <= 5; ++m) {
    for (int i = 0; i <= m + 1; ++i) {
      CHECK(lift_ti(Permutation::identity(m), i) == Permutation::identity(m + 1));
    }
  }
  CHECK_THROWS_AS(lift_ti(sigma, -1), InputError);
  CHECK_THROWS_AS(lift_ti(sigma, 5), InputError);
}

TEST_CASE("word surgery matches the closed form for every sigma, i with m <= 5") {
  for (int m = 1; m <= 5; ++m) {
    const Word identity_word = word_of(Permutation::identity(m));
    for (const auto& sigma : all_perms(m)) {
      for (int i = 0; i <= m + 1; ++i) {
        CHECK(lift_word(identity_word, m, i) == word_of(Permutation::identity(m + 1)));
        CHECK(perm_of_word(lift_word(word_of(sigma), m, i)) == lift_ti(sigma, i));
      }
    }
  }
}

TEST_CASE("word rendering") {
  CHECK(render_word({1, 2, 3}) == "x1 x2 x3");
  CHECK(render_word(word_of(Permutation({4, 3, 1, 2}))) == "x4 x3 x1 x2");
}

TEST_CASE("seeds for a transposition word") {
  // sigma = (1 5): word x5 x2 x3 x4 x1, first letter 5, last letter 1
  const TwoTermIdentity identity(transposition(5, 1, 5));
  const auto seeds = latyshev_seed(identity);
  REQUIRE(seeds.degree_n1.size() == 2);
  REQUIRE(seeds.degree_n2.size() == 2);
  CHECK(seeds.degree_n1[0].perm == from_cycle(6, {1, 2, 3, 4, 5}));
  CHECK(seeds.degree_n1[1].perm == from_cycle(6, {2, 3, 4, 5, 6}));
  CHECK(seeds.degree_n2[0].perm == transposition(7, 1, 2));
  CHECK(seeds.degree_n2[1].perm == transposition(7, 6, 7));
  for (const auto& seed : seeds.degree_n1) CHECK(seed.weight == 1);
}

TEST_CASE("seeds for the degree-3 reversal") {
  const TwoTermIdentity identity(Permutation({3, 2, 1}));
  const auto seeds = latyshev_seed(identity);
  REQUIRE(seeds.degree_n1.size() == 2);
  CHECK(seeds.degree_n1[0].perm == from_cycle(4, {1, 2, 3}));
  CHECK(seeds.degree_n1[1].perm == from_cycle(4, {2, 3, 4}));
}

TEST_CASE("no seeds when an endpoint stays put") {
  const auto seeds = latyshev_seed(TwoTermIdentity(Permutation({1, 3, 2})));
  CHECK(seeds.degree_n1.empty());
  CHECK(seeds.degree_n2.empty());
  const auto vacuous = latyshev_seed(TwoTermIdentity(Permutation::identity(3)));
  CHECK(vacuous.degree_n1.empty());
}

TEST_CASE("seed weight stays 1 for scaled identities") {
  const TwoTermIdentity identity(transposition(2, 1, 2), Rational(-1));
  const auto seeds = latyshev_seed(identity);
  REQUIRE(seeds.degree_n1.size() == 2);
  CHECK(seeds.degree_n1[0].perm == transposition(3, 1, 2));
  CHECK(seeds.degree_n1[1].perm == transposition(3, 2, 3));
  CHECK(seeds.degree_n1[0].weight == 1);
  CHECK(seeds.degree_n2[0].weight == 1);
}
