#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>

#include "ccodes/analysis.hpp"
#include "ccodes/construct.hpp"
#include "ccodes/subcircuit.hpp"
#include "helpers.hpp"

using namespace ccodes;

TEST_CASE("projection of the square") {
  auto p = deimer_project(TransitionSequence({1, 2, 1, 2}, 2), 2);
  CHECK(p.removed_label == 2);
  CHECK(p.occurrences == 2);
  CHECK(p.result.labels() == std::vector<int>{1, 1});
  CHECK(p.result.dimension() == 1);
  CHECK_FALSE(is_circuit(p.result));
}

TEST_CASE("projection renumbers without reordering") {
  // deleting label 1 from (3,1,3,1) leaves (3,3), renumbered to (2,2): the
  // remaining labels keep their order, they are not renumbered from scratch
  auto p = deimer_project(TransitionSequence({3, 1, 3, 1}, 3), 1);
  CHECK(p.result.labels() == std::vector<int>{2, 2});
  CHECK(p.result.dimension() == 2);
}

TEST_CASE("projection occurrence counts on example1") {
  auto t = builtin_code(Builtin::example1);
  // labels 2,4,6,8,10,12 appear twice per half, everything else once
  for (int i = 1; i <= 16; ++i) {
    auto p = deimer_project(t, i);
    int expected = (i <= 12 && i % 2 == 0) ? 4 : 2;
    CHECK(p.occurrences == expected);
    CHECK(p.result.length() == 44 - expected);
    CHECK(p.result.dimension() == 15);
  }
  CHECK(deimer_project(t, 2).result.length() == 40);
  CHECK(deimer_project(t, 16).result.length() == 42);
  CHECK(deimer_project(t, 1).result.length() == 42);
}

TEST_CASE("occurrence counts add up to the length") {
  auto corpus = std::vector<TransitionSequence>{
      builtin_code(Builtin::example1),
      construct_form(5, 2),
      projected_family(6, 3),
  };
  for (const auto& t : corpus) {
    int total = 0;
    for (int i = 1; i <= t.dimension(); ++i) total += deimer_project(t, i).occurrences;
    CHECK(total == t.length());
  }
}

TEST_CASE("projection argument validation") {
  TransitionSequence t({1, 2, 1, 2}, 3);
  CHECK_THROWS_AS(deimer_project(t, 3), precondition_error);  // label absent
  CHECK_THROWS_AS(deimer_project(t, 0), precondition_error);
  CHECK_THROWS_AS(deimer_project(t, 4), precondition_error);
}

TEST_CASE("projections of example1 are spread-8 circuits") {
  auto t = builtin_code(Builtin::example1);
  auto rows = deimer_check(t, 9);
  REQUIRE(rows.size() == 16);
  for (const auto& row : rows) {
    CAPTURE(row.removed_label);
    CHECK(row.required_spread == 8);
    CHECK(row.circuit);
    CHECK(row.spread_ok);
    CHECK(row.length_ok);
    CHECK(row.passes());
    CHECK(row.length == 44 - row.occurrences);
  }
  CHECK(spread_via_characterization(t, 9));
}

TEST_CASE("deimer_check is deterministic across runs") {
  auto t = builtin_code(Builtin::example1);
  auto a = deimer_check(t, 9);
  auto b = deimer_check(t, 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].removed_label == b[i].removed_label);
    CHECK(a[i].passes() == b[i].passes());
    CHECK(a[i].length == b[i].length);
  }
}

TEST_CASE("required spread 0 passes trivially") {
  auto rows = deimer_check(TransitionSequence({1, 2, 1, 2}, 2), 1);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.required_spread == 0);
    CHECK(row.passes());
    CHECK_FALSE(row.circuit);  // a 2-step walk is no circuit, and need not be
  }
}

TEST_CASE("deimer_check preconditions") {
  CHECK_THROWS_AS(deimer_check(TransitionSequence({1, 2, 3, 4}, 4), 2), precondition_error);
  CHECK_THROWS_AS(deimer_check(TransitionSequence({1, 2, 1, 2}, 2), 0), precondition_error);
}

TEST_CASE("characterization preconditions") {
  auto square = TransitionSequence({1, 2, 1, 2}, 2);
  CHECK_THROWS_AS(spread_via_characterization(square, 1), precondition_error);  // k < 2
  CHECK_THROWS_AS(spread_via_characterization(square, 3), precondition_error);  // d < k
  // N must exceed 4(k-1): the square at k = 2 has N = 4 = 4(k-1)
  CHECK_THROWS_AS(spread_via_characterization(square, 2), precondition_error);
  CHECK_THROWS_AS(spread_via_characterization(TransitionSequence({1, 2, 3, 4}, 4), 2),
                  precondition_error);  // not a circuit
  auto hexagon = TransitionSequence({1, 2, 3, 1, 2, 3}, 3);
  CHECK_NOTHROW(spread_via_characterization(hexagon, 2));  // N = 6 > 4
}

TEST_CASE("characterization agrees with the definition on the corpus") {
  auto corpus = std::vector<TransitionSequence>{
      builtin_code(Builtin::example1),
      builtin_code(Builtin::example1_variant),
      construct_form(5, 2),
      construct_form(7, 2),
      projected_family(6, 3),
      TransitionSequence({1, 2, 3, 1, 2, 3}, 3),
  };
  for (const auto& t : corpus) {
    for (int k = 2; k <= t.dimension() && t.length() > 4 * (k - 1); ++k) {
      CAPTURE(t.length());
      CAPTURE(k);
      CHECK(spread_via_characterization(t, k) == is_spread_at_least(t, k));
    }
  }
}

TEST_CASE("characterization agrees with the definition on random circuits") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    auto t = testutil::random_circuit(rng, 6, 8, 20);
    for (int k = 2; k <= t.dimension() && t.length() > 4 * (k - 1); ++k) {
      CHECK(spread_via_characterization(t, k) == is_spread_at_least(t, k));
    }
  }
}

TEST_CASE("characterization agrees with the definition on swap mutants") {
  std::mt19937 rng(59);
  auto base = construct_form(5, 2);
  int circuits_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto m = testutil::swap_mutant(rng, base);
    if (!is_circuit(m)) continue;  // swaps may break closure into a revisit
    ++circuits_seen;
    for (int k = 2; k <= 5; ++k) {
      if (m.length() <= 4 * (k - 1)) break;
      CHECK(spread_via_characterization(m, k) == is_spread_at_least(m, k));
    }
  }
  CHECK(circuits_seen > 0);
}

TEST_CASE("both verifiers reject substitution mutants consistently") {
  // a single label substitution leaves an odd parity, so the walk no longer
  // closes; every spread verifier must refuse it the same way
  std::mt19937 rng(61);
  auto base = builtin_code(Builtin::example1);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = testutil::substitution_mutant(rng, base);
    REQUIRE_FALSE(is_circuit(m));
    CHECK_THROWS_AS(is_spread_at_least(m, 9), precondition_error);
    CHECK_THROWS_AS(spread_via_characterization(m, 9), precondition_error);
    CHECK_THROWS_AS(is_spread_at_least_klee(m, 9), precondition_error);
  }
}

TEST_CASE("projection keeps the walk geometry") {
  // the projected walk is the original track with one coordinate flattened:
  // adjacent projected vertices differ in exactly the surviving label
  auto t = construct_form(5, 2);
  auto p = deimer_project(t, 3);
  auto verts = vertex_masks(p.result);
  for (int i = 0; i < p.result.length(); ++i) {
    int j = (i + 1) % p.result.length();
    CHECK(std::popcount(verts[i] ^ verts[j]) == 1);
  }
  CHECK(p.result.length() == t.length() - p.occurrences);
}
