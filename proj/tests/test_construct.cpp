#include <doctest.h>

#include <set>

#include "ccodes/analysis.hpp"
#include "ccodes/construct.hpp"
#include "helpers.hpp"

using namespace ccodes;

TEST_CASE("family parameter helpers") {
  FamilyParams p{9, 4};
  CHECK(p.dimension() == 16);
  CHECK(p.length() == 44);
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS((FamilyParams{4, 2}.validate()), precondition_error);   // k even
  CHECK_THROWS_AS((FamilyParams{5, 3}.validate()), precondition_error);   // l odd
  CHECK_THROWS_AS((FamilyParams{7, 4}.validate()), precondition_error);   // k < 2l+1
  CHECK_THROWS_AS((FamilyParams{3, 2}.validate()), precondition_error);   // k < 5
  CHECK_THROWS_AS((FamilyParams{5, 0}.validate()), precondition_error);   // l < 2
  CHECK_THROWS_AS(construct_form(4, 2), precondition_error);
  CHECK_NOTHROW((FamilyParams{5, 2}.validate()));
  CHECK_NOTHROW((FamilyParams{13, 6}.validate()));
}

TEST_CASE("construct_form(9,4) is example1, label for label") {
  auto built = construct_form(9, 4);
  auto frozen = builtin_code(Builtin::example1);
  CHECK(built.labels() == frozen.labels());
  CHECK(built.dimension() == frozen.dimension());
}

TEST_CASE("construct_form(5,2) frozen half") {
  auto t = construct_form(5, 2);
  std::vector<int> half = {1, 2, 3, 4, 5, 6, 7, 2, 8, 4, 9, 6};
  std::vector<int> full = half;
  full.insert(full.end(), half.begin(), half.end());
  CHECK(t.labels() == full);
  CHECK(t.dimension() == 9);
}

TEST_CASE("family instance table") {
  struct Row {
    int k, l, d, n;
  };
  // d = (3k+l+1)/2 and N = 4k+2l for each admissible pair
  const Row rows[] = {
      {5, 2, 9, 24},  {7, 2, 12, 32},  {9, 2, 15, 40},  {11, 2, 18, 48},
      {9, 4, 16, 44}, {11, 4, 19, 52}, {13, 4, 22, 60}, {13, 6, 23, 64},
  };
  for (const auto& row : rows) {
    CAPTURE(row.k);
    CAPTURE(row.l);
    auto t = construct_form(row.k, row.l);
    CHECK(t.dimension() == row.d);
    CHECK(t.used_dimension() == row.d);
    CHECK(t.length() == row.n);
    REQUIRE(is_circuit(t));
    auto s = compute_spread(t);
    CHECK(s.value == row.k);
    CHECK_FALSE(s.capped);
    CHECK(is_symmetric(t));
    CHECK(max_bit_run(t) >= row.k + row.l);
    CHECK(max_bit_run(t) <= row.n / 2);
    CHECK(min_bit_run(t) == row.k + 1);
  }
}

TEST_CASE("every long-enough window starting from a full run covers all labels") {
  // In a family member, any segment of length 2k+l+1 whose first k+l labels
  // are pairwise distinct has delta exactly k and touches all d coordinates.
  for (auto [k, l] : {std::pair{5, 2}, std::pair{9, 4}, std::pair{7, 2}}) {
    auto t = construct_form(k, l);
    int d = t.dimension();
    int window = 2 * k + l + 1;
    int qualifying = 0;
    for (int start = 1; start <= t.length(); ++start) {
      auto head = t.segment(start, k + l);
      std::set<int> head_labels;
      for (int i = 1; i <= k + l; ++i) head_labels.insert(head.label(i));
      if (static_cast<int>(head_labels.size()) != k + l) continue;
      ++qualifying;
      auto seg = t.segment(start, window);
      CHECK(seg.delta() == k);
      std::set<int> seen;
      for (int i = 1; i <= window; ++i) seen.insert(seg.label(i));
      CHECK(static_cast<int>(seen.size()) == d);
    }
    CHECK(qualifying > 0);
  }
}

TEST_CASE("builtin lookup by name") {
  CHECK(builtin_code("example1").labels() == builtin_code(Builtin::example1).labels());
  CHECK(builtin_code("example1-variant").labels() ==
        builtin_code(Builtin::example1_variant).labels());
  CHECK_THROWS_AS(builtin_code("nope"), precondition_error);
  CHECK_THROWS_AS(builtin_code(""), precondition_error);
}

TEST_CASE("builtins are spread-9 codes in dimension 16") {
  for (auto which : {Builtin::example1, Builtin::example1_variant}) {
    auto t = builtin_code(which);
    CHECK(t.dimension() == 16);
    CHECK(t.used_dimension() == 16);
    CHECK(t.length() == 44);
    REQUIRE(is_circuit(t));
    CHECK((compute_spread(t) == Spread{9, false}));
    CHECK(is_symmetric(t));
  }
}

TEST_CASE("the two builtins are genuinely different codes") {
  auto a = builtin_code(Builtin::example1);
  auto b = builtin_code(Builtin::example1_variant);
  CHECK(a.labels() != b.labels());
  // phi separates them, so no relabeling/rotation/reversal maps one onto the
  // other
  CHECK(max_bit_run(a) == 13);
  CHECK(max_bit_run(b) == 12);
}

TEST_CASE("projected family parameters") {
  CHECK_THROWS_AS(projected_family(5, 3), precondition_error);  // k odd
  CHECK_THROWS_AS(projected_family(6, 2), precondition_error);  // l even
  CHECK_THROWS_AS(projected_family(4, 5), precondition_error);  // k < 2l-2
  CHECK_THROWS_AS(projected_family(2, 3), precondition_error);
  CHECK_NOTHROW(projected_family(4, 3));
}

TEST_CASE("projected family instances") {
  struct Row {
    int k, l, d, n;
  };
  const Row rows[] = {{4, 3, 8, 22}, {6, 3, 11, 30}, {8, 5, 15, 42}};
  for (const auto& row : rows) {
    CAPTURE(row.k);
    CAPTURE(row.l);
    auto t = projected_family(row.k, row.l);
    CHECK(t.dimension() == row.d);
    CHECK(t.used_dimension() == row.d);  // labels stay dense after deletion
    CHECK(t.length() == row.n);
    REQUIRE(is_circuit(t));
    CHECK(is_spread_at_least(t, row.k));
    CHECK(is_symmetric(t));
  }
  // spreads are exactly k for the two larger instances
  CHECK((compute_spread(projected_family(6, 3)) == Spread{6, false}));
  CHECK((compute_spread(projected_family(8, 5)) == Spread{8, false}));
}
