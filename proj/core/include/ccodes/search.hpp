#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ccodes/transition_sequence.hpp"

namespace ccodes {

// An exhaustive-search instance: find the longest circuit code of spread k
// in I(d), optionally restricted to phi >= min_phi and/or to symmetric
// codes.  Only cycles of length >= max(2k+2, 4) count; shorter ones are
// degenerate for the quantities of interest.
struct SearchProblem {
  int d = 0;
  int k = 0;
  std::optional<int> min_phi;          // r; must be <= d
  bool symmetric = false;
  std::optional<int> max_length_hint;  // proven external cap on the answer
  std::optional<std::int64_t> node_budget;                   // default 1e8
  std::optional<std::chrono::duration<double>> time_budget;  // default 600 s
  // Known code to start from: sets the incumbent before the tree runs.
  // Must itself satisfy the requested spread/phi/symmetry.
  std::optional<TransitionSequence> seed;
};

struct SearchResult {
  int best_length = 0;  // 0 when nothing admissible was found
  std::optional<TransitionSequence> witness;  // canonical, lex-least
  bool exhaustive = false;
  std::int64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

inline constexpr std::int64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::chrono::duration<double> kDefaultTimeBudget{600.0};

// Depth-first enumeration of canonical transition sequences (labels first
// occur in increasing order), rooted at the forced-distinct prefix
// 1..max(k+1, min_phi).  Every accepted cycle is re-verified with the
// Definition-style checker before it can become the result, so pruning
// bugs cannot produce a false witness.  exhaustive=true means the full
// canonical tree within the proven length caps was explored inside the
// budgets; identical inputs give identical results unless a wall-clock
// budget is what stops the run.
SearchResult search_max(const SearchProblem& p);

// search_max restricted to symmetric codes: enumerates canonical halves H
// and tests the closure T = (H, H).  p.symmetric is forced on.
SearchResult search_max_symmetric(SearchProblem p);

// Budgeted probe of the conjectured equality K((3k+l+1)/2, k) = 4k+2l for
// k odd >= 9 and l even >= 2 with k >= 2l+1: runs the unrestricted search
// at that dimension, seeded with construct_form(k, l) and capped by the
// known exact value when one applies.  A run that exhausts its budget
// without finding anything longer is consistent with the conjecture but
// proves nothing.
SearchResult probe_conjecture(int k, int l,
                              std::optional<std::int64_t> node_budget = {},
                              std::optional<std::chrono::duration<double>> time_budget = {});

}  // namespace ccodes
