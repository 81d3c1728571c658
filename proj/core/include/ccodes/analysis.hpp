#pragma once

#include "ccodes/transition_sequence.hpp"

namespace ccodes {

// Spread value together with a cap marker.  A circuit with no distance
// violation at all (e.g. any 4-cycle) has unbounded spread; we report N/2
// and set `capped`.
struct Spread {
  int value = 0;
  bool capped = false;

  friend bool operator==(const Spread&, const Spread&) = default;
};

// Everything analyze() measures about one sequence.
struct CodeReport {
  int dimension_declared = 0;
  int dimension_used = 0;  // distinct labels occurring
  int length = 0;
  bool circuit = false;
  int spread = 0;          // meaningful only when circuit
  bool spread_capped = false;
  int phi = 0;             // longest window of distinct transitions
  int xi = 0;              // largest m with every m-window distinct
  bool symmetric = false;  // T = (H, H)
};

// Hamming distance.  Throws precondition_error on dimension mismatch.
int cube_distance(const Vertex& a, const Vertex& b);

// Cycle distance between positions i and j on a cycle of length n:
// min(|i - j|, n - |i - j|).
int code_distance(int i, int j, int n);

// Definition check: every pair of vertices with cube distance < k has equal
// code distance.  Requires is_circuit(t).
bool is_spread_at_least(const TransitionSequence& t, int k);

// Same predicate via the segment criterion: every segment whose length lies
// in [k, N/2] has delta >= k.  Requires is_circuit(t) and N >= 2k.  Works on
// label parities only, never touching the vertex track, so it serves as an
// independent cross-check of is_spread_at_least.
bool is_spread_at_least_klee(const TransitionSequence& t, int k);

// Largest k for which is_spread_at_least holds.  Requires is_circuit(t).
Spread compute_spread(const TransitionSequence& t);

// Longest run of pairwise distinct transitions in the cyclic sequence.
// Requires N >= 1.
int max_bit_run(const TransitionSequence& t);

// Largest m such that every cyclic window of length m is repeat-free.
// Requires N >= 1.
int min_bit_run(const TransitionSequence& t);

// True iff N is even and the two halves are identical.
bool is_symmetric(const TransitionSequence& t);

CodeReport analyze(const TransitionSequence& t);

}  // namespace ccodes
