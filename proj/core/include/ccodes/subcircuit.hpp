#pragma once

#include <vector>

#include "ccodes/transition_sequence.hpp"

namespace ccodes {

// The projection that deletes one coordinate: drop every occurrence of one
// label from T and renumber the labels above it down by one.  For a circuit
// code of spread k the projected walk is, when long enough, a circuit code
// of spread k-1 in dimension d-1; this is the engine behind the
// decomposition verifier below.
struct Projection {
  TransitionSequence source;
  int removed_label = 0;
  int occurrences = 0;
  TransitionSequence result;  // labels renumbered to [1, d-1], order kept
};

// Requires 1 <= i <= d and that i occurs in T.
Projection deimer_project(const TransitionSequence& t, int i);

// One row of deimer_check's per-label result.
struct SubcircuitCheck {
  int removed_label = 0;
  int occurrences = 0;
  int length = 0;
  int required_spread = 0;   // k-1
  bool circuit = false;
  bool spread_ok = false;    // projection has spread >= k-1
  bool length_ok = false;    // projection length >= 2(k-1)

  // The per-label verdict.  For required spread 0 the projection needs no
  // property at all, so the row passes trivially.
  bool passes() const {
    if (required_spread <= 0) return true;
    return circuit && spread_ok && length_ok;
  }
};

// For every label i of a circuit T, project i away and test whether the
// result is a circuit of spread >= k-1 and of admissible length.  Requires
// is_circuit(t) and k >= 1.  Length shortfalls are reported per label, not
// thrown.
std::vector<SubcircuitCheck> deimer_check(const TransitionSequence& t, int k);

// Spread via one level of decomposition: T has spread k iff every projection
// C^i is a circuit of spread k-1.  Valid for k >= 2, d >= k and N > 4(k-1);
// those preconditions are enforced.  Runs the per-label checks concurrently;
// the result is their conjunction and does not depend on scheduling.
bool spread_via_characterization(const TransitionSequence& t, int k);

}  // namespace ccodes
