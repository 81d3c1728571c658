#pragma once

#include <string_view>

#include "ccodes/transition_sequence.hpp"

namespace ccodes {

// Parameters of the explicit symmetric family: spread k odd and phi margin
// l even >= 2 with k >= 2l+1.  The target dimension d = (3k+l+1)/2 is then
// an integer and the family member has length 4k+2l, which is exactly the
// maximum for symmetric codes with these parameters.
struct FamilyParams {
  int k = 0;
  int l = 0;

  int dimension() const { return (3 * k + l + 1) / 2; }
  int length() const { return 4 * k + 2 * l; }

  // Throws precondition_error unless k odd >= 5, l even >= 2, k >= 2l+1.
  void validate() const;
};

// The symmetric sequence whose half is
//   w1 = (1, ..., k+l)
//   w2 = (2, 4, ..., 2l-2)
//   w3 = (g_1, b_1, ..., g_{d-(k+l)}, b_{d-(k+l)})
// with b's = (2l, 2l+2, ..., k+l-1) and g's = (k+l+1, ..., d).
// Declared dimension d, length 4k+2l, spread exactly k, phi >= k+l.
TransitionSequence construct_form(const FamilyParams& p);
TransitionSequence construct_form(int k, int l);

enum class Builtin {
  // The published symmetric (16,9) code of length 44 with phi = 13; equals
  // construct_form(9, 4).
  example1,
  // A second (16,9) code of length 44.  Its phi is 12, which certifies that
  // it is not isomorphic to example1.
  example1_variant,
};

TransitionSequence builtin_code(Builtin name);

// Name-keyed lookup for the CLI: "example1" or "example1-variant".
// Throws precondition_error on unknown names.
TransitionSequence builtin_code(std::string_view name);

// The projected family for k even: build construct_form(k+1, l-1) and delete
// both occurrences of its highest label.  Requires k even, l odd >= 3,
// k >= 2l-2.  The result is a circuit code of dimension (3k+l+1)/2, length
// 4k+2l and spread at least k.
TransitionSequence projected_family(int k, int l);

}  // namespace ccodes
