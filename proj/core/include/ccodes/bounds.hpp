#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccodes/errors.hpp"

namespace ccodes {

// Which maximum a bound talks about: K(d,k) is unrestricted, L(d,k,r) is
// restricted to codes with phi >= r.  L <= K, so the two families of bounds
// are compared separately.
enum class Quantity { K, L };

struct BoundEntry {
  std::int64_t value = 0;
  std::string citation;  // machine-readable tag, see README
  Quantity quantity = Quantity::K;
  int r = 0;  // phi floor, L entries only

  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct BoundsReport {
  int d = 0;
  int k = 0;
  int l = 0;  // the decomposition l = 2d - 3k - 1
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  std::optional<BoundEntry> exact;
  bool consistent = true;
  std::vector<std::string> notes;
};

// Minimum dimension carrying a spread-k code with maximum bit run phi:
// d >= k + 1 + floor(phi/2).  Applies when phi >= k+2 (and the code is
// longer than 2d); throws precondition_error below that.
int singleton_dim_bound(int k, int phi);

// Lower bound K(d,k) >= (k+1) * 2^(floor(2d/(k+1)) - 1) for k odd and
// floor(2d/(k+1)) >= 2.  Throws precondition_error outside that regime or
// when the value exceeds the 64-bit range.
std::int64_t singleton_length_lb(int d, int k);

// Upper bound on L((3k+l+1)/2, k, k+l): 4k+3l-1 for k even, l odd,
// k >= 2l-2; 4k+3l+2 for k odd, l even, k >= 2l+1.  Throws
// precondition_error when neither regime matches.
std::int64_t douglas_upper(int k, int l);

// The known exact values of K(d,k): 4k+6 at d = 3k/2+2 (k even), 4k+4 at
// d = floor(3k/2)+2 (k odd), 4k+8 at d = floor(3k/2)+3 (k odd >= 9).
// Empty when (d,k) matches none of the cases.
std::optional<std::int64_t> douglas_exact(int d, int k);

// Exact maximum length of a symmetric member of F((3k+l+1)/2, k, k+l):
// 4k+2l, for k odd, l even >= 2, k >= 2l+1.  The witness is
// construct_form(k,l).
std::int64_t symmetric_family_max(int k, int l);

// Every applicable bound for (d,k), each tagged with its citation and
// quantity.  Requires d >= k >= 1.
BoundsReport bounds_report(int d, int k);

}  // namespace ccodes
