#include "ccodes/bounds.hpp"

#include <algorithm>
#include <limits>

#include "ccodes/construct.hpp"

namespace ccodes {

namespace {

const char* kCiteSingletonDim = "singleton-dimension-bound";
const char* kCiteSingletonLb = "singleton-lower-bound";
const char* kCiteDouglasUpper = "douglas-upper-bound";
const char* kCiteDouglasExact = "douglas-exact";
const char* kCiteSymmetricFamily = "symmetric-family-lower";
const char* kCiteProjectedFamily = "projected-family-lower";

// (k+1) << (e-1) fits in int64 iff k+1 <= max >> (e-1)
bool singleton_lb_fits(int k, std::int64_t e) {
  if (e - 1 >= 62) return false;
  return k + 1 <= (std::numeric_limits<std::int64_t>::max() >> (e - 1));
}

bool douglas_regime_even(int k, int l) {
  return k >= 2 && k % 2 == 0 && l >= 1 && l % 2 == 1 && k >= 2 * l - 2;
}

bool douglas_regime_odd(int k, int l) {
  return k >= 1 && k % 2 == 1 && l >= 0 && l % 2 == 0 && k >= 2 * l + 1;
}

}  // namespace

int singleton_dim_bound(int k, int phi) {
  if (k < 1) throw precondition_error("singleton_dim_bound: k must be >= 1");
  if (phi < k + 2) {
    throw precondition_error("singleton_dim_bound applies only for phi >= k+2");
  }
  return k + 1 + phi / 2;
}

std::int64_t singleton_length_lb(int d, int k) {
  if (k < 1 || k % 2 == 0) {
    throw precondition_error("singleton_length_lb: k must be odd and >= 1");
  }
  if (d < 1) throw precondition_error("singleton_length_lb: d must be >= 1");
  std::int64_t e = 2LL * d / (k + 1);
  if (e < 2) {
    throw precondition_error("singleton_length_lb requires floor(2d/(k+1)) >= 2");
  }
  if (!singleton_lb_fits(k, e)) {
    throw precondition_error("singleton_length_lb: value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(k + 1) << (e - 1);
}

std::int64_t douglas_upper(int k, int l) {
  if (douglas_regime_even(k, l)) return 4LL * k + 3LL * l - 1;
  if (douglas_regime_odd(k, l)) return 4LL * k + 3LL * l + 2;
  throw precondition_error(
      "douglas_upper requires k even/l odd with k >= 2l-2, or k odd/l even "
      "with k >= 2l+1");
}

std::optional<std::int64_t> douglas_exact(int d, int k) {
  if (k < 1) return std::nullopt;
  if (k % 2 == 0) {
    if (d == 3 * k / 2 + 2) return 4LL * k + 6;
    return std::nullopt;
  }
  if (d == 3 * k / 2 + 2) return 4LL * k + 4;
  if (k >= 9 && d == 3 * k / 2 + 3) return 4LL * k + 8;
  return std::nullopt;
}

std::int64_t symmetric_family_max(int k, int l) {
  FamilyParams{k, l}.validate();
  return 4LL * k + 2LL * l;
}

BoundsReport bounds_report(int d, int k) {
  if (k < 1 || d < k) {
    throw precondition_error("bounds_report requires d >= k >= 1");
  }
  BoundsReport rep;
  rep.d = d;
  rep.k = k;
  rep.l = 2 * d - 3 * k - 1;
  int l = rep.l;

  if (k % 2 == 1) {
    std::int64_t e = 2LL * d / (k + 1);
    if (e >= 2 && singleton_lb_fits(k, e)) {
      rep.lower_bounds.push_back({singleton_length_lb(d, k), kCiteSingletonLb, Quantity::K, 0});
    }
  }

  // Family constructions at the decomposition d = (3k+l+1)/2.
  if (k % 2 == 1 && l >= 2 && l % 2 == 0 && k >= 2 * l + 1) {
    rep.lower_bounds.push_back({symmetric_family_max(k, l), kCiteSymmetricFamily, Quantity::K, 0});
  }
  if (k % 2 == 0 && l >= 3 && l % 2 == 1 && k >= 2 * l - 2 && k >= 4) {
    rep.lower_bounds.push_back({4LL * k + 2 * l, kCiteProjectedFamily, Quantity::K, 0});
  }

  if (douglas_regime_even(k, l) || douglas_regime_odd(k, l)) {
    rep.upper_bounds.push_back({douglas_upper(k, l), kCiteDouglasUpper, Quantity::L, k + l});
  }

  if (auto exact = douglas_exact(d, k)) {
    rep.exact = BoundEntry{*exact, kCiteDouglasExact, Quantity::K, 0};
  }

  if (l >= 1) {
    rep.notes.push_back("decomposition: l = 2d-3k-1 = " + std::to_string(l) +
                        ", r = k+l = " + std::to_string(k + l));
  }

  // Within-quantity consistency.  L <= K, so the two ladders are not
  // directly comparable.
  std::int64_t max_lower_k = 0;
  bool have_lower_k = false;
  for (const auto& b : rep.lower_bounds) {
    if (b.quantity == Quantity::K) {
      max_lower_k = std::max(max_lower_k, b.value);
      have_lower_k = true;
    }
  }
  for (const auto& lo : rep.lower_bounds) {
    for (const auto& hi : rep.upper_bounds) {
      if (lo.quantity == hi.quantity && lo.value > hi.value) rep.consistent = false;
    }
  }
  if (rep.exact && have_lower_k && rep.exact->value < max_lower_k) rep.consistent = false;
  for (const auto& hi : rep.upper_bounds) {
    if (rep.exact && hi.quantity == Quantity::K && rep.exact->value > hi.value) {
      rep.consistent = false;
    }
  }
  if (!rep.consistent) rep.notes.push_back("inconsistent bounds detected");
  return rep;
}

}  // namespace ccodes
