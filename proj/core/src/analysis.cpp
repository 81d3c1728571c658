#include "ccodes/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace ccodes {

namespace {

std::uint64_t label_bit(int label) { return std::uint64_t{1} << (label - 1); }

void require_circuit(const TransitionSequence& t, const char* op) {
  if (!is_circuit(t)) {
    throw precondition_error(std::string(op) + ": sequence is not a circuit");
  }
}

}  // namespace

int cube_distance(const Vertex& a, const Vertex& b) {
  if (a.dimension != b.dimension) {
    throw precondition_error("cube_distance: dimension mismatch");
  }
  return std::popcount(a.bits ^ b.bits);
}

int code_distance(int i, int j, int n) {
  if (n < 1 || i < 1 || i > n || j < 1 || j > n) {
    throw precondition_error("code_distance: positions outside [1, n]");
  }
  int g = std::abs(i - j);
  return std::min(g, n - g);
}

bool is_spread_at_least(const TransitionSequence& t, int k) {
  require_circuit(t, "is_spread_at_least");
  if (k <= 0) return true;
  auto verts = vertex_masks(t);
  int n = t.length();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int cube = std::popcount(verts[i] ^ verts[j]);
      if (cube >= k) continue;
      int code = std::min(j - i, n - (j - i));
      if (code != cube) return false;
    }
  }
  return true;
}

bool is_spread_at_least_klee(const TransitionSequence& t, int k) {
  require_circuit(t, "is_spread_at_least_klee");
  if (k <= 0) return true;
  int n = t.length();
  if (n < 2 * k) {
    throw precondition_error("is_spread_at_least_klee: N < 2k");
  }
  const auto& labels = t.labels();
  // One rolling parity mask per window length; delta(window) = popcount.
  for (int len = k; len <= n / 2; ++len) {
    std::uint64_t parity = 0;
    for (int i = 0; i < len; ++i) parity ^= label_bit(labels[i]);
    for (int s = 0; s < n; ++s) {
      if (std::popcount(parity) < k) return false;
      parity ^= label_bit(labels[s]) ^ label_bit(labels[(s + len) % n]);
    }
  }
  return true;
}

Spread compute_spread(const TransitionSequence& t) {
  require_circuit(t, "compute_spread");
  auto verts = vertex_masks(t);
  int n = t.length();
  Spread result{n / 2, true};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int cube = std::popcount(verts[i] ^ verts[j]);
      int code = std::min(j - i, n - (j - i));
      if (code != cube) {
        // Violating pair: spread must stay <= cube.
        result.capped = false;
        result.value = std::min(result.value, cube);
      }
    }
  }
  return result;
}

int max_bit_run(const TransitionSequence& t) {
  int n = t.length();
  if (n < 1) throw precondition_error("max_bit_run: empty sequence");
  const auto& labels = t.labels();
  std::vector<int> count(t.dimension() + 1, 0);
  int best = 0;
  int left = 0;
  for (int r = 0; r < 2 * n; ++r) {
    int lab = labels[r % n];
    // A window of length n+1 repeats its own first label, so the shrink on
    // duplicates also keeps the window within one full period.
    while (count[lab] > 0) {
      --count[labels[left % n]];
      ++left;
    }
    ++count[lab];
    best = std::max(best, r - left + 1);
  }
  return best;
}

int min_bit_run(const TransitionSequence& t) {
  int n = t.length();
  if (n < 1) throw precondition_error("min_bit_run: empty sequence");
  const auto& labels = t.labels();
  std::vector<int> count(t.dimension() + 1, 0);
  int best = n;
  int right = 0;  // window is [left, right), cyclic, right - left <= n
  for (int left = 0; left < n; ++left) {
    while (right - left < n) {
      int lab = labels[right % n];
      if (count[lab] > 0) break;
      ++count[lab];
      ++right;
    }
    best = std::min(best, right - left);
    // The extension above always adds at least one element to an empty
    // window, so right > left here.
    --count[labels[left % n]];
  }
  return best;
}

bool is_symmetric(const TransitionSequence& t) {
  int n = t.length();
  if (n % 2 != 0) return false;
  const auto& labels = t.labels();
  return std::equal(labels.begin(), labels.begin() + n / 2, labels.begin() + n / 2);
}

CodeReport analyze(const TransitionSequence& t) {
  CodeReport r;
  r.dimension_declared = t.dimension();
  r.dimension_used = t.used_dimension();
  r.length = t.length();
  r.circuit = is_circuit(t);
  r.symmetric = is_symmetric(t);
  if (r.length >= 1) {
    r.phi = max_bit_run(t);
    r.xi = min_bit_run(t);
  }
  if (r.circuit) {
    Spread s = compute_spread(t);
    r.spread = s.value;
    r.spread_capped = s.capped;
  }
  return r;
}

}  // namespace ccodes
