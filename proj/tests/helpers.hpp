#pragma once

// Shared test utilities: deliberately naive reimplementations of the core
// quantities (used as oracles against the library's optimized paths) and a
// random circuit generator.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ccodes/analysis.hpp"
#include "ccodes/transition_sequence.hpp"

namespace testutil {

using ccodes::TransitionSequence;

// delta by multiset counting, no bit tricks.
inline int naive_delta(const std::vector<int>& labels) {
  std::map<int, int> count;
  for (int lab : labels) ++count[lab];
  int odd = 0;
  for (const auto& [lab, c] : count) {
    if (c % 2 == 1) ++odd;
  }
  return odd;
}

// Vertex track as coordinate vectors, no bitmasks.
inline std::vector<std::vector<int>> naive_vertices(const TransitionSequence& t) {
  std::vector<std::vector<int>> verts;
  std::vector<int> cur(t.dimension(), 0);
  for (int i = 0; i < t.length(); ++i) {
    verts.push_back(cur);
    cur[t.labels()[i] - 1] ^= 1;
  }
  return verts;
}

inline int naive_hamming(const std::vector<int>& a, const std::vector<int>& b) {
  int dist = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dist += a[i] != b[i];
  return dist;
}

// Definition check, straight from the text.
inline bool naive_is_spread_at_least(const TransitionSequence& t, int k) {
  auto verts = naive_vertices(t);
  int n = t.length();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int cube = naive_hamming(verts[i], verts[j]);
      int code = std::min(j - i, n - (j - i));
      if (cube < k && code != cube) return false;
    }
  }
  return true;
}

// Segment criterion with the naive delta.
inline bool naive_klee(const TransitionSequence& t, int k) {
  int n = t.length();
  for (int len = k; len <= n / 2; ++len) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> window;
      for (int i = 0; i < len; ++i) window.push_back(t.labels()[(s + i) % n]);
      if (naive_delta(window) < k) return false;
    }
  }
  return true;
}

inline int naive_phi(const TransitionSequence& t) {
  int n = t.length();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
      if (!seen.insert(t.labels()[(s + i) % n]).second) break;
      best = std::max(best, i + 1);
    }
  }
  return best;
}

inline int naive_xi(const TransitionSequence& t) {
  int n = t.length();
  for (int m = n; m >= 1; --m) {
    bool all_distinct = true;
    for (int s = 0; s < n && all_distinct; ++s) {
      std::set<int> seen;
      for (int i = 0; i < m; ++i) {
        if (!seen.insert(t.labels()[(s + i) % n]).second) {
          all_distinct = false;
          break;
        }
      }
    }
    if (all_distinct) return m;
  }
  return 0;
}

// Random self-avoiding closed walk from the origin; nullopt on dead ends.
inline std::optional<TransitionSequence> try_random_circuit(std::mt19937& rng, int d,
                                                            int target_len) {
  std::uint64_t cur = 0;
  std::set<std::uint64_t> visited{0};
  std::vector<int> labels;
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i + 1;
  auto bit = [](int lab) { return std::uint64_t{1} << (lab - 1); };
  auto weight = [](std::uint64_t v) {
    int w = 0;
    while (v) {
      w += static_cast<int>(v & 1);
      v >>= 1;
    }
    return w;
  };
  while (static_cast<int>(labels.size()) < target_len) {
    int remaining = target_len - static_cast<int>(labels.size());
    std::shuffle(order.begin(), order.end(), rng);
    bool stepped = false;
    for (int lab : order) {
      std::uint64_t next = cur ^ bit(lab);
      if (remaining == 1) {
        if (next != 0) continue;
      } else {
        if (visited.count(next)) continue;
        int w = weight(next);
        // must still be able to reach the origin in remaining-1 steps
        if (w > remaining - 1 || (w % 2) != ((remaining - 1) % 2)) continue;
      }
      cur = next;
      visited.insert(next);
      labels.push_back(lab);
      stepped = true;
      break;
    }
    if (!stepped) return std::nullopt;
  }
  TransitionSequence t(labels, d);
  if (!ccodes::is_circuit(t)) return std::nullopt;
  return t;
}

inline TransitionSequence random_circuit(std::mt19937& rng, int d, int min_len, int max_len) {
  for (;;) {
    int half_range = (max_len - min_len) / 2;
    int target = min_len + 2 * (half_range > 0 ? static_cast<int>(rng() % (half_range + 1)) : 0);
    if (auto t = try_random_circuit(rng, d, target)) return *t;
  }
}

// Swap two positions; preserves label counts, often breaks the spread and
// sometimes circuit-ness.
inline TransitionSequence swap_mutant(std::mt19937& rng, const TransitionSequence& t) {
  std::vector<int> labels = t.labels();
  int n = static_cast<int>(labels.size());
  int i = static_cast<int>(rng() % n);
  int j = static_cast<int>(rng() % n);
  std::swap(labels[i], labels[j]);
  return TransitionSequence(labels, t.dimension());
}

// Replace one transition by a random other label; never a circuit again
// (the flipped coordinates no longer cancel).
inline TransitionSequence substitution_mutant(std::mt19937& rng, const TransitionSequence& t) {
  std::vector<int> labels = t.labels();
  int n = static_cast<int>(labels.size());
  int i = static_cast<int>(rng() % n);
  int replacement = 1 + static_cast<int>(rng() % t.dimension());
  while (replacement == labels[i]) replacement = 1 + static_cast<int>(rng() % t.dimension());
  labels[i] = replacement;
  return TransitionSequence(labels, t.dimension());
}

}  // namespace testutil
