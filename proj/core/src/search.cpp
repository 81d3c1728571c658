#include "ccodes/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "ccodes/analysis.hpp"
#include "ccodes/bounds.hpp"
#include "ccodes/construct.hpp"

namespace ccodes {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t label_bit(int label) { return std::uint64_t{1} << (label - 1); }

// The hard array bound; far beyond every provable cap at feasible (d,k).
constexpr int kArrayCap = 4096;

struct Searcher {
  // problem
  int d = 0;
  int k = 0;
  int min_phi = 0;  // 0 = unset
  bool symmetric = false;
  int min_len = 4;
  int cap = kArrayCap;      // inclusive bound on the total length
  bool cap_internal = false;  // cap is the array bound, not a proven one
  std::int64_t node_budget = kDefaultNodeBudget;
  Clock::time_point deadline;

  // state
  std::vector<int> labels;
  std::vector<std::uint64_t> verts;  // verts[t] = vertex reached after t transitions
  int used = 0;
  std::int64_t nodes = 0;
  bool aborted = false;
  bool cap_hit = false;

  // incumbent
  int best_len = 0;
  std::vector<int> best;

  // Full verification through the public checkers; the search's own pruning
  // never certifies a witness.
  void offer(const std::vector<int>& cand) {
    int maxlab = 0;
    for (int lab : cand) maxlab = std::max(maxlab, lab);
    TransitionSequence seq(cand, maxlab);
    if (!is_circuit(seq)) return;
    if (!is_spread_at_least(seq, k)) return;
    if (min_phi > 0 && max_bit_run(seq) < min_phi) return;
    if (symmetric && !is_symmetric(seq)) return;
    int n = static_cast<int>(cand.size());
    if (n < min_len || n > cap) return;
    if (n > best_len || (n == best_len && cand < best)) {
      best_len = n;
      best = cand;
    }
  }

  void try_close(int t, int forced, int lab) {
    int n = t + 1;
    if (n < min_len) return;
    if (n > cap) {
      if (cap_internal) cap_hit = true;
      return;
    }
    if (forced != 0 && forced != n) return;
    std::vector<int> cand(labels.begin(), labels.begin() + t);
    cand.push_back(lab);
    offer(cand);
  }

  void try_complete_symmetric(int t, int forced) {
    int n = 2 * t;
    if (n < min_len || n > cap) return;
    if (forced != 0 && forced != n) return;
    std::uint64_t half_end = verts[t];
    if (half_end == 0) return;  // second half would retrace the first
    // Antipodal pairs sit at code distance t >= k+1, so they need cube
    // distance >= k, and all of them share the same one.
    if (std::popcount(half_end) < k) return;
    std::vector<int> cand(labels.begin(), labels.begin() + t);
    cand.insert(cand.end(), labels.begin(), labels.begin() + t);
    offer(cand);
  }

  void dfs(int t, int forced) {
    if (nodes >= node_budget) {
      aborted = true;
      return;
    }
    ++nodes;
    if ((nodes & 4095) == 0 && Clock::now() >= deadline) {
      aborted = true;
      return;
    }
    if (symmetric) try_complete_symmetric(t, forced);

    int last = labels[t - 1];
    int maxlab = std::min(used + 1, d);
    std::uint64_t cur = verts[t];
    for (int lab = 1; lab <= maxlab; ++lab) {
      if (lab == last) continue;
      std::uint64_t v = cur ^ label_bit(lab);
      if (v == 0) {
        if (!symmetric) try_close(t, forced, lab);
        continue;
      }
      // Capacity: after this extension the open path has t+1 transitions,
      // so any closure is at N >= t+2 (or N = 2(t+1) symmetric).
      if (symmetric ? (2 * (t + 1) > cap) : (t + 2 > cap)) {
        if (cap_internal) cap_hit = true;
        continue;
      }

      // Distance scan against every previous vertex.  A pair at cube
      // distance c < k and path separation len > c pins the final length
      // to exactly len + c (the shorter arc must realize c); two different
      // pinned lengths, or a pinned length below the minimum, kill the
      // branch.  c = 0 is a revisited vertex.
      bool ok = true;
      int nf = forced;
      for (int m = t; m >= 0; --m) {
        int c = std::popcount(verts[m] ^ v);
        if (c >= k) continue;
        if (c == 0) {
          ok = false;
          break;
        }
        int len = t + 1 - m;
        if (len == c) continue;
        int f = len + c;
        if (f < min_len || (nf != 0 && nf != f)) {
          ok = false;
          break;
        }
        nf = f;
      }
      if (!ok) continue;
      if (nf != 0) {
        if (nf > cap) continue;
        if (symmetric) {
          if (nf % 2 != 0 || nf / 2 < t + 1) continue;
        } else {
          if (nf < t + 2) continue;
        }
      }

      labels[t] = lab;
      verts[t + 1] = v;
      int prev_used = used;
      used = std::max(used, lab);
      dfs(t + 1, nf);
      used = prev_used;
      if (aborted) return;
    }
  }
};

void apply_cap(Searcher& s, int value) { s.cap = std::min(s.cap, value); }

}  // namespace

SearchResult search_max(const SearchProblem& p) {
  if (p.k < 1 || p.d < p.k) {
    throw precondition_error("search requires d >= k >= 1");
  }
  if (p.d > 64) {
    throw precondition_error("search requires d <= 64");
  }
  if (p.min_phi && (*p.min_phi < 1 || *p.min_phi > p.d)) {
    throw precondition_error("search requires 1 <= min_phi <= d");
  }
  if (p.max_length_hint && *p.max_length_hint < 4) {
    throw precondition_error("max_length_hint below the shortest circuit");
  }
  if (p.node_budget && *p.node_budget < 1) {
    throw precondition_error("node budget must be positive");
  }

  Searcher s;
  s.d = p.d;
  s.k = p.k;
  s.min_phi = p.min_phi.value_or(0);
  s.symmetric = p.symmetric;
  s.min_len = std::max(2 * p.k + 2, 4);
  s.node_budget = p.node_budget.value_or(kDefaultNodeBudget);
  auto budget = p.time_budget.value_or(kDefaultTimeBudget);
  auto start = Clock::now();
  s.deadline = start + std::chrono::duration_cast<Clock::duration>(budget);

  // Proven length caps keep the tree finite without costing exhaustiveness.
  s.cap = std::numeric_limits<int>::max();
  if (p.d < 31) apply_cap(s, 1 << p.d);  // at most 2^d distinct vertices
  if (p.max_length_hint) apply_cap(s, *p.max_length_hint);
  if (p.symmetric && s.min_phi > p.k) {
    // Symmetric codes with maximum phi relative to (d,k) have proven caps.
    int l = s.min_phi - p.k;
    if (p.d == (3 * p.k + l + 1) / 2 && (3 * p.k + l + 1) % 2 == 0) {
      if (p.k % 2 == 1 && l % 2 == 0 && l >= 2 && p.k >= 2 * l + 1) {
        apply_cap(s, 4 * p.k + 2 * l);
      } else if (p.k % 2 == 0 && l % 2 == 1 && l >= 3 && p.k >= 2 * l - 2) {
        apply_cap(s, 4 * p.k + 2 * l + 2);
      }
    }
  }
  if (kArrayCap < s.cap) {
    s.cap = kArrayCap;
    s.cap_internal = true;
  }

  if (p.seed) {
    auto [seq, m] = normalize(*p.seed);
    int n = seq.length();
    bool good = n >= s.min_len && n <= s.cap && is_circuit(seq) &&
                is_spread_at_least(seq, p.k) &&
                (s.min_phi == 0 || max_bit_run(seq) >= s.min_phi) &&
                (!p.symmetric || is_symmetric(seq));
    if (!good) {
      throw precondition_error("seed does not satisfy the requested code properties");
    }
    s.best_len = n;
    s.best = seq.labels();
  }

  // Root: the prefix 1..max(k+1, r) of forced-distinct transitions.  Every
  // admissible cycle has xi >= k+1 (it is longer than 2k), and when phi >= r
  // is requested some rotation starts with r distinct transitions, so some
  // rotation + relabeling of every isomorphism class carries this prefix.
  int m = std::max(p.k + 1, s.min_phi);
  SearchResult result;
  if (m <= p.d && (s.symmetric ? 2 * m <= s.cap : m + 1 <= s.cap)) {
    s.labels.assign(s.symmetric ? s.cap / 2 : s.cap, 0);
    s.verts.assign(s.labels.size() + 1, 0);
    std::uint64_t cur = 0;
    for (int i = 0; i < m; ++i) {
      s.labels[i] = i + 1;
      s.verts[i] = cur;
      cur ^= label_bit(i + 1);
    }
    s.verts[m] = cur;
    s.used = m;
    s.dfs(m, 0);
  }

  result.best_length = s.best_len;
  if (!s.best.empty()) {
    result.witness = TransitionSequence(s.best, s.d);
  }
  result.exhaustive = !s.aborted && !s.cap_hit;
  result.nodes_explored = s.nodes;
  result.elapsed = Clock::now() - start;
  return result;
}

SearchResult search_max_symmetric(SearchProblem p) {
  p.symmetric = true;
  return search_max(p);
}

SearchResult probe_conjecture(int k, int l, std::optional<std::int64_t> node_budget,
                              std::optional<std::chrono::duration<double>> time_budget) {
  if (k < 9 || k % 2 == 0) {
    throw precondition_error("probe_conjecture requires odd k >= 9");
  }
  if (l < 2 || l % 2 != 0) {
    throw precondition_error("probe_conjecture requires even l >= 2");
  }
  if (k < 2 * l + 1) {
    throw precondition_error("probe_conjecture requires k >= 2l+1");
  }
  SearchProblem p;
  p.d = (3 * k + l + 1) / 2;
  p.k = k;
  p.node_budget = node_budget;
  p.time_budget = time_budget;
  if (auto exact = douglas_exact(p.d, k)) {
    p.max_length_hint = static_cast<int>(*exact);
  }
  p.seed = construct_form(k, l);
  return search_max(p);
}

}  // namespace ccodes
