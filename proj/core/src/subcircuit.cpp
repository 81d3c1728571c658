#include "ccodes/subcircuit.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "ccodes/analysis.hpp"

namespace ccodes {

Projection deimer_project(const TransitionSequence& t, int i) {
  if (i < 1 || i > t.dimension()) {
    throw precondition_error("deimer_project: label " + std::to_string(i) +
                             " outside [1, " + std::to_string(t.dimension()) + "]");
  }
  Projection p;
  p.source = t;
  p.removed_label = i;
  std::vector<int> labels;
  labels.reserve(t.length());
  for (int lab : t.labels()) {
    if (lab == i) {
      ++p.occurrences;
    } else {
      labels.push_back(lab > i ? lab - 1 : lab);
    }
  }
  if (p.occurrences == 0) {
    throw precondition_error("deimer_project: label " + std::to_string(i) +
                             " does not occur");
  }
  p.result = TransitionSequence(std::move(labels), t.dimension() - 1);
  return p;
}

std::vector<SubcircuitCheck> deimer_check(const TransitionSequence& t, int k) {
  if (!is_circuit(t)) {
    throw precondition_error("deimer_check: sequence is not a circuit");
  }
  if (k < 1) {
    throw precondition_error("deimer_check: k must be >= 1");
  }
  std::vector<int> present;
  for (int i = 1; i <= t.dimension(); ++i) {
    for (int lab : t.labels()) {
      if (lab == i) {
        present.push_back(i);
        break;
      }
    }
  }

  std::vector<SubcircuitCheck> rows(present.size());
  auto run_one = [&](std::size_t idx) {
    int i = present[idx];
    Projection p = deimer_project(t, i);
    SubcircuitCheck& row = rows[idx];
    row.removed_label = i;
    row.occurrences = p.occurrences;
    row.length = p.result.length();
    row.required_spread = k - 1;
    row.circuit = is_circuit(p.result);
    row.length_ok = row.length >= 2 * (k - 1);
    row.spread_ok = row.circuit && k >= 2 && is_spread_at_least(p.result, k - 1);
    if (k == 1) row.spread_ok = true;
  };

  // Per-label fan-out: rows are independent and the conjunction is
  // schedule-invariant.
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = std::min<std::size_t>(std::max(hw, 1u), rows.size());
  if (workers <= 1 || rows.size() < 8) {
    for (std::size_t idx = 0; idx < rows.size(); ++idx) run_one(idx);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t idx = w; idx < rows.size(); idx += workers) run_one(idx);
      });
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

bool spread_via_characterization(const TransitionSequence& t, int k) {
  if (k < 2) {
    throw precondition_error("spread_via_characterization: k must be >= 2");
  }
  if (t.dimension() < k) {
    throw precondition_error("spread_via_characterization: d < k");
  }
  if (!is_circuit(t)) {
    throw precondition_error("spread_via_characterization: sequence is not a circuit");
  }
  if (t.length() <= 4 * (k - 1)) {
    throw precondition_error("spread_via_characterization: N <= 4(k-1)");
  }
  auto rows = deimer_check(t, k);
  return std::all_of(rows.begin(), rows.end(),
                     [](const SubcircuitCheck& row) { return row.passes(); });
}

}  // namespace ccodes
