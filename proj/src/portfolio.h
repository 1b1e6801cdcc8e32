#ifndef MVPLAN_PORTFOLIO_H
#define MVPLAN_PORTFOLIO_H

#include "compiled_task.h"
#include "search_types.h"

#include <vector>

namespace mvplan {

/*
  Runs several engine configurations with fair round-robin interleaving
  by expansion count; the first plan wins, and unsolvable is reported
  only when a sound member (one whose exhaustion is a proof) establishes
  it. Deterministic: members advance one step per turn in declaration
  order.
*/
SearchResult run_portfolio(const CompiledTask &compiled,
                           const std::vector<SearchConfig> &members);

/*
  The six stock configurations: greedy best-first search without
  preferred operators, with helpful transitions, with the
  helpful-action fallback; multi-heuristic best-first search without and
  with preferred operators; focused iterative-broadening search.
*/
std::vector<SearchConfig> default_portfolio(const SearchLimits &limits);

}    // namespace mvplan

#endif
