#ifndef MVPLAN_CG_BOTTOM_UP_H
#define MVPLAN_CG_BOTTOM_UP_H

#include "compiled_task.h"

#include <vector>

namespace mvplan {

/*
  Cost tables for every variable and start value, computed bottom-up over
  a topological order of the pruned causal graph with the same greedy
  local-subproblem policy and tie-breaking as the top-down recursive
  computation. The two routes must agree entry for entry; the search
  itself only ever uses the recursive one.
*/
struct BottomUpTables {
    // costs[var][start][target]
    std::vector<std::vector<std::vector<int>>> costs;
};

BottomUpTables compute_cost_tables_bottom_up(const CompiledTask &compiled,
                                             const ExtendedState &extended);

}    // namespace mvplan

#endif
