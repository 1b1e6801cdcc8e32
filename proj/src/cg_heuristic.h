#ifndef MVPLAN_CG_HEURISTIC_H
#define MVPLAN_CG_HEURISTIC_H

#include "compiled_task.h"
#include "heuristic.h"

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace mvplan {

/*
  Cost table of one local subproblem: the estimated costs of changing a
  variable from a fixed start value to every other value, computed by a
  Dijkstra search over the pruned domain transition graph. Transition
  costs add the recursively estimated costs of their conditions, taken
  against the local state the greedy policy committed to at the source
  vertex. Unreachable values get the infinite cost, which cannot be
  trusted: the local planner is incomplete.
*/
struct CostTable {
    int var = -1;
    int start_value = -1;
    std::vector<int> costs;         // per target value
    std::vector<int> reached_by;    // transition index, -1 for the start
    // Committed values of the pruned-graph parents per reached vertex,
    // in parents() order.
    std::vector<std::vector<int>> local_state;
};

class CgHeuristic : public Heuristic {
public:
    explicit CgHeuristic(const CompiledTask &compiled,
                         bool use_global_cache = true,
                         int global_cache_max_ancestors = 5);

    /*
      Sum of the goal variables' table entries, infinity-absorbing. The
      preferred operators are the helpful transitions: applicable
      operators found by recursively tracing the first transition of each
      traced local path. The set can be empty.
    */
    HeuristicResult compute(const State &state,
                            const ExtendedState &extended) override;

    std::string name() const override {
        return "cg";
    }

    /*
      The table for one local subproblem in the context of the given
      state; computes it on demand. The reference stays valid until the
      next compute()/cost_table() call with a different state.
    */
    const CostTable &cost_table(const ExtendedState &extended, int var,
                                int start_value);

    const std::vector<int> &parents(int var) const {
        return compiled.causal_graph.pruned_predecessors[var];
    }

private:
    const CompiledTask &compiled;
    bool use_global_cache;
    int global_cache_max_ancestors;

    std::vector<std::vector<int>> ancestors;    // pruned-graph, per variable

    ExtendedState context;    // state the per-state cache refers to
    bool has_context = false;
    std::map<std::pair<int, int>, std::shared_ptr<const CostTable>> state_cache;
    // Keyed by (var, start value, ancestor valuation).
    std::map<std::vector<int>, std::shared_ptr<const CostTable>> global_cache;

    void set_context(const ExtendedState &extended);
    std::shared_ptr<const CostTable> get_table(int var, int start_value);
    std::shared_ptr<const CostTable> solve_local_problem(int var, int start_value);
    void trace_helpful(int var, int from, int to, std::vector<int> &out);
};

}    // namespace mvplan

#endif
