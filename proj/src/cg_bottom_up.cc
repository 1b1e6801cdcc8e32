#include "cg_bottom_up.h"

#include "heuristic.h"

#include <algorithm>
#include <cassert>

using namespace std;

namespace mvplan {

namespace {

/*
  Greedy Dijkstra over one pruned domain transition graph. Extraction
  order is (cost, sequence number of the last improving push), which is
  exactly the order a cost-keyed bucket queue with FIFO buckets pops live
  entries in.
*/
vector<int> solve_local_subproblem(const CompiledTask &compiled,
                                   const ExtendedState &extended,
                                   const BottomUpTables &tables, int var,
                                   int start_value) {
    const Dtg &dtg = compiled.working_dtgs[var];
    const vector<int> &parent_vars =
        compiled.causal_graph.pruned_predecessors[var];

    int n = dtg.num_values;
    vector<int> cost(n, COST_INFINITY);
    vector<int> push_seq(n, -1);
    vector<int> reached_by(n, -1);
    vector<vector<int>> committed(n);
    vector<bool> closed(n, false);

    vector<int> initial_local;
    for (int parent : parent_vars)
        initial_local.push_back(extended.values[parent]);

    cost[start_value] = 0;
    push_seq[start_value] = 0;
    committed[start_value] = initial_local;
    int next_seq = 1;

    auto parent_position = [&](int parent_var) {
        auto it = lower_bound(parent_vars.begin(), parent_vars.end(), parent_var);
        assert(it != parent_vars.end() && *it == parent_var);
        return static_cast<int>(it - parent_vars.begin());
    };

    while (true) {
        int vertex = -1;
        for (int candidate = 0; candidate < n; ++candidate) {
            if (closed[candidate] || cost[candidate] == COST_INFINITY)
                continue;
            if (vertex == -1 || cost[candidate] < cost[vertex] ||
                (cost[candidate] == cost[vertex] &&
                 push_seq[candidate] < push_seq[vertex]))
                vertex = candidate;
        }
        if (vertex == -1)
            break;
        closed[vertex] = true;

        if (reached_by[vertex] != -1) {
            const Transition &chosen = dtg.transitions[reached_by[vertex]];
            vector<int> local = committed[chosen.from];
            for (const Fact &fact : chosen.condition)
                local[parent_position(fact.var)] = fact.value;
            committed[vertex] = move(local);
        }

        for (int t_index : dtg.outgoing[vertex]) {
            const Transition &transition = dtg.transitions[t_index];
            if (transition.to == vertex)
                continue;
            int transition_cost = transition.weight;
            for (const Fact &fact : transition.condition) {
                int from_value = committed[vertex][parent_position(fact.var)];
                int term = 0;
                if (from_value != fact.value)
                    term = tables.costs[fact.var][from_value][fact.value];
                transition_cost = guarded_add(transition_cost, term);
                if (transition_cost == COST_INFINITY)
                    break;
            }
            if (transition_cost == COST_INFINITY)
                continue;
            int new_cost = guarded_add(cost[vertex], transition_cost);
            if (new_cost < cost[transition.to]) {
                cost[transition.to] = new_cost;
                reached_by[transition.to] = t_index;
                push_seq[transition.to] = next_seq++;
            }
        }
    }
    return cost;
}

}    // namespace

BottomUpTables compute_cost_tables_bottom_up(const CompiledTask &compiled,
                                             const ExtendedState &extended) {
    int n = compiled.task.num_variables();
    vector<int> by_level(n);
    for (int var = 0; var < n; ++var)
        by_level[compiled.causal_graph.level[var]] = var;

    BottomUpTables tables;
    tables.costs.resize(n);
    for (int level = 0; level < n; ++level) {
        int var = by_level[level];
        int domain = compiled.task.variables[var].domain_size();
        tables.costs[var].resize(domain);
        for (int start = 0; start < domain; ++start)
            tables.costs[var][start] =
                solve_local_subproblem(compiled, extended, tables, var, start);
    }
    return tables;
}

}    // namespace mvplan
