#include "cg_heuristic.h"

#include <algorithm>
#include <cassert>
#include <deque>

using namespace std;

namespace mvplan {

CgHeuristic::CgHeuristic(const CompiledTask &compiled, bool use_global_cache,
                         int global_cache_max_ancestors)
    : compiled(compiled),
      use_global_cache(use_global_cache),
      global_cache_max_ancestors(global_cache_max_ancestors) {
    /*
      Pruned-graph ancestors per variable. Levels strictly increase along
      pruned arcs, so filling in level order suffices.
    */
    int n = compiled.task.num_variables();
    ancestors.resize(n);
    vector<int> by_level(n);
    for (int var = 0; var < n; ++var)
        by_level[compiled.causal_graph.level[var]] = var;
    for (int level = 0; level < n; ++level) {
        int var = by_level[level];
        vector<int> result;
        for (int parent : compiled.causal_graph.pruned_predecessors[var]) {
            result.push_back(parent);
            result.insert(result.end(), ancestors[parent].begin(),
                          ancestors[parent].end());
        }
        sort(result.begin(), result.end());
        result.erase(unique(result.begin(), result.end()), result.end());
        ancestors[var] = move(result);
    }
}

void CgHeuristic::set_context(const ExtendedState &extended) {
    context = extended;
    has_context = true;
    state_cache.clear();
}

shared_ptr<const CostTable> CgHeuristic::get_table(int var, int start_value) {
    auto key = make_pair(var, start_value);
    auto it = state_cache.find(key);
    if (it != state_cache.end())
        return it->second;

    bool global = use_global_cache &&
                  static_cast<int>(ancestors[var].size()) <=
                      global_cache_max_ancestors;
    vector<int> global_key;
    if (global) {
        global_key.reserve(2 + ancestors[var].size());
        global_key.push_back(var);
        global_key.push_back(start_value);
        for (int ancestor : ancestors[var])
            global_key.push_back(context.values[ancestor]);
        auto git = global_cache.find(global_key);
        if (git != global_cache.end()) {
            state_cache.emplace(key, git->second);
            return git->second;
        }
    }

    shared_ptr<const CostTable> table = solve_local_problem(var, start_value);
    state_cache.emplace(key, table);
    if (global)
        global_cache.emplace(move(global_key), table);
    return table;
}

shared_ptr<const CostTable> CgHeuristic::solve_local_problem(int var,
                                                             int start_value) {
    const Dtg &dtg = compiled.working_dtgs[var];
    const vector<int> &parent_vars = parents(var);

    auto table = make_shared<CostTable>();
    table->var = var;
    table->start_value = start_value;
    table->costs.assign(dtg.num_values, COST_INFINITY);
    table->reached_by.assign(dtg.num_values, -1);
    table->local_state.assign(dtg.num_values, {});

    vector<int> initial_local;
    initial_local.reserve(parent_vars.size());
    for (int parent : parent_vars)
        initial_local.push_back(context.values[parent]);

    table->costs[start_value] = 0;
    table->local_state[start_value] = initial_local;

    // Bucket priority queue, FIFO within a bucket.
    map<int, deque<int>> buckets;
    buckets[0].push_back(start_value);
    vector<bool> closed(dtg.num_values, false);

    auto parent_position = [&](int parent_var) {
        auto it = lower_bound(parent_vars.begin(), parent_vars.end(), parent_var);
        assert(it != parent_vars.end() && *it == parent_var);
        return static_cast<int>(it - parent_vars.begin());
    };

    while (!buckets.empty()) {
        auto bucket_it = buckets.begin();
        int cost = bucket_it->first;
        int vertex = bucket_it->second.front();
        bucket_it->second.pop_front();
        if (bucket_it->second.empty())
            buckets.erase(bucket_it);
        if (closed[vertex] || cost > table->costs[vertex])
            continue;    // stale entry
        closed[vertex] = true;

        /*
          Greedy commitment: the local state of an extracted vertex is the
          source's local state updated by the conditions the chosen
          transition consumed.
        */
        if (table->reached_by[vertex] != -1) {
            const Transition &chosen = dtg.transitions[table->reached_by[vertex]];
            vector<int> local = table->local_state[chosen.from];
            for (const Fact &fact : chosen.condition)
                local[parent_position(fact.var)] = fact.value;
            table->local_state[vertex] = move(local);
        }

        for (int t_index : dtg.outgoing[vertex]) {
            const Transition &transition = dtg.transitions[t_index];
            if (transition.to == vertex)
                continue;
            int transition_cost = transition.weight;
            for (const Fact &fact : transition.condition) {
                int from_value =
                    table->local_state[vertex][parent_position(fact.var)];
                int term = 0;
                if (from_value != fact.value)
                    term = get_table(fact.var, from_value)->costs[fact.value];
                transition_cost = guarded_add(transition_cost, term);
                if (transition_cost == COST_INFINITY)
                    break;
            }
            if (transition_cost == COST_INFINITY)
                continue;
            int new_cost = guarded_add(table->costs[vertex], transition_cost);
            if (new_cost < table->costs[transition.to]) {
                table->costs[transition.to] = new_cost;
                table->reached_by[transition.to] = t_index;
                buckets[new_cost].push_back(transition.to);
            }
        }
    }
    return table;
}

const CostTable &CgHeuristic::cost_table(const ExtendedState &extended, int var,
                                         int start_value) {
    if (!has_context || !(context == extended))
        set_context(extended);
    get_table(var, start_value);
    return *state_cache.at(make_pair(var, start_value));
}

HeuristicResult CgHeuristic::compute(const State &, const ExtendedState &extended) {
    set_context(extended);

    HeuristicResult result;
    for (const Fact &goal : compiled.task.goal) {
        int start = extended.values[goal.var];
        shared_ptr<const CostTable> table = get_table(goal.var, start);
        result.value = guarded_add(result.value, table->costs[goal.value]);
        if (result.value == COST_INFINITY)
            break;
    }

    if (result.value == COST_INFINITY || result.value == 0)
        return result;

    for (const Fact &goal : compiled.task.goal) {
        int start = extended.values[goal.var];
        if (start != goal.value)
            trace_helpful(goal.var, start, goal.value, result.preferred);
    }
    sort(result.preferred.begin(), result.preferred.end());
    result.preferred.erase(
        unique(result.preferred.begin(), result.preferred.end()),
        result.preferred.end());
    return result;
}

void CgHeuristic::trace_helpful(int var, int from, int to, vector<int> &out) {
    if (from == to)
        return;
    shared_ptr<const CostTable> table = get_table(var, from);
    if (table->costs[to] == COST_INFINITY)
        return;

    // First transition on the committed path from `from` to `to`.
    int cursor = to;
    int first = -1;
    while (cursor != from) {
        first = table->reached_by[cursor];
        if (first == -1)
            return;
        cursor = compiled.working_dtgs[var].transitions[first].from;
    }
    const Transition &transition = compiled.working_dtgs[var].transitions[first];

    if (transition.origin.kind == TransitionOrigin::operator_effect) {
        const Operator &op = compiled.task.operators[transition.origin.index];
        if (holds_in(op.precondition, context)) {
            out.push_back(transition.origin.index);
            return;
        }
    }
    /*
      Not an applicable operator: chase the unsatisfied conditions through
      the paths their cost computations committed to. The pruned causal
      graph is acyclic, so this terminates.
    */
    for (const Fact &fact : transition.condition) {
        int current_value = context.values[fact.var];
        if (current_value != fact.value)
            trace_helpful(fact.var, current_value, fact.value, out);
    }
}

}    // namespace mvplan
