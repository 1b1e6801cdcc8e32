#include "easy_plan.h"

#include "causal_graph.h"
#include "domain_transition_graph.h"

#include <algorithm>
#include <cassert>
#include <deque>

using namespace std;

namespace mvplan {

namespace {

bool strongly_connected(const Dtg &dtg) {
    for (int source = 0; source < dtg.num_values; ++source) {
        vector<bool> seen(dtg.num_values, false);
        deque<int> queue{source};
        seen[source] = true;
        int reached = 1;
        while (!queue.empty()) {
            int vertex = queue.front();
            queue.pop_front();
            for (int t_index : dtg.outgoing[vertex]) {
                int to = dtg.transitions[t_index].to;
                if (!seen[to]) {
                    seen[to] = true;
                    ++reached;
                    queue.push_back(to);
                }
            }
        }
        if (reached != dtg.num_values)
            return false;
    }
    return true;
}

struct EasySolver {
    const Task &task;
    vector<Dtg> dtgs;
    CausalGraph cg;
    State state;
    EasyPlanResult result;

    explicit EasySolver(const Task &task) : task(task), state(task.initial) {
    }

    // BFS over the domain transition graph, ignoring conditions: strong
    // connectedness guarantees a path, the recursion makes it applicable.
    vector<int> find_path(int var, int from, int to) {
        ++result.dtg_searches;
        const Dtg &dtg = dtgs[var];
        vector<int> reached_by(dtg.num_values, -1);
        vector<bool> seen(dtg.num_values, false);
        deque<int> queue{from};
        seen[from] = true;
        while (!queue.empty()) {
            int vertex = queue.front();
            queue.pop_front();
            if (vertex == to)
                break;
            for (int t_index : dtg.outgoing[vertex]) {
                int next = dtg.transitions[t_index].to;
                if (!seen[next]) {
                    seen[next] = true;
                    reached_by[next] = t_index;
                    queue.push_back(next);
                }
            }
        }
        assert(seen[to]);
        vector<int> path;
        int cursor = to;
        while (cursor != from) {
            int t_index = reached_by[cursor];
            path.push_back(t_index);
            cursor = dtgs[var].transitions[t_index].from;
        }
        reverse(path.begin(), path.end());
        return path;
    }

    int value_of(int var) const {
        return state.values[task.fluent_index(var)];
    }

    /*
      Moves var to target. Transition conditions are achieved highest
      causal graph level first: a subplan for a condition variable may
      move that variable's own ancestors around, and those ancestors are
      exactly the lower-level conditions still to be set.
    */
    void achieve(int var, int target) {
        if (value_of(var) == target)
            return;
        vector<int> path = find_path(var, value_of(var), target);
        for (int t_index : path) {
            const Transition &transition = dtgs[var].transitions[t_index];
            PartialAssignment conditions = transition.condition;
            stable_sort(conditions.begin(), conditions.end(),
                        [&](const Fact &a, const Fact &b) {
                            return cg.level[a.var] > cg.level[b.var];
                        });
            for (const Fact &fact : conditions)
                achieve(fact.var, fact.value);
            assert(transition.origin.kind == TransitionOrigin::operator_effect);
            int op_id = transition.origin.index;
            state = apply(task, state, task.operators[op_id]);
            result.plan.push_back(op_id);
        }
        assert(value_of(var) == target);
    }
};

}    // namespace

EasyPlanResult solve_easy_mpt(const Task &task) {
    EasyPlanResult result;
    if (!task.derived().empty()) {
        result.reason = "task has derived variables";
        return result;
    }
    /*
      Trivially false conditions (two values required of one variable)
      cannot be expressed here: conditions are partial assignments by
      construction, so only the remaining two premises need checking.
    */

    EasySolver solver(task);
    solver.dtgs.reserve(task.num_variables());
    for (int var = 0; var < task.num_variables(); ++var)
        solver.dtgs.push_back(build_dtg(task, var));
    solver.cg = build_causal_graph(task, solver.dtgs);
    if (!solver.cg.is_acyclic()) {
        result.reason = "causal graph is cyclic";
        return result;
    }
    for (int var = 0; var < task.num_variables(); ++var) {
        if (!strongly_connected(solver.dtgs[var])) {
            result.reason = "domain transition graph of " +
                            task.variables[var].name +
                            " is not strongly connected";
            return result;
        }
    }

    /*
      Sinks first: once a sink's goal value is set, nothing later in the
      run can touch the variable again, so it can be dropped.
    */
    vector<char> remaining(task.num_variables(), 1);
    int left = task.num_variables();
    while (left > 0) {
        int sink = -1;
        for (int var = 0; var < task.num_variables() && sink == -1; ++var) {
            if (!remaining[var])
                continue;
            bool has_successor = false;
            for (int succ : solver.cg.successors[var]) {
                if (remaining[succ]) {
                    has_successor = true;
                    break;
                }
            }
            if (!has_successor)
                sink = var;
        }
        assert(sink != -1);
        optional<int> goal_value = assigned_value(task.goal, sink);
        if (goal_value)
            solver.achieve(sink, *goal_value);
        remaining[sink] = 0;
        --left;
    }

    result = move(solver.result);
    result.status = EasyPlanResult::Status::plan;
    assert(validate_plan(task, result.plan).ok);
    return result;
}

}    // namespace mvplan
