#include "ff_heuristic.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

using namespace std;

namespace mvplan {

FfHeuristic::FfHeuristic(const CompiledTask &compiled) : compiled(compiled) {
    const Task &task = compiled.task;
    fact_offset.resize(task.num_variables());
    for (int var = 0; var < task.num_variables(); ++var) {
        fact_offset[var] = num_facts;
        num_facts += task.variables[var].domain_size();
    }

    auto add_unary = [&](const PartialAssignment &pre_a,
                         const PartialAssignment &pre_b, int var, int value,
                         int op_id) {
        UnaryOp unary;
        for (const Fact &fact : pre_a)
            unary.preconditions.push_back(fact_id(fact.var, fact.value));
        for (const Fact &fact : pre_b)
            unary.preconditions.push_back(fact_id(fact.var, fact.value));
        sort(unary.preconditions.begin(), unary.preconditions.end());
        unary.preconditions.erase(
            unique(unary.preconditions.begin(), unary.preconditions.end()),
            unary.preconditions.end());
        unary.effect = fact_id(var, value);
        unary.op_id = op_id;
        unary_ops.push_back(move(unary));
    };

    // One relaxed achiever per operator effect; the effect condition
    // counts as part of the precondition.
    for (size_t i = 0; i < task.operators.size(); ++i) {
        const Operator &op = task.operators[i];
        for (const Effect &effect : op.effects) {
            if (!merge_assignments(op.precondition, effect.condition))
                continue;    // never triggers
            add_unary(op.precondition, effect.condition, effect.var,
                      effect.value, static_cast<int>(i));
        }
    }
    num_operator_unaries = static_cast<int>(unary_ops.size());

    for (const Axiom &axiom : task.axioms)
        add_unary(axiom.body, {}, axiom.var, axiom.value, -1);

    for (int var = 0; var < task.num_variables(); ++var)
        for (const PartialAssignment &disjunct : compiled.negation[var])
            add_unary(disjunct, {}, var, UNDEFINED_VALUE, -1);

    precondition_of.resize(num_facts);
    for (size_t i = 0; i < unary_ops.size(); ++i)
        for (int fact : unary_ops[i].preconditions)
            precondition_of[fact].push_back(static_cast<int>(i));

    fact_level.resize(num_facts);
    supporter.resize(num_facts);
    unsatisfied.resize(unary_ops.size());
}

HeuristicResult FfHeuristic::compute(const State &, const ExtendedState &extended) {
    const Task &task = compiled.task;

    fill(fact_level.begin(), fact_level.end(), -1);
    fill(supporter.begin(), supporter.end(), -1);
    for (size_t i = 0; i < unary_ops.size(); ++i)
        unsatisfied[i] = static_cast<int>(unary_ops[i].preconditions.size());

    /*
      Forward chaining in waves. Zero-cost achievers (axioms, negation
      arcs) fire within the current wave, in ascending unary-op order;
      operator achievers that become ready fire into the next wave.
    */
    int goals_missing = 0;
    vector<char> goal_pending(num_facts, 0);
    for (const Fact &fact : task.goal) {
        int id = fact_id(fact.var, fact.value);
        if (!goal_pending[id]) {
            goal_pending[id] = 1;
            ++goals_missing;
        }
    }

    priority_queue<int, vector<int>, greater<int>> zero_ready;
    vector<int> one_ready;
    vector<int> wave;
    int level = 0;

    auto reach = [&](int fact, int by_unary) {
        if (fact_level[fact] != -1)
            return;
        fact_level[fact] = level;
        supporter[fact] = by_unary;
        wave.push_back(fact);
        if (goal_pending[fact]) {
            goal_pending[fact] = 0;
            --goals_missing;
        }
    };

    for (int var = 0; var < task.num_variables(); ++var)
        reach(fact_id(var, extended.values[var]), -1);

    for (size_t i = 0; i < unary_ops.size(); ++i) {
        if (unsatisfied[i] == 0) {
            if (static_cast<int>(i) < num_operator_unaries)
                one_ready.push_back(static_cast<int>(i));
            else
                zero_ready.push(static_cast<int>(i));
        }
    }

    while (goals_missing > 0) {
        // Saturate the current wave: new facts trigger achievers whose
        // remaining preconditions reach zero.
        size_t cursor = 0;
        while (true) {
            for (; cursor < wave.size(); ++cursor) {
                for (int unary : precondition_of[wave[cursor]]) {
                    if (--unsatisfied[unary] == 0) {
                        if (unary < num_operator_unaries)
                            one_ready.push_back(unary);
                        else
                            zero_ready.push(unary);
                    }
                }
            }
            if (zero_ready.empty())
                break;
            int unary = zero_ready.top();
            zero_ready.pop();
            reach(unary_ops[unary].effect, unary);
        }
        if (goals_missing == 0)
            break;
        if (one_ready.empty())
            break;    // relaxed fixpoint without the goal

        ++level;
        wave.clear();
        sort(one_ready.begin(), one_ready.end());
        for (int unary : one_ready)
            reach(unary_ops[unary].effect, unary);
        one_ready.clear();
    }

    HeuristicResult result;
    if (goals_missing > 0) {
        relaxed_plan.clear();
        result.value = COST_INFINITY;
        return result;
    }

    /*
      Relaxed plan extraction: chase best supporters from the goal facts
      down the levels. Only operator achievers count towards the value;
      axioms and negation arcs are free.
    */
    vector<char> marked(num_facts, 0);
    vector<vector<int>> to_process;    // facts per level
    int max_level = 0;
    for (const Fact &fact : task.goal)
        max_level = max(max_level, fact_level[fact_id(fact.var, fact.value)]);
    to_process.resize(max_level + 1);

    auto mark = [&](int fact) {
        if (marked[fact])
            return;
        marked[fact] = 1;
        to_process[fact_level[fact]].push_back(fact);
    };
    for (const Fact &fact : task.goal)
        mark(fact_id(fact.var, fact.value));

    set<int> plan_ops;
    for (int l = max_level; l >= 0; --l) {
        for (size_t i = 0; i < to_process[l].size(); ++i) {
            int fact = to_process[l][i];
            int unary = supporter[fact];
            if (unary == -1)
                continue;    // initially reached
            if (unary_ops[unary].op_id >= 0)
                plan_ops.insert(unary_ops[unary].op_id);
            for (int pre : unary_ops[unary].preconditions)
                mark(pre);
        }
    }

    relaxed_plan.assign(plan_ops.begin(), plan_ops.end());
    result.value = static_cast<int>(plan_ops.size());
    for (int op_id : plan_ops)
        if (holds_in(task.operators[op_id].precondition, extended))
            result.preferred.push_back(op_id);
    return result;
}

}    // namespace mvplan
