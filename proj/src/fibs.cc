#include "fibs.h"

#include "heuristic.h"

#include <algorithm>
#include <cassert>
#include <deque>

using namespace std;

namespace mvplan {

vector<int> modification_distances(const CompiledTask &compiled, int var) {
    const CausalGraph &cg = compiled.causal_graph;
    // Arc-count distance from every variable to var, BFS over reversed arcs.
    vector<int> to_var(cg.num_variables, -1);
    deque<int> queue{var};
    to_var[var] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int pred : cg.predecessors[v]) {
            if (to_var[pred] == -1) {
                to_var[pred] = to_var[v] + 1;
                queue.push_back(pred);
            }
        }
    }

    const Task &task = compiled.task;
    vector<int> result(task.operators.size(), COST_INFINITY);
    for (size_t i = 0; i < task.operators.size(); ++i) {
        for (const Effect &effect : task.operators[i].effects) {
            if (to_var[effect.var] != -1)
                result[i] = min(result[i], to_var[effect.var]);
        }
    }
    return result;
}

int modification_distance(const CompiledTask &compiled, int op_id, int var) {
    return modification_distances(compiled, var)[op_id];
}

ReachOneGoal::ReachOneGoal(const CompiledTask &compiled, const State &start,
                           Fact goal, PartialAssignment protected_facts)
    : compiled(compiled),
      start(start),
      goal(goal),
      protected_facts(move(protected_facts)),
      distances(modification_distances(compiled, goal.var)) {
    for (int distance : distances)
        if (distance != COST_INFINITY)
            max_threshold = max(max_threshold, distance);

    ExtendedState extended = compiled.axiom_evaluator.evaluate(start);
    if (extended.values[goal.var] == goal.value) {
        current_status = Status::success;
        final_state = start;
        return;
    }
    start_threshold();
}

void ReachOneGoal::start_threshold() {
    registry.clear();
    nodes.clear();
    open.clear();
    int id = registry.intern(start);
    node(id).g = 0;
    open.push(0, id);
}

ReachOneGoal::NodeInfo &ReachOneGoal::node(int id) {
    if (id >= static_cast<int>(nodes.size()))
        nodes.resize(id + 1);
    return nodes[id];
}

void ReachOneGoal::succeed(int id) {
    current_status = Status::success;
    final_state = registry[id];
    found_fragment.clear();
    int cursor = id;
    while (nodes[cursor].parent_id != -1 || nodes[cursor].op_id != -1) {
        found_fragment.push_back(nodes[cursor].op_id);
        cursor = nodes[cursor].parent_id;
    }
    reverse(found_fragment.begin(), found_fragment.end());
}

ReachOneGoal::Status ReachOneGoal::step() {
    if (current_status != Status::running)
        return current_status;

    while (true) {
        if (open.empty()) {
            ++current_threshold;
            if (current_threshold > max_threshold) {
                current_status = Status::failure;
                return current_status;
            }
            start_threshold();
        }
        auto [g, id] = open.pop_min();
        NodeInfo &info = node(id);
        if (info.closed || g > info.g)
            continue;
        info.closed = true;

        // Copy: interning successors may reallocate the registry.
        State state = registry[id];
        ExtendedState extended = compiled.axiom_evaluator.evaluate(state);
        if (extended.values[goal.var] == goal.value) {
            succeed(id);
            return current_status;
        }

        ++num_expansions;
        vector<int> applicable =
            compiled.successor_generator.generate_applicable(extended);
        for (int op_id : applicable) {
            int distance = distances[op_id];
            if (distance == COST_INFINITY || distance > current_threshold)
                continue;
            const Operator &op = compiled.task.operators[op_id];
            State successor = state;
            for (const Effect &effect : op.effects)
                if (holds_in(effect.condition, extended))
                    successor.values[compiled.task.fluent_index(effect.var)] =
                        effect.value;

            if (!protected_facts.empty()) {
                ExtendedState successor_extended =
                    compiled.axiom_evaluator.evaluate(successor);
                if (!holds_in(protected_facts, successor_extended))
                    continue;    // would undo an achieved goal
            }

            int successor_g = g + 1 + distance;
            int successor_id = registry.intern(successor);
            NodeInfo &successor_info = node(successor_id);
            if (successor_info.closed ||
                (successor_info.g != -1 && successor_info.g <= successor_g))
                continue;
            successor_info.g = successor_g;
            successor_info.parent_id = id;
            successor_info.op_id = op_id;
            open.push(successor_g, successor_id);
        }
        return current_status;    // one expansion per step
    }
}

FibsSearch::FibsSearch(const CompiledTask &compiled, const SearchConfig &config)
    : compiled(compiled), limits(config.limits) {
    current_state = compiled.task.initial;
    start_time = chrono::steady_clock::now();
    start_round();
}

void FibsSearch::start_round() {
    subsearches.clear();
    subsearch_goals.clear();
    rr_index = 0;

    ExtendedState extended = compiled.axiom_evaluator.evaluate(current_state);
    for (const Fact &goal : compiled.task.goal) {
        if (extended.values[goal.var] != goal.value) {
            subsearch_goals.push_back(goal);
            subsearches.push_back(make_unique<ReachOneGoal>(
                compiled, current_state, goal, protected_facts));
        }
    }

    if (subsearches.empty()) {
        assert(validate_plan(compiled.task, plan_so_far).ok);
        finish(Outcome::plan_found, true);
        return;
    }

    /*
      A goal that is satisfied from the start commits immediately; with
      goal protection this covers initially true goals.
    */
    for (size_t i = 0; i < subsearches.size(); ++i) {
        if (subsearches[i]->status() == ReachOneGoal::Status::success) {
            commit(i);
            return;
        }
    }
}

void FibsSearch::commit(size_t index) {
    const ReachOneGoal &winner = *subsearches[index];
    plan_so_far.insert(plan_so_far.end(), winner.fragment().begin(),
                       winner.fragment().end());
    current_state = winner.end_state();
    if (protected_pass) {
        auto merged =
            merge_assignments(protected_facts, {subsearch_goals[index]});
        assert(merged);
        protected_facts = *merged;
    }
    for (const auto &subsearch : subsearches)
        stats.expansions += subsearch->expansions();
    start_round();
}

void FibsSearch::fail_pass() {
    for (const auto &subsearch : subsearches)
        stats.expansions += subsearch->expansions();
    if (protected_pass) {
        /*
          Goal protection makes the search incomplete on tasks whose goals
          are not serializable; retry from scratch without it.
        */
        stats.fibs_protected_pass_failed = true;
        stats.fibs_unprotected_pass_ran = true;
        protected_pass = false;
        current_state = compiled.task.initial;
        plan_so_far.clear();
        protected_facts.clear();
        start_round();
    } else {
        finish(Outcome::resource_limit, false);
    }
}

void FibsSearch::finish(Outcome outcome, bool with_plan) {
    finished = true;
    final_result.outcome = outcome;
    if (with_plan)
        final_result.plan = compiled.to_original_plan(plan_so_far);
    final_result.stats = stats;
}

bool FibsSearch::step() {
    if (finished)
        return false;

    long live_expansions = stats.expansions;
    for (const auto &subsearch : subsearches)
        live_expansions += subsearch->expansions();
    if (live_expansions >= limits.max_expansions) {
        finish(Outcome::resource_limit, false);
        return false;
    }
    double elapsed =
        chrono::duration<double>(chrono::steady_clock::now() - start_time)
            .count();
    if (elapsed > limits.timeout_seconds) {
        finish(Outcome::resource_limit, false);
        return false;
    }

    // Fair interleaving: one expansion for the next live sub-search.
    size_t checked = 0;
    while (checked < subsearches.size()) {
        size_t index = rr_index;
        rr_index = (rr_index + 1) % subsearches.size();
        ++checked;
        ReachOneGoal &subsearch = *subsearches[index];
        if (subsearch.status() != ReachOneGoal::Status::running)
            continue;
        ReachOneGoal::Status status = subsearch.step();
        if (status == ReachOneGoal::Status::success) {
            commit(index);
            return !finished;
        }
        return !finished;
    }
    // Every sub-search has failed.
    fail_pass();
    return !finished;
}

SearchResult FibsSearch::result() const {
    assert(finished);
    return final_result;
}

SearchStats FibsSearch::live_stats() const {
    if (finished)
        return final_result.stats;
    SearchStats live = stats;
    for (const auto &subsearch : subsearches)
        live.expansions += subsearch->expansions();
    return live;
}

SearchResult run_fibs(const CompiledTask &compiled, const SearchConfig &config) {
    FibsSearch search(compiled, config);
    while (search.step()) {
    }
    return search.result();
}

}    // namespace mvplan
