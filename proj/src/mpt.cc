#include "mpt.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

using namespace std;

namespace mvplan {

void Task::finalize() {
    fluent_ids.clear();
    derived_ids.clear();
    fluent_index_of_var.assign(variables.size(), -1);
    num_layers = 0;
    for (int var = 0; var < num_variables(); ++var) {
        if (variables[var].is_derived) {
            derived_ids.push_back(var);
            num_layers = max(num_layers, variables[var].axiom_layer);
        } else {
            fluent_index_of_var[var] = static_cast<int>(fluent_ids.size());
            fluent_ids.push_back(var);
        }
    }
}

optional<PartialAssignment> make_partial_assignment(
    vector<Fact> facts, string *error) {
    sort(facts.begin(), facts.end());
    for (size_t i = 1; i < facts.size(); ++i) {
        if (facts[i].var == facts[i - 1].var) {
            if (error)
                *error = "variable " + to_string(facts[i].var) +
                         " assigned more than one value";
            return nullopt;
        }
    }
    return facts;
}

bool holds_in(const PartialAssignment &pa, const ExtendedState &state) {
    for (const Fact &fact : pa)
        if (state.values[fact.var] != fact.value)
            return false;
    return true;
}

bool is_subset_of(const PartialAssignment &a, const PartialAssignment &b) {
    return includes(b.begin(), b.end(), a.begin(), a.end());
}

optional<int> assigned_value(const PartialAssignment &pa, int var) {
    auto it = lower_bound(pa.begin(), pa.end(), var,
                          [](const Fact &fact, int v) { return fact.var < v; });
    if (it != pa.end() && it->var == var)
        return it->value;
    return nullopt;
}

optional<PartialAssignment> merge_assignments(
    const PartialAssignment &a, const PartialAssignment &b) {
    vector<Fact> merged(a);
    merged.insert(merged.end(), b.begin(), b.end());
    sort(merged.begin(), merged.end());
    merged.erase(unique(merged.begin(), merged.end()), merged.end());
    for (size_t i = 1; i < merged.size(); ++i)
        if (merged[i].var == merged[i - 1].var)
            return nullopt;
    return merged;
}

ExtendedState extended_state(const Task &task, const State &state) {
    ExtendedState result;
    result.values.resize(task.num_variables());
    for (int var = 0; var < task.num_variables(); ++var) {
        if (task.is_derived(var))
            result.values[var] = UNDEFINED_VALUE;
        else
            result.values[var] = state.values[task.fluent_index(var)];
    }

    for (int layer = 1; layer <= task.num_axiom_layers(); ++layer) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Axiom &axiom : task.axioms) {
                if (task.axiom_layer_of(axiom) != layer)
                    continue;
                if (result.values[axiom.var] != axiom.value &&
                    holds_in(axiom.body, result)) {
                    result.values[axiom.var] = axiom.value;
                    changed = true;
                }
            }
        }
    }
    return result;
}

bool applicable(const Task &task, const State &state, const Operator &op) {
    return holds_in(op.precondition, extended_state(task, state));
}

State apply(const Task &task, const State &state, const Operator &op) {
    ExtendedState extended = extended_state(task, state);
    if (!holds_in(op.precondition, extended))
        throw runtime_error("operator " + op.name + " is not applicable");

    State result = state;
    // -1: not yet assigned by a triggered effect in this step.
    vector<int> assigned(task.num_fluents(), -1);
    for (const Effect &effect : op.effects) {
        if (!holds_in(effect.condition, extended))
            continue;
        int index = task.fluent_index(effect.var);
        assert(index >= 0);
        if (assigned[index] != -1 && assigned[index] != effect.value)
            throw runtime_error(
                "operator " + op.name +
                ": conflicting effects on variable " +
                task.variables[effect.var].name);
        assigned[index] = effect.value;
        result.values[index] = effect.value;
    }
    return result;
}

bool goal_satisfied(const Task &task, const State &state) {
    return holds_in(task.goal, extended_state(task, state));
}

namespace {

bool fact_in_range(const Task &task, const Fact &fact) {
    return fact.var >= 0 && fact.var < task.num_variables() &&
           fact.value >= 0 && fact.value < task.variables[fact.var].domain_size();
}

void check_assignment(const Task &task, const PartialAssignment &pa,
                      LocusKind locus, int index, const string &what,
                      vector<Violation> &out) {
    for (size_t i = 0; i < pa.size(); ++i) {
        if (!fact_in_range(task, pa[i])) {
            out.push_back({true, locus, index,
                           what + ": variable or value index out of range"});
            continue;
        }
        if (i > 0 && pa[i].var == pa[i - 1].var)
            out.push_back({true, locus, index,
                           what + ": variable " + task.variables[pa[i].var].name +
                               " assigned more than one value"});
    }
}

}    // namespace

vector<Violation> validate_task(const Task &task) {
    vector<Violation> out;

    for (int var = 0; var < task.num_variables(); ++var) {
        const Variable &variable = task.variables[var];
        if (variable.domain_size() < 1)
            out.push_back({true, LocusKind::variable, var,
                           "variable " + variable.name + " has an empty domain"});
        if (variable.is_derived && variable.axiom_layer < 1)
            out.push_back({true, LocusKind::variable, var,
                           "derived variable " + variable.name +
                               " has no valid axiom layer"});
        vector<string> names = variable.values;
        sort(names.begin(), names.end());
        if (adjacent_find(names.begin(), names.end()) != names.end())
            out.push_back({true, LocusKind::variable, var,
                           "variable " + variable.name +
                               " has duplicate value names"});
    }

    if (static_cast<int>(task.initial.values.size()) != task.num_fluents()) {
        out.push_back({true, LocusKind::initial, -1,
                       "initial state does not assign exactly the fluents"});
    } else {
        for (int var : task.fluents()) {
            int value = task.initial.values[task.fluent_index(var)];
            if (value < 0 || value >= task.variables[var].domain_size())
                out.push_back({true, LocusKind::initial, -1,
                               "initial value of " + task.variables[var].name +
                                   " out of range"});
        }
    }

    check_assignment(task, task.goal, LocusKind::goal, -1, "goal", out);

    for (size_t i = 0; i < task.operators.size(); ++i) {
        const Operator &op = task.operators[i];
        int index = static_cast<int>(i);
        check_assignment(task, op.precondition, LocusKind::op, index,
                         "precondition of " + op.name, out);
        for (const Effect &effect : op.effects) {
            check_assignment(task, effect.condition, LocusKind::op, index,
                             "effect condition of " + op.name, out);
            if (!fact_in_range(task, {effect.var, effect.value})) {
                out.push_back({true, LocusKind::op, index,
                               "effect of " + op.name + " out of range"});
                continue;
            }
            if (task.is_derived(effect.var))
                out.push_back({true, LocusKind::op, index,
                               "operator " + op.name +
                                   " affects derived variable " +
                                   task.variables[effect.var].name});
        }
        // Statically detectable effect conflicts: two effects on the same
        // fluent with different new values and jointly satisfiable
        // conditions.
        for (size_t a = 0; a < op.effects.size(); ++a) {
            for (size_t b = a + 1; b < op.effects.size(); ++b) {
                const Effect &ea = op.effects[a], &eb = op.effects[b];
                if (ea.var != eb.var || ea.value == eb.value)
                    continue;
                if (merge_assignments(ea.condition, eb.condition))
                    out.push_back({false, LocusKind::op, index,
                                   "operator " + op.name +
                                       " may trigger conflicting effects on " +
                                       task.variables[ea.var].name});
            }
        }
    }

    for (size_t i = 0; i < task.axioms.size(); ++i) {
        const Axiom &axiom = task.axioms[i];
        int index = static_cast<int>(i);
        check_assignment(task, axiom.body, LocusKind::axiom, index,
                         "axiom body", out);
        if (!fact_in_range(task, {axiom.var, axiom.value})) {
            out.push_back({true, LocusKind::axiom, index,
                           "axiom head out of range"});
            continue;
        }
        if (!task.is_derived(axiom.var)) {
            out.push_back({true, LocusKind::axiom, index,
                           "axiom head affects fluent " +
                               task.variables[axiom.var].name});
            continue;
        }
        if (axiom.value == UNDEFINED_VALUE)
            out.push_back({false, LocusKind::axiom, index,
                           "axiom derives the undefined value for " +
                               task.variables[axiom.var].name});
    }

    /*
      Layering property: within one layer, a derived variable appearing in
      any head appears with exactly one derived value across all heads of
      that layer, and never with a different value in any body of that
      layer.
    */
    int num_layers = task.num_axiom_layers();
    for (int layer = 1; layer <= num_layers; ++layer) {
        vector<int> head_value(task.num_variables(), -1);
        vector<int> head_axiom(task.num_variables(), -1);
        for (size_t i = 0; i < task.axioms.size(); ++i) {
            const Axiom &axiom = task.axioms[i];
            if (axiom.var < 0 || axiom.var >= task.num_variables() ||
                !task.is_derived(axiom.var) ||
                task.axiom_layer_of(axiom) != layer)
                continue;
            if (head_value[axiom.var] == -1) {
                head_value[axiom.var] = axiom.value;
                head_axiom[axiom.var] = static_cast<int>(i);
            } else if (head_value[axiom.var] != axiom.value) {
                out.push_back({true, LocusKind::axiom, static_cast<int>(i),
                               "layering violation: " +
                                   task.variables[axiom.var].name +
                                   " derived with two values in layer " +
                                   to_string(layer)});
            }
        }
        for (size_t i = 0; i < task.axioms.size(); ++i) {
            const Axiom &axiom = task.axioms[i];
            if (axiom.var < 0 || axiom.var >= task.num_variables() ||
                !task.is_derived(axiom.var) ||
                task.axiom_layer_of(axiom) != layer)
                continue;
            for (const Fact &fact : axiom.body) {
                if (fact.var < 0 || fact.var >= task.num_variables())
                    continue;
                if (head_value[fact.var] != -1 &&
                    head_value[fact.var] != fact.value)
                    out.push_back(
                        {true, LocusKind::axiom, static_cast<int>(i),
                         "layering violation: " + task.variables[fact.var].name +
                             " appears in a body of layer " + to_string(layer) +
                             " with a value differing from its head value"});
            }
        }
    }

    return out;
}

bool has_errors(const vector<Violation> &violations) {
    return any_of(violations.begin(), violations.end(),
                  [](const Violation &v) { return v.is_error; });
}

PlanCheck validate_plan(const Task &task, const Plan &plan) {
    State state = task.initial;
    for (size_t step = 0; step < plan.size(); ++step) {
        int op_id = plan[step];
        if (op_id < 0 || op_id >= static_cast<int>(task.operators.size()))
            return {false, static_cast<int>(step), false};
        const Operator &op = task.operators[op_id];
        if (!applicable(task, state, op))
            return {false, static_cast<int>(step), false};
        try {
            state = apply(task, state, op);
        } catch (const runtime_error &) {
            // conflicting triggered effects
            return {false, static_cast<int>(step), false};
        }
    }
    if (!goal_satisfied(task, state))
        return {false, -1, true};
    return {true, -1, false};
}

}    // namespace mvplan
