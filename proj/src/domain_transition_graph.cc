#include "domain_transition_graph.h"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

using namespace std;

namespace mvplan {

void Dtg::rebuild_outgoing() {
    outgoing.assign(num_values, {});
    for (size_t i = 0; i < transitions.size(); ++i)
        outgoing[transitions[i].from].push_back(static_cast<int>(i));
    for (auto &list : outgoing) {
        stable_sort(list.begin(), list.end(), [this](int a, int b) {
            if (transitions[a].to != transitions[b].to)
                return transitions[a].to < transitions[b].to;
            return a < b;
        });
    }
}

namespace {

void add_transitions_for(Dtg &dtg, int var, const PartialAssignment &combined,
                         int new_value, int weight, TransitionOrigin origin) {
    optional<int> self = assigned_value(combined, var);
    PartialAssignment label;
    label.reserve(combined.size());
    for (const Fact &fact : combined)
        if (fact.var != var)
            label.push_back(fact);

    if (self) {
        // A negation disjunct mentioning the variable itself as undefined
        // would only yield a useless self-loop on the undefined value.
        if (origin.kind == TransitionOrigin::negation && *self == new_value)
            return;
        dtg.transitions.push_back({*self, new_value, label, weight, origin});
    } else {
        for (int from = 0; from < dtg.num_values; ++from)
            if (from != new_value)
                dtg.transitions.push_back({from, new_value, label, weight, origin});
    }
}

}    // namespace

Dtg build_dtg(const Task &task, int var) {
    Dtg dtg;
    dtg.var = var;
    dtg.num_values = task.variables[var].domain_size();

    if (task.is_derived(var)) {
        for (size_t i = 0; i < task.axioms.size(); ++i) {
            const Axiom &axiom = task.axioms[i];
            if (axiom.var != var)
                continue;
            add_transitions_for(dtg, var, axiom.body, axiom.value, 0,
                                {TransitionOrigin::axiom, static_cast<int>(i), -1});
        }
    } else {
        for (size_t i = 0; i < task.operators.size(); ++i) {
            const Operator &op = task.operators[i];
            for (size_t e = 0; e < op.effects.size(); ++e) {
                const Effect &effect = op.effects[e];
                if (effect.var != var)
                    continue;
                auto combined = merge_assignments(op.precondition, effect.condition);
                if (!combined)
                    continue;    // effect can never trigger
                add_transitions_for(
                    dtg, var, *combined, effect.value, 1,
                    {TransitionOrigin::operator_effect, static_cast<int>(i),
                     static_cast<int>(e)});
            }
        }
    }
    dtg.rebuild_outgoing();
    return dtg;
}

UsagePolarity usage_polarity(const Task &task) {
    int n = task.num_variables();
    UsagePolarity result;
    result.positive.assign(n, 0);
    result.negative.assign(n, 0);

    deque<pair<int, bool>> queue;    // (variable, positive?)
    auto mark = [&](int var, bool positive) {
        if (!task.is_derived(var))
            return;
        char &flag = positive ? result.positive[var] : result.negative[var];
        if (!flag) {
            flag = 1;
            queue.emplace_back(var, positive);
        }
    };
    auto mark_condition = [&](const PartialAssignment &pa) {
        for (const Fact &fact : pa)
            mark(fact.var, fact.value != UNDEFINED_VALUE);
    };

    for (const Operator &op : task.operators) {
        mark_condition(op.precondition);
        for (const Effect &effect : op.effects)
            mark_condition(effect.condition);
    }
    mark_condition(task.goal);

    while (!queue.empty()) {
        auto [head_var, head_positive] = queue.front();
        queue.pop_front();
        for (const Axiom &axiom : task.axioms) {
            if (axiom.var != head_var)
                continue;
            for (const Fact &fact : axiom.body) {
                bool positive_occurrence = fact.value != UNDEFINED_VALUE;
                // Undefined-value conditions flip the head's polarity.
                mark(fact.var, positive_occurrence == head_positive);
            }
        }
    }
    return result;
}

namespace {

// Drops duplicated disjuncts and disjuncts dominated by a subset disjunct.
void simplify_dnf(vector<PartialAssignment> &dnf) {
    vector<PartialAssignment> kept;
    for (const PartialAssignment &disjunct : dnf) {
        bool drop = false;
        for (const PartialAssignment &other : kept) {
            if (is_subset_of(other, disjunct)) {
                drop = true;
                break;
            }
        }
        if (drop)
            continue;
        erase_if(kept, [&](const PartialAssignment &other) {
            return is_subset_of(disjunct, other) && disjunct != other;
        });
        kept.push_back(disjunct);
    }
    dnf = move(kept);
}

}    // namespace

vector<PartialAssignment> negation_disjuncts(const Task &task, int var,
                                             size_t max_disjuncts) {
    assert(task.is_derived(var));

    /*
      Trigger DNF: one disjunct per axiom deriving a defined value for
      var. The negation is a CNF with one clause per such body; every
      inequality literal is expanded over the finite domain before
      distributing back to DNF.
    */
    vector<const PartialAssignment *> bodies;
    for (const Axiom &axiom : task.axioms)
        if (axiom.var == var && axiom.value != UNDEFINED_VALUE)
            bodies.push_back(&axiom.body);

    vector<PartialAssignment> dnf = {{}};    // the empty conjunction: true
    for (const PartialAssignment *body : bodies) {
        vector<Fact> literals;
        for (const Fact &fact : *body) {
            int domain = task.variables[fact.var].domain_size();
            for (int value = 0; value < domain; ++value)
                if (value != fact.value)
                    literals.push_back({fact.var, value});
        }
        vector<PartialAssignment> next;
        for (const PartialAssignment &disjunct : dnf) {
            for (const Fact &literal : literals) {
                optional<int> existing = assigned_value(disjunct, literal.var);
                if (existing) {
                    if (*existing == literal.value)
                        next.push_back(disjunct);
                    // else: contradiction, drop this combination
                } else {
                    PartialAssignment extended = disjunct;
                    extended.insert(
                        lower_bound(extended.begin(), extended.end(), literal),
                        literal);
                    next.push_back(move(extended));
                }
                if (next.size() > max_disjuncts)
                    throw runtime_error(
                        "negation DNF for variable " + task.variables[var].name +
                        " exceeds the disjunct limit of " +
                        to_string(max_disjuncts));
            }
        }
        simplify_dnf(next);
        dnf = move(next);
        if (dnf.empty())
            break;    // some body is unconditionally true, never undefined
    }
    return dnf;
}

Dtg build_extended_dtg(const Task &task, int var, size_t max_disjuncts) {
    Dtg dtg = build_dtg(task, var);
    vector<PartialAssignment> disjuncts = negation_disjuncts(task, var, max_disjuncts);
    for (size_t i = 0; i < disjuncts.size(); ++i) {
        add_transitions_for(dtg, var, disjuncts[i], UNDEFINED_VALUE, 0,
                            {TransitionOrigin::negation, static_cast<int>(i), -1});
    }
    dtg.rebuild_outgoing();
    return dtg;
}

Dtg strip_higher_level_conditions(const Dtg &dtg, const vector<int> &level) {
    Dtg result = dtg;
    int own_level = level[dtg.var];
    for (Transition &transition : result.transitions) {
        erase_if(transition.condition, [&](const Fact &fact) {
            return level[fact.var] > own_level;
        });
    }
    result.rebuild_outgoing();
    return result;
}

Dtg remove_dominated_transitions(const Dtg &dtg) {
    Dtg result;
    result.var = dtg.var;
    result.num_values = dtg.num_values;
    for (const Transition &transition : dtg.transitions) {
        bool dominated = false;
        for (const Transition &other : result.transitions) {
            if (other.from == transition.from && other.to == transition.to &&
                is_subset_of(other.condition, transition.condition)) {
                dominated = true;
                break;
            }
        }
        if (dominated)
            continue;
        erase_if(result.transitions, [&](const Transition &other) {
            return other.from == transition.from && other.to == transition.to &&
                   is_subset_of(transition.condition, other.condition) &&
                   transition.condition != other.condition;
        });
        result.transitions.push_back(transition);
    }
    result.rebuild_outgoing();
    return result;
}

}    // namespace mvplan
