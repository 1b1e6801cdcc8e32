#include "compiled_task.h"

#include <algorithm>
#include <cassert>

using namespace std;

namespace mvplan {

ReducedTask prune_irrelevant(const Task &task, const CausalGraph &cg) {
    vector<int> ancestors = goal_ancestors(cg, task);
    ReducedTask reduced;
    reduced.relevant.assign(task.num_variables(), 0);
    for (int var : ancestors)
        reduced.relevant[var] = 1;

    vector<int> new_id(task.num_variables(), -1);
    for (int var : ancestors) {
        new_id[var] = static_cast<int>(reduced.original_variable.size());
        reduced.original_variable.push_back(var);
        reduced.task.variables.push_back(task.variables[var]);
    }

    auto map_assignment = [&](const PartialAssignment &pa) {
        PartialAssignment mapped;
        mapped.reserve(pa.size());
        for (const Fact &fact : pa) {
            assert(new_id[fact.var] != -1);
            mapped.push_back({new_id[fact.var], fact.value});
        }
        sort(mapped.begin(), mapped.end());
        return mapped;
    };

    /*
      An operator whose surviving effects touch a removed variable cannot
      exist: a transition condition or a co-occurring effect on a kept
      variable would have made the removed one a goal ancestor. Effects
      whose condition contradicts the precondition can never trigger and
      are dropped first; they induce no transitions, so their conditions
      may mention removed variables. The same argument covers axioms.
    */
    for (size_t i = 0; i < task.operators.size(); ++i) {
        const Operator &op = task.operators[i];
        vector<const Effect *> live_effects;
        for (const Effect &effect : op.effects)
            if (merge_assignments(op.precondition, effect.condition))
                live_effects.push_back(&effect);
        bool keep;
        if (op.effects.empty()) {
            // Effectless operators survive only if nothing they mention
            // was removed.
            keep = all_of(op.precondition.begin(), op.precondition.end(),
                          [&](const Fact &fact) {
                              return reduced.relevant[fact.var];
                          });
        } else {
            keep = !live_effects.empty() &&
                   any_of(live_effects.begin(), live_effects.end(),
                          [&](const Effect *e) {
                              return reduced.relevant[e->var];
                          });
        }
        if (!keep)
            continue;
        Operator mapped;
        mapped.name = op.name;
        mapped.precondition = map_assignment(op.precondition);
        for (const Effect *effect : live_effects) {
            assert(reduced.relevant[effect->var]);
            mapped.effects.push_back({map_assignment(effect->condition),
                                      new_id[effect->var], effect->value});
        }
        reduced.original_operator.push_back(static_cast<int>(i));
        reduced.task.operators.push_back(move(mapped));
    }

    for (size_t i = 0; i < task.axioms.size(); ++i) {
        const Axiom &axiom = task.axioms[i];
        if (!reduced.relevant[axiom.var])
            continue;
        reduced.original_axiom.push_back(static_cast<int>(i));
        reduced.task.axioms.push_back(
            {map_assignment(axiom.body), new_id[axiom.var], axiom.value});
    }

    reduced.task.finalize();
    for (int var : reduced.task.fluents()) {
        int original = reduced.original_variable[var];
        reduced.task.initial.values.push_back(
            task.initial.values[task.fluent_index(original)]);
    }
    reduced.task.goal = map_assignment(task.goal);
    return reduced;
}

CompiledTask::CompiledTask(const Task &input) {
    {
        vector<Dtg> input_dtgs;
        input_dtgs.reserve(input.num_variables());
        for (int var = 0; var < input.num_variables(); ++var)
            input_dtgs.push_back(build_dtg(input, var));
        CausalGraph input_cg = build_causal_graph(input, input_dtgs);

        ReducedTask reduced = prune_irrelevant(input, input_cg);
        task = move(reduced.task);
        original_variable = move(reduced.original_variable);
        original_operator = move(reduced.original_operator);
        original_axiom = move(reduced.original_axiom);
        relevant = move(reduced.relevant);
    }

    full_dtgs.reserve(task.num_variables());
    for (int var = 0; var < task.num_variables(); ++var)
        full_dtgs.push_back(build_dtg(task, var));

    causal_graph = build_causal_graph(task, full_dtgs);
    usage = usage_polarity(task);

    negation.resize(task.num_variables());
    extended_dtgs = full_dtgs;
    for (int var = 0; var < task.num_variables(); ++var) {
        if (needs_extended_dtg(var)) {
            negation[var] = negation_disjuncts(task, var);
            extended_dtgs[var] = build_extended_dtg(task, var);
        }
    }

    working_dtgs.reserve(task.num_variables());
    for (int var = 0; var < task.num_variables(); ++var) {
        const Dtg &base =
            needs_extended_dtg(var) ? extended_dtgs[var] : full_dtgs[var];
        working_dtgs.push_back(remove_dominated_transitions(
            strip_higher_level_conditions(base, causal_graph.level)));
    }

    successor_generator = SuccessorGenerator(task);
    axiom_evaluator = AxiomEvaluator(task);
}

Plan CompiledTask::to_original_plan(const Plan &plan) const {
    Plan mapped;
    mapped.reserve(plan.size());
    for (int op_id : plan)
        mapped.push_back(original_operator[op_id]);
    return mapped;
}

}    // namespace mvplan
