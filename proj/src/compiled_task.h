#ifndef MVPLAN_COMPILED_TASK_H
#define MVPLAN_COMPILED_TASK_H

#include "axiom_evaluator.h"
#include "causal_graph.h"
#include "domain_transition_graph.h"
#include "mpt.h"
#include "successor_generator.h"

#include <vector>

namespace mvplan {

/*
  Result of removing every variable that is not a causal-graph ancestor
  of a goal variable, together with the operators and axioms referring to
  the removed ones.
*/
struct ReducedTask {
    Task task;
    std::vector<int> original_variable;    // reduced id -> original id
    std::vector<int> original_operator;
    std::vector<int> original_axiom;
    std::vector<char> relevant;            // per original variable
};

ReducedTask prune_irrelevant(const Task &task, const CausalGraph &cg);

/*
  Everything the search needs, compiled once per task: the reduced task,
  its domain transition graphs (the working set has extended graphs for
  negatively used derived variables and carries pruned labels), the
  causal graph with its acyclic ordering, the successor generator and
  the axiom evaluator. Immutable after construction and shareable across
  threads.
*/
class CompiledTask {
public:
    explicit CompiledTask(const Task &input);

    // The axiom evaluator holds a pointer into `task`.
    CompiledTask(const CompiledTask &) = delete;
    CompiledTask &operator=(const CompiledTask &) = delete;

    Task task;    // the reduced task; all ids below refer to it
    std::vector<int> original_variable;
    std::vector<int> original_operator;
    std::vector<int> original_axiom;
    std::vector<char> relevant;    // per original variable

    std::vector<Dtg> full_dtgs;    // unpruned, unextended
    UsagePolarity usage;
    // Per derived variable that is used negatively: the surviving
    // disjuncts of the negated trigger condition; empty otherwise.
    std::vector<std::vector<PartialAssignment>> negation;
    std::vector<Dtg> extended_dtgs;    // only used for negatively used
                                       // derived variables, else == full

    CausalGraph causal_graph;

    // Extended where required, higher-level conditions stripped,
    // dominated transitions removed. This is what the causal graph
    // heuristic searches.
    std::vector<Dtg> working_dtgs;

    SuccessorGenerator successor_generator;
    AxiomEvaluator axiom_evaluator;

    bool needs_extended_dtg(int var) const {
        return task.is_derived(var) && usage.negative[var];
    }

    Plan to_original_plan(const Plan &plan) const;
};

}    // namespace mvplan

#endif
