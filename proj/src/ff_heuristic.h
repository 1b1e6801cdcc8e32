#ifndef MVPLAN_FF_HEURISTIC_H
#define MVPLAN_FF_HEURISTIC_H

#include "compiled_task.h"
#include "heuristic.h"

#include <vector>

namespace mvplan {

/*
  Delete relaxation over multi-valued facts: every variable may hold
  several values at once, operator effects and axioms only ever add
  values. Derived variables start from their actual values in the
  evaluated state and may reach the undefined value through the negation
  disjuncts of their extended domain transition graphs.

  The heuristic value counts the operators of an extracted relaxed plan;
  the preferred operators are the relaxed-plan operators applicable in
  the evaluated state. An infinite value is a sound dead-end signal.
*/
class FfHeuristic : public Heuristic {
public:
    explicit FfHeuristic(const CompiledTask &compiled);

    HeuristicResult compute(const State &state,
                            const ExtendedState &extended) override;

    std::string name() const override {
        return "ff";
    }

    // Operator ids of the relaxed plan extracted by the last compute()
    // that returned a finite value; ascending, no duplicates.
    const std::vector<int> &last_relaxed_plan() const {
        return relaxed_plan;
    }

private:
    struct UnaryOp {
        std::vector<int> preconditions;    // fact ids
        int effect;                        // fact id
        int op_id;                         // -1 for axioms and negation arcs
    };

    const CompiledTask &compiled;
    std::vector<int> fact_offset;    // per variable
    int num_facts = 0;
    std::vector<UnaryOp> unary_ops;          // operators first, then the
                                             // zero-cost axioms/negation
    int num_operator_unaries = 0;            // prefix of unary_ops with cost 1
    std::vector<std::vector<int>> precondition_of;    // per fact

    // Per-call scratch, sized once.
    std::vector<int> fact_level;
    std::vector<int> supporter;
    std::vector<int> unsatisfied;
    std::vector<int> relaxed_plan;

    int fact_id(int var, int value) const {
        return fact_offset[var] + value;
    }
};

}    // namespace mvplan

#endif
