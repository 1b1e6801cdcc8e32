#ifndef MVPLAN_AXIOM_EVALUATOR_H
#define MVPLAN_AXIOM_EVALUATOR_H

#include "mpt.h"

#include <vector>

namespace mvplan {

/*
  Layered marking algorithm for the axioms: per layer, an index maps each
  (variable, value) pairing to the axioms of that layer whose body
  contains it, and a per-axiom counter tracks the body conditions not yet
  satisfied. Axioms whose counter reaches zero enter a trigger queue.
  Counters are recomputed from the state on every call; the structure
  itself is read-only after construction.
*/
class AxiomEvaluator {
public:
    explicit AxiomEvaluator(const Task &task);
    AxiomEvaluator() = default;

    // Equals extended_state(task, state) on every input.
    ExtendedState evaluate(const State &state) const;

private:
    struct LayerAxiom {
        PartialAssignment body;
        int var;
        int value;
    };

    struct Layer {
        std::vector<LayerAxiom> axioms;
        // triggers[var][value]: axiom indices within this layer.
        std::vector<std::vector<std::vector<int>>> triggers;
    };

    const Task *task = nullptr;
    std::vector<Layer> layers;
};

}    // namespace mvplan

#endif
