#include "axiom_evaluator.h"

#include <cassert>
#include <deque>

using namespace std;

namespace mvplan {

AxiomEvaluator::AxiomEvaluator(const Task &task_) : task(&task_) {
    layers.resize(task->num_axiom_layers());
    for (Layer &layer : layers) {
        layer.triggers.resize(task->num_variables());
        for (int var = 0; var < task->num_variables(); ++var)
            layer.triggers[var].resize(task->variables[var].domain_size());
    }
    for (const Axiom &axiom : task->axioms) {
        int layer_index = task->axiom_layer_of(axiom) - 1;
        assert(layer_index >= 0 && layer_index < static_cast<int>(layers.size()));
        Layer &layer = layers[layer_index];
        int axiom_index = static_cast<int>(layer.axioms.size());
        layer.axioms.push_back({axiom.body, axiom.var, axiom.value});
        for (const Fact &fact : axiom.body)
            layer.triggers[fact.var][fact.value].push_back(axiom_index);
    }
}

ExtendedState AxiomEvaluator::evaluate(const State &state) const {
    ExtendedState result;
    result.values.resize(task->num_variables());
    for (int var = 0; var < task->num_variables(); ++var) {
        if (task->is_derived(var))
            result.values[var] = UNDEFINED_VALUE;
        else
            result.values[var] = state.values[task->fluent_index(var)];
    }

    for (const Layer &layer : layers) {
        vector<int> unsatisfied(layer.axioms.size());
        deque<int> queue;
        for (size_t i = 0; i < layer.axioms.size(); ++i) {
            const LayerAxiom &axiom = layer.axioms[i];
            int count = 0;
            for (const Fact &fact : axiom.body)
                if (result.values[fact.var] != fact.value)
                    ++count;
            unsatisfied[i] = count;
            if (count == 0)
                queue.push_back(static_cast<int>(i));
        }
        while (!queue.empty()) {
            const LayerAxiom &axiom = layer.axioms[queue.front()];
            queue.pop_front();
            if (result.values[axiom.var] == axiom.value)
                continue;
            result.values[axiom.var] = axiom.value;
            /*
              The layering property makes firing monotone within a layer:
              the newly derived pairing can only satisfy further body
              conditions, never falsify counted ones.
            */
            for (int triggered : layer.triggers[axiom.var][axiom.value]) {
                if (--unsatisfied[triggered] == 0)
                    queue.push_back(triggered);
            }
        }
    }
    return result;
}

}    // namespace mvplan
