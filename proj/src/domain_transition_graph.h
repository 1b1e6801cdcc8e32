#ifndef MVPLAN_DOMAIN_TRANSITION_GRAPH_H
#define MVPLAN_DOMAIN_TRANSITION_GRAPH_H

#include "mpt.h"

#include <vector>

namespace mvplan {

struct TransitionOrigin {
    enum Kind {
        operator_effect,
        axiom,
        negation,    // derived arc into the undefined value
    };

    Kind kind;
    int index;           // operator/axiom id; disjunct index for negation
    int effect_index;    // within the operator, -1 otherwise

    bool operator==(const TransitionOrigin &) const = default;
};

struct Transition {
    int from;
    int to;
    PartialAssignment condition;
    int weight;    // 1 for operator transitions, 0 for axiom/negation arcs
    TransitionOrigin origin;

    bool operator==(const Transition &) const = default;
};

/*
  Domain transition graph of one variable: vertices are the domain
  indices, transitions record how and under which conditions on other
  variables the value can change.
*/
struct Dtg {
    int var = -1;
    int num_values = 0;
    std::vector<Transition> transitions;

    // Transition indices per source vertex, ordered by (target value,
    // declaration index). All graph searches relax in this order.
    std::vector<std::vector<int>> outgoing;

    void rebuild_outgoing();
};

Dtg build_dtg(const Task &task, int var);

/*
  Usage polarity of the derived variables: the least fixpoint of the four
  propagation rules over operator preconditions, effect conditions, the
  goal and axiom bodies. A condition v=d with d distinct from the
  undefined value uses v positively, v=undefined uses it negatively, and
  occurrences in axiom bodies inherit the head's polarity, flipped for
  undefined-value conditions.
*/
struct UsagePolarity {
    std::vector<char> positive;
    std::vector<char> negative;
};

UsagePolarity usage_polarity(const Task &task);

/*
  The ways a derived variable can fall back to the undefined value: the
  negation of the disjunction of all its axiom bodies, converted to CNF
  over inequalities, rewritten over the finite domains and redistributed
  to DNF. Duplicated and dominated disjuncts are removed after every
  distribution step. Throws std::runtime_error if an intermediate DNF
  exceeds max_disjuncts.
*/
std::vector<PartialAssignment> negation_disjuncts(
    const Task &task, int var, size_t max_disjuncts = 100000);

/*
  Normal DTG plus one weight-0 arc into the undefined value per surviving
  negation disjunct. Only meaningful for negatively used derived
  variables.
*/
Dtg build_extended_dtg(const Task &task, int var, size_t max_disjuncts = 100000);

/*
  Removes from the transition labels all conditions on variables whose
  level is above the level of the graph's own variable.
*/
Dtg strip_higher_level_conditions(const Dtg &dtg, const std::vector<int> &level);

/*
  Between identical endpoints, drops every transition whose condition is a
  proper superset of another's, and keeps only the first of several
  transitions with identical conditions.
*/
Dtg remove_dominated_transitions(const Dtg &dtg);

}    // namespace mvplan

#endif
