#ifndef MVPLAN_MPT_H
#define MVPLAN_MPT_H

#include <compare>
#include <optional>
#include <string>
#include <vector>

/*
  Multi-valued planning tasks: finite-domain state variables split into
  fluents (changed by operator effects) and derived variables (computed by
  layered axioms, defaulting to the undefined value, which is always domain
  index 0). This module defines the task representation and its exact
  execution semantics; everything the compilation and search modules build
  is tested against the functions here.
*/

namespace mvplan {

// Domain index 0 of every derived variable is the undefined value.
constexpr int UNDEFINED_VALUE = 0;

struct Fact {
    int var;
    int value;

    auto operator<=>(const Fact &) const = default;
};

/*
  A partial variable assignment: at most one value per variable, kept
  sorted by variable id. Build through make_partial_assignment to get the
  invariant checked.
*/
using PartialAssignment = std::vector<Fact>;

// Total assignment over the fluents, in fluent declaration order.
struct State {
    std::vector<int> values;

    auto operator<=>(const State &) const = default;
};

// Total assignment over all variables, indexed by variable id.
struct ExtendedState {
    std::vector<int> values;

    auto operator<=>(const ExtendedState &) const = default;
};

struct Variable {
    std::string name;
    std::vector<std::string> values;
    bool is_derived = false;
    int axiom_layer = -1;    // 1-based for derived variables, -1 for fluents

    int domain_size() const {
        return static_cast<int>(values.size());
    }

    bool operator==(const Variable &) const = default;
};

struct Effect {
    PartialAssignment condition;
    int var;
    int value;

    bool operator==(const Effect &) const = default;
};

struct Operator {
    std::string name;
    PartialAssignment precondition;
    std::vector<Effect> effects;

    bool operator==(const Operator &) const = default;
};

struct Axiom {
    PartialAssignment body;
    int var;      // head variable, must be derived
    int value;    // derived value

    bool operator==(const Axiom &) const = default;
};

using Plan = std::vector<int>;    // operator ids

class Task {
public:
    std::vector<Variable> variables;
    State initial;
    PartialAssignment goal;
    std::vector<Operator> operators;
    std::vector<Axiom> axioms;

    /*
      Call after filling the fields above. Computes the fluent/derived
      index maps and the number of axiom layers.
    */
    void finalize();

    int num_variables() const {
        return static_cast<int>(variables.size());
    }

    int num_fluents() const {
        return static_cast<int>(fluent_ids.size());
    }

    bool is_derived(int var) const {
        return variables[var].is_derived;
    }

    // Index of a fluent variable within State::values, -1 for derived.
    int fluent_index(int var) const {
        return fluent_index_of_var[var];
    }

    const std::vector<int> &fluents() const {
        return fluent_ids;
    }

    const std::vector<int> &derived() const {
        return derived_ids;
    }

    int num_axiom_layers() const {
        return num_layers;
    }

    int axiom_layer_of(const Axiom &axiom) const {
        return variables[axiom.var].axiom_layer;
    }

    bool operator==(const Task &other) const {
        return variables == other.variables && initial == other.initial &&
               goal == other.goal && operators == other.operators &&
               axioms == other.axioms;
    }

private:
    std::vector<int> fluent_ids;
    std::vector<int> derived_ids;
    std::vector<int> fluent_index_of_var;
    int num_layers = 0;
};

/*
  Sorts the facts by variable and verifies that no variable occurs twice.
  Returns std::nullopt (and fills *error if given) when a variable is
  assigned two values.
*/
std::optional<PartialAssignment> make_partial_assignment(
    std::vector<Fact> facts, std::string *error = nullptr);

bool holds_in(const PartialAssignment &pa, const ExtendedState &state);
bool is_subset_of(const PartialAssignment &a, const PartialAssignment &b);
std::optional<int> assigned_value(const PartialAssignment &pa, int var);

/*
  Merges two partial assignments. Returns std::nullopt if they assign
  different values to a common variable.
*/
std::optional<PartialAssignment> merge_assignments(
    const PartialAssignment &a, const PartialAssignment &b);

/*
  Layer-by-layer fixpoint evaluation of the axioms: derived variables
  start at the undefined value, then each layer fires until no axiom body
  holds with a differing head value. The result does not depend on the
  firing order within a layer.
*/
ExtendedState extended_state(const Task &task, const State &state);

bool applicable(const Task &task, const State &state, const Operator &op);

/*
  Applies an operator: every effect whose condition holds in the extended
  state sets its fluent. Throws std::runtime_error if the operator is not
  applicable or if two triggered effects assign different values to the
  same fluent.
*/
State apply(const Task &task, const State &state, const Operator &op);

bool goal_satisfied(const Task &task, const State &state);

enum class LocusKind {
    task,
    variable,
    initial,
    goal,
    op,
    axiom,
};

struct Violation {
    bool is_error;    // false: warning only
    LocusKind locus;
    int index;        // index of the variable/operator/axiom, -1 otherwise
    std::string message;
};

/*
  Checks every Task invariant: domain sizes, index ranges, the layering
  property, axiom heads on derived variables only, effects on fluents
  only. Warnings cover axiom heads deriving the undefined value and
  statically detectable conflicting effects.
*/
std::vector<Violation> validate_task(const Task &task);

bool has_errors(const std::vector<Violation> &violations);

struct PlanCheck {
    bool ok;
    int failing_step;     // first inapplicable step (0-based), -1 if none
    bool goal_failed;     // all steps applied but the goal does not hold
};

// Simulates the plan from the initial state.
PlanCheck validate_plan(const Task &task, const Plan &plan);

}    // namespace mvplan

#endif
