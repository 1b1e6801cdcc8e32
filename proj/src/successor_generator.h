#ifndef MVPLAN_SUCCESSOR_GENERATOR_H
#define MVPLAN_SUCCESSOR_GENERATOR_H

#include "mpt.h"

#include <functional>
#include <vector>

namespace mvplan {

/*
  Decision tree over the task variables in declaration order. Selector
  nodes branch on one variable (one child per domain value plus a don't
  care child); generator nodes hold operator ids. Every operator sits in
  exactly one generator node, and the value-edge labels on its root path
  equal its precondition. A variable is skipped in a branch when no
  operator of that branch conditions on it.
*/
class SuccessorGenerator {
public:
    explicit SuccessorGenerator(const Task &task);
    SuccessorGenerator() = default;

    // All operators applicable in the extended state, ascending, no
    // duplicates.
    void generate_applicable(const ExtendedState &state,
                             std::vector<int> &out) const;

    std::vector<int> generate_applicable(const ExtendedState &state) const;

    /*
      Visits every generator node with the value-edge labels of its root
      path and its operator ids; used by the structural tests.
    */
    void for_each_generator(
        const std::function<void(const PartialAssignment &,
                                 const std::vector<int> &)> &callback) const;

private:
    struct Node {
        int selection_var = -1;        // -1: generator node
        std::vector<int> children;     // per domain value, -1 if absent
        int dont_care = -1;
        std::vector<int> operators;    // generator nodes only
    };

    std::vector<Node> nodes;
    int root = -1;

    int build(const Task &task, int first_var, std::vector<int> op_ids);
    void collect(int node, const ExtendedState &state,
                 std::vector<int> &out) const;
};

}    // namespace mvplan

#endif
