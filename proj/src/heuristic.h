#ifndef MVPLAN_HEURISTIC_H
#define MVPLAN_HEURISTIC_H

#include "mpt.h"

#include <limits>
#include <string>
#include <vector>

namespace mvplan {

// Infinite heuristic value; absorbing under guarded_add.
constexpr int COST_INFINITY = std::numeric_limits<int>::max();

inline int guarded_add(int a, int b) {
    if (a == COST_INFINITY || b == COST_INFINITY)
        return COST_INFINITY;
    return a + b;
}

struct HeuristicResult {
    int value = 0;
    std::vector<int> preferred;    // operator ids, sorted, no duplicates
};

/*
  Heuristic evaluators own mutable caches: use one instance per search
  thread. The extended state must be the axiom evaluation of the state.
*/
class Heuristic {
public:
    virtual ~Heuristic() = default;

    virtual HeuristicResult compute(const State &state,
                                    const ExtendedState &extended) = 0;
    virtual std::string name() const = 0;
};

}    // namespace mvplan

#endif
