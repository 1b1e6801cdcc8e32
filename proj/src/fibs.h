#ifndef MVPLAN_FIBS_H
#define MVPLAN_FIBS_H

#include "compiled_task.h"
#include "open_list.h"
#include "search_types.h"
#include "state_registry.h"

#include <chrono>
#include <memory>
#include <vector>

namespace mvplan {

/*
  Modification distance of an operator with respect to a variable: the
  minimum over its affected variables of the causal graph distance (arc
  count) to that variable; COST_INFINITY when unreachable. Operators that
  modify the variable directly have distance 0.
*/
std::vector<int> modification_distances(const CompiledTask &compiled, int var);

int modification_distance(const CompiledTask &compiled, int op_id, int var);

/*
  Uniform-cost search towards a single assignment v=d, sweeping a
  modification-distance threshold from 0 upwards: operators above the
  threshold are forbidden, the rest cost 1 + distance. Operators whose
  application would violate a protected fact are never applied. Fails
  once the threshold passes the maximal finite modification distance.
*/
class ReachOneGoal {
public:
    enum class Status {
        running,
        success,
        failure,
    };

    ReachOneGoal(const CompiledTask &compiled, const State &start, Fact goal,
                 PartialAssignment protected_facts);

    Status step();    // at most one expansion

    Status status() const {
        return current_status;
    }

    const Plan &fragment() const {
        return found_fragment;    // reduced operator ids
    }

    const State &end_state() const {
        return final_state;
    }

    long expansions() const {
        return num_expansions;
    }

    int threshold() const {
        return current_threshold;
    }

private:
    struct NodeInfo {
        int g = -1;
        bool closed = false;
        int parent_id = -1;
        int op_id = -1;
    };

    const CompiledTask &compiled;
    State start;
    Fact goal;
    PartialAssignment protected_facts;
    std::vector<int> distances;    // per reduced operator
    int max_threshold = -1;
    int current_threshold = 0;

    StateRegistry registry;
    std::vector<NodeInfo> nodes;
    BucketOpenList<int> open;    // state ids keyed by g

    Status current_status = Status::running;
    Plan found_fragment;
    State final_state;
    long num_expansions = 0;

    void start_threshold();
    NodeInfo &node(int id);
    void succeed(int id);
};

class FibsSearch {
public:
    FibsSearch(const CompiledTask &compiled, const SearchConfig &config);

    // Returns false once finished.
    bool step();
    SearchResult result() const;
    SearchStats live_stats() const;

private:
    const CompiledTask &compiled;
    SearchLimits limits;

    bool protected_pass = true;
    State current_state;
    Plan plan_so_far;    // reduced operator ids
    PartialAssignment protected_facts;
    std::vector<std::unique_ptr<ReachOneGoal>> subsearches;
    std::vector<Fact> subsearch_goals;
    size_t rr_index = 0;

    SearchStats stats;
    bool finished = false;
    SearchResult final_result;
    std::chrono::steady_clock::time_point start_time;

    void start_round();
    void commit(size_t index);
    void fail_pass();
    void finish(Outcome outcome, bool with_plan);
};

SearchResult run_fibs(const CompiledTask &compiled, const SearchConfig &config);

}    // namespace mvplan

#endif
