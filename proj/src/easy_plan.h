#ifndef MVPLAN_EASY_PLAN_H
#define MVPLAN_EASY_PLAN_H

#include "mpt.h"

#include <string>

namespace mvplan {

/*
  Backtrack-free planner for the easy fragment: acyclic causal graph,
  strongly connected domain transition graphs, no derived variables. Under
  those conditions a plan always exists and is found by repeatedly taking
  a causal graph sink, walking its domain transition graph to the goal
  value and recursively achieving the transition conditions, then
  dropping the variable from the task.
*/
struct EasyPlanResult {
    enum class Status {
        plan,
        not_applicable,
    };

    Status status = Status::not_applicable;
    Plan plan;
    std::string reason;       // which precondition failed
    long dtg_searches = 0;    // number of domain transition graph searches
    long backtracks = 0;      // always 0; the algorithm never backtracks
};

EasyPlanResult solve_easy_mpt(const Task &task);

}    // namespace mvplan

#endif
