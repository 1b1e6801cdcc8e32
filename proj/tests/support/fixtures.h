#ifndef MVPLAN_TESTS_FIXTURES_H
#define MVPLAN_TESTS_FIXTURES_H

#include "mpt.h"

#include <string>
#include <vector>

namespace mvplan::tests {

/*
  grid1: a 3x2 grid with a robot r, a key k and a door d guarding cell
  (2,1) (centre of the upper row). The robot moves along 4-neighbour
  edges, entering (2,1) requires the door open; the key can be picked up
  and put down where the robot stands; unlocking requires the robot at
  (2,2) carrying the key. Goal: key at (2,1).
*/
mvplan::Task grid1();

// The 8-step walkthrough solution of grid1; also optimal.
mvplan::Plan grid1_narrative_plan(const mvplan::Task &task);

/*
  grid1 plus a derived "freezing" variable f (layer 1) that is true when
  the door is open and the robot stands at (1,1) or (3,1). The goal
  additionally requires not freezing, so f is used negatively.
*/
mvplan::Task grid1f();

/*
  Two-city transportation task: locations A-D (left city, cars c1 and
  c2), E-G (right city, car c3), highway D-E served by truck t. Parcel
  p1 must go from C to G, parcel p2 from F to E.
*/
mvplan::Task transport1();

// Operator id by name; aborts if missing.
int op_id(const mvplan::Task &task, const std::string &name);

// Variable id by name; aborts if missing.
int var_id(const mvplan::Task &task, const std::string &name);

// Value index within a variable's domain; aborts if missing.
int value_index(const mvplan::Task &task, int var, const std::string &value);

// State from (variable name, value name) pairs covering all fluents.
mvplan::State make_state(
    const mvplan::Task &task,
    const std::vector<std::pair<std::string, std::string>> &assignment);

}    // namespace mvplan::tests

#endif
