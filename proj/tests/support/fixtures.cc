#include "fixtures.h"

#include <cassert>
#include <cstdlib>
#include <iostream>

using namespace std;
using namespace mvplan;

namespace mvplan::tests {

namespace {

const vector<string> grid_cells = {"(1,1)", "(2,1)", "(3,1)",
                                   "(1,2)", "(2,2)", "(3,2)"};

// 4-neighbour undirected edges of the 3x2 grid.
const vector<pair<string, string>> grid_edges = {
    {"(1,1)", "(2,1)"}, {"(2,1)", "(3,1)"}, {"(1,2)", "(2,2)"},
    {"(2,2)", "(3,2)"}, {"(1,1)", "(1,2)"}, {"(2,1)", "(2,2)"},
    {"(3,1)", "(3,2)"},
};

int cell_index(const string &cell) {
    for (size_t i = 0; i < grid_cells.size(); ++i)
        if (grid_cells[i] == cell)
            return static_cast<int>(i);
    abort();
}

PartialAssignment pa(vector<Fact> facts) {
    auto result = make_partial_assignment(move(facts));
    assert(result);
    return *result;
}

Task grid_base(bool with_freezing) {
    Task task;

    Variable r{"r", grid_cells, false, -1};
    Variable k{"k", grid_cells, false, -1};
    k.values.push_back("carried");
    Variable d{"d", {"closed", "open"}, false, -1};
    task.variables = {r, k, d};
    if (with_freezing)
        task.variables.push_back({"f", {"undef", "true"}, true, 1});
    task.finalize();

    const int var_r = 0, var_k = 1, var_d = 2;
    const int carried = 6, closed = 0, open = 1;

    // moves
    auto add_move = [&](const string &from, const string &to) {
        Operator op;
        op.name = "move-" + from + "-" + to;
        vector<Fact> pre = {{var_r, cell_index(from)}};
        if (to == "(2,1)")
            pre.push_back({var_d, open});
        op.precondition = pa(move(pre));
        op.effects = {{{}, var_r, cell_index(to)}};
        task.operators.push_back(move(op));
    };
    for (const auto &[a, b] : grid_edges) {
        add_move(a, b);
        add_move(b, a);
    }

    for (const string &cell : grid_cells) {
        Operator pickup;
        pickup.name = "pickup-" + cell;
        pickup.precondition =
            pa({{var_r, cell_index(cell)}, {var_k, cell_index(cell)}});
        pickup.effects = {{{}, var_k, carried}};
        task.operators.push_back(move(pickup));
    }
    for (const string &cell : grid_cells) {
        Operator putdown;
        putdown.name = "putdown-" + cell;
        putdown.precondition = pa({{var_r, cell_index(cell)}, {var_k, carried}});
        putdown.effects = {{{}, var_k, cell_index(cell)}};
        task.operators.push_back(move(putdown));
    }
    {
        Operator unlock;
        unlock.name = "unlock";
        unlock.precondition = pa({{var_r, cell_index("(2,2)")}, {var_k, carried}});
        unlock.effects = {{{}, var_d, open}};
        task.operators.push_back(move(unlock));
    }

    if (with_freezing) {
        const int var_f = 3, f_true = 1;
        task.axioms.push_back(
            {pa({{var_d, open}, {var_r, cell_index("(1,1)")}}), var_f, f_true});
        task.axioms.push_back(
            {pa({{var_d, open}, {var_r, cell_index("(3,1)")}}), var_f, f_true});
    }

    // robot at (1,1), key at (3,2), door closed
    task.initial.values = {cell_index("(1,1)"), cell_index("(3,2)"), closed};
    vector<Fact> goal = {{var_k, cell_index("(2,1)")}};
    if (with_freezing)
        goal.push_back({3, UNDEFINED_VALUE});
    task.goal = pa(move(goal));

    assert(!has_errors(validate_task(task)));
    return task;
}

}    // namespace

Task grid1() {
    return grid_base(false);
}

Task grid1f() {
    return grid_base(true);
}

Plan grid1_narrative_plan(const Task &task) {
    return {
        op_id(task, "move-(1,1)-(1,2)"), op_id(task, "move-(1,2)-(2,2)"),
        op_id(task, "move-(2,2)-(3,2)"), op_id(task, "pickup-(3,2)"),
        op_id(task, "move-(3,2)-(2,2)"), op_id(task, "unlock"),
        op_id(task, "move-(2,2)-(2,1)"), op_id(task, "putdown-(2,1)"),
    };
}

Task transport1() {
    Task task;

    const vector<string> left = {"A", "B", "C", "D"};
    const vector<string> right = {"E", "F", "G"};
    const vector<string> all = {"A", "B", "C", "D", "E", "F", "G"};

    vector<string> parcel_domain = all;
    for (const string vehicle : {"c1", "c2", "c3", "t"})
        parcel_domain.push_back("in-" + vehicle);

    task.variables = {
        {"c1", left, false, -1},
        {"c2", left, false, -1},
        {"c3", right, false, -1},
        {"t", {"D", "E"}, false, -1},
        {"p1", parcel_domain, false, -1},
        {"p2", parcel_domain, false, -1},
    };
    task.finalize();

    auto value = [&](int var, const string &name) {
        return value_index(task, var, name);
    };

    // roads: left city A-B, A-C, B-D, C-D; right city E-F, F-G, E-G;
    // highway D-E (truck only)
    const vector<pair<string, string>> left_roads = {
        {"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}};
    const vector<pair<string, string>> right_roads = {
        {"E", "F"}, {"F", "G"}, {"E", "G"}};

    auto add_drive = [&](const string &vehicle, int var, const string &from,
                         const string &to) {
        Operator op;
        op.name = "drive-" + vehicle + "-" + from + "-" + to;
        op.precondition = pa({{var, value(var, from)}});
        op.effects = {{{}, var, value(var, to)}};
        task.operators.push_back(move(op));
    };
    for (const auto &[a, b] : left_roads) {
        for (const auto &[vehicle, var] : {pair<string, int>{"c1", 0}, {"c2", 1}}) {
            add_drive(vehicle, var, a, b);
            add_drive(vehicle, var, b, a);
        }
    }
    for (const auto &[a, b] : right_roads) {
        add_drive("c3", 2, a, b);
        add_drive("c3", 2, b, a);
    }
    add_drive("t", 3, "D", "E");
    add_drive("t", 3, "E", "D");

    struct Vehicle {
        string name;
        int var;
        vector<string> stops;
    };
    const vector<Vehicle> vehicles = {
        {"c1", 0, left}, {"c2", 1, left}, {"c3", 2, right}, {"t", 3, {"D", "E"}}};

    for (int parcel_var : {4, 5}) {
        const string parcel = task.variables[parcel_var].name;
        for (const Vehicle &vehicle : vehicles) {
            for (const string &stop : vehicle.stops) {
                Operator load;
                load.name = "load-" + parcel + "-" + vehicle.name + "-" + stop;
                load.precondition = pa({{parcel_var, value(parcel_var, stop)},
                                        {vehicle.var, value(vehicle.var, stop)}});
                load.effects = {
                    {{}, parcel_var, value(parcel_var, "in-" + vehicle.name)}};
                task.operators.push_back(move(load));

                Operator unload;
                unload.name =
                    "unload-" + parcel + "-" + vehicle.name + "-" + stop;
                unload.precondition =
                    pa({{parcel_var, value(parcel_var, "in-" + vehicle.name)},
                        {vehicle.var, value(vehicle.var, stop)}});
                unload.effects = {{{}, parcel_var, value(parcel_var, stop)}};
                task.operators.push_back(move(unload));
            }
        }
    }

    // c1 at A, c2 at B, c3 at G, truck at D, p1 at C, p2 at F
    task.initial.values = {value(0, "A"), value(1, "B"), value(2, "G"),
                           value(3, "D"), value(4, "C"), value(5, "F")};
    task.goal = pa({{4, value(4, "G")}, {5, value(5, "E")}});

    assert(!has_errors(validate_task(task)));
    return task;
}

int op_id(const Task &task, const string &name) {
    for (size_t i = 0; i < task.operators.size(); ++i)
        if (task.operators[i].name == name)
            return static_cast<int>(i);
    cerr << "fixture: no operator named " << name << "\n";
    abort();
}

int var_id(const Task &task, const string &name) {
    for (int v = 0; v < task.num_variables(); ++v)
        if (task.variables[v].name == name)
            return v;
    cerr << "fixture: no variable named " << name << "\n";
    abort();
}

int value_index(const Task &task, int var, const string &value) {
    const vector<string> &values = task.variables[var].values;
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] == value)
            return static_cast<int>(i);
    cerr << "fixture: variable " << task.variables[var].name << " has no value "
         << value << "\n";
    abort();
}

State make_state(const Task &task,
                 const vector<pair<string, string>> &assignment) {
    State state;
    state.values.assign(task.num_fluents(), -1);
    for (const auto &[var_name, value_name] : assignment) {
        int var = var_id(task, var_name);
        state.values[task.fluent_index(var)] =
            value_index(task, var, value_name);
    }
    for ([[maybe_unused]] int value : state.values)
        assert(value != -1);
    return state;
}

}    // namespace mvplan::tests
