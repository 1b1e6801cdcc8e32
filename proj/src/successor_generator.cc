#include "successor_generator.h"

#include <algorithm>
#include <cassert>

using namespace std;

namespace mvplan {

SuccessorGenerator::SuccessorGenerator(const Task &task) {
    vector<int> all_ops(task.operators.size());
    for (size_t i = 0; i < all_ops.size(); ++i)
        all_ops[i] = static_cast<int>(i);
    root = build(task, 0, move(all_ops));
}

int SuccessorGenerator::build(const Task &task, int first_var,
                              vector<int> op_ids) {
    // Skip ahead to the next variable some operator here conditions on.
    int var = first_var;
    while (var < task.num_variables()) {
        bool conditioned = false;
        for (int op_id : op_ids) {
            if (assigned_value(task.operators[op_id].precondition, var)) {
                conditioned = true;
                break;
            }
        }
        if (conditioned)
            break;
        ++var;
    }

    if (var == task.num_variables()) {
        Node node;
        node.operators = move(op_ids);
        nodes.push_back(move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    int domain = task.variables[var].domain_size();
    vector<vector<int>> by_value(domain);
    vector<int> dont_care_ops;
    for (int op_id : op_ids) {
        optional<int> value =
            assigned_value(task.operators[op_id].precondition, var);
        if (value)
            by_value[*value].push_back(op_id);
        else
            dont_care_ops.push_back(op_id);
    }

    int index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[index].selection_var = var;
    nodes[index].children.assign(domain, -1);
    for (int value = 0; value < domain; ++value) {
        if (!by_value[value].empty()) {
            int child = build(task, var + 1, move(by_value[value]));
            nodes[index].children[value] = child;
        }
    }
    if (!dont_care_ops.empty()) {
        int child = build(task, var + 1, move(dont_care_ops));
        nodes[index].dont_care = child;
    }
    return index;
}

void SuccessorGenerator::collect(int node_index, const ExtendedState &state,
                                 vector<int> &out) const {
    const Node &node = nodes[node_index];
    if (node.selection_var == -1) {
        out.insert(out.end(), node.operators.begin(), node.operators.end());
        return;
    }
    int value = state.values[node.selection_var];
    assert(value >= 0 && value < static_cast<int>(node.children.size()));
    if (node.children[value] != -1)
        collect(node.children[value], state, out);
    if (node.dont_care != -1)
        collect(node.dont_care, state, out);
}

void SuccessorGenerator::generate_applicable(const ExtendedState &state,
                                             vector<int> &out) const {
    out.clear();
    if (root != -1)
        collect(root, state, out);
    sort(out.begin(), out.end());
}

vector<int> SuccessorGenerator::generate_applicable(
    const ExtendedState &state) const {
    vector<int> out;
    generate_applicable(state, out);
    return out;
}

void SuccessorGenerator::for_each_generator(
    const function<void(const PartialAssignment &, const vector<int> &)>
        &callback) const {
    if (root == -1)
        return;
    vector<Fact> path;
    // Depth-first walk carrying the value-edge labels.
    std::function<void(int)> walk = [&](int node_index) {
        const Node &node = nodes[node_index];
        if (node.selection_var == -1) {
            PartialAssignment pa(path);
            sort(pa.begin(), pa.end());
            callback(pa, node.operators);
            return;
        }
        for (size_t value = 0; value < node.children.size(); ++value) {
            if (node.children[value] == -1)
                continue;
            path.push_back({node.selection_var, static_cast<int>(value)});
            walk(node.children[value]);
            path.pop_back();
        }
        if (node.dont_care != -1)
            walk(node.dont_care);
    };
    walk(root);
}

}    // namespace mvplan
