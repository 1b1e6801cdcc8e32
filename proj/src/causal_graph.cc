#include "causal_graph.h"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

using namespace std;

namespace mvplan {

bool CausalGraph::has_arc(int from, int to) const {
    return binary_search(successors[from].begin(), successors[from].end(), to);
}

int CausalGraph::arc_weight(int from, int to) const {
    auto it = lower_bound(arcs.begin(), arcs.end(), make_pair(from, to),
                          [](const Arc &arc, const pair<int, int> &key) {
                              return make_pair(arc.from, arc.to) < key;
                          });
    if (it != arcs.end() && it->from == from && it->to == to)
        return it->weight;
    return 0;
}

bool CausalGraph::pruned_has_arc(int from, int to) const {
    return binary_search(pruned_successors[from].begin(),
                         pruned_successors[from].end(), to);
}

CausalGraph build_causal_graph(const Task &task, const vector<Dtg> &dtgs) {
    CausalGraph cg;
    cg.num_variables = task.num_variables();

    /*
      Inducers per arc: an axiom or operator counts once even if several
      of its effects or transitions induce the same arc.
    */
    map<pair<int, int>, set<pair<int, int>>> inducers;    // arc -> {(kind, id)}

    for (const Dtg &dtg : dtgs) {
        for (const Transition &transition : dtg.transitions) {
            assert(transition.origin.kind != TransitionOrigin::negation);
            for (const Fact &fact : transition.condition) {
                if (fact.var == dtg.var)
                    continue;
                inducers[{fact.var, dtg.var}].insert(
                    {transition.origin.kind, transition.origin.index});
            }
        }
    }

    for (size_t i = 0; i < task.operators.size(); ++i) {
        const Operator &op = task.operators[i];
        for (size_t a = 0; a < op.effects.size(); ++a) {
            for (size_t b = 0; b < op.effects.size(); ++b) {
                int va = op.effects[a].var, vb = op.effects[b].var;
                if (va != vb)
                    inducers[{va, vb}].insert(
                        {TransitionOrigin::operator_effect, static_cast<int>(i)});
            }
        }
    }

    cg.successors.assign(cg.num_variables, {});
    cg.predecessors.assign(cg.num_variables, {});
    for (const auto &[arc, origin_set] : inducers) {
        cg.arcs.push_back({arc.first, arc.second,
                           static_cast<int>(origin_set.size())});
        cg.successors[arc.first].push_back(arc.second);
        cg.predecessors[arc.second].push_back(arc.first);
    }
    for (auto &list : cg.successors)
        sort(list.begin(), list.end());
    for (auto &list : cg.predecessors)
        sort(list.begin(), list.end());

    compute_acyclic_ordering(cg);
    return cg;
}

namespace {

/*
  Tarjan's algorithm, iterative. Components come out in reverse
  topological order and are renumbered afterwards so that arcs between
  components always go from lower to higher id.
*/
vector<int> strongly_connected_components(
    const vector<vector<int>> &successors, int &num_sccs) {
    int n = static_cast<int>(successors.size());
    vector<int> index(n, -1), lowlink(n, 0), component(n, -1);
    vector<bool> on_stack(n, false);
    vector<int> stack;
    int next_index = 0, next_component = 0;

    struct Frame {
        int vertex;
        size_t child;
    };

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame &frame = frames.back();
            int v = frame.vertex;
            if (frame.child < successors[v].size()) {
                int w = successors[v][frame.child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component[w] = next_component;
                        if (w == v)
                            break;
                    }
                    ++next_component;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().vertex;
                    lowlink[parent] = min(lowlink[parent], lowlink[v]);
                }
            }
        }
    }
    num_sccs = next_component;

    // Tarjan emits components in reverse topological order.
    vector<int> renumbered(n);
    for (int v = 0; v < n; ++v)
        renumbered[v] = num_sccs - 1 - component[v];
    return renumbered;
}

}    // namespace

void compute_acyclic_ordering(CausalGraph &cg) {
    int n = cg.num_variables;
    cg.scc_id = strongly_connected_components(cg.successors, cg.num_sccs);

    vector<vector<int>> members(cg.num_sccs);
    for (int v = 0; v < n; ++v)
        members[cg.scc_id[v]].push_back(v);

    cg.level.assign(n, -1);
    int next_level = 0;
    for (int scc = 0; scc < cg.num_sccs; ++scc) {
        vector<int> remaining = members[scc];
        while (!remaining.empty()) {
            /*
        Greedy elimination: the vertex with the lowest cumulated
        weight of incoming arcs from the remaining component members
        gets the next-lowest level. Ties go to the lowest variable
        index.
            */
            int best = -1, best_weight = 0;
            for (int candidate : remaining) {
                int weight = 0;
                for (int pred : cg.predecessors[candidate])
                    if (cg.level[pred] == -1 && cg.scc_id[pred] == scc)
                        weight += cg.arc_weight(pred, candidate);
                if (best == -1 || weight < best_weight ||
                    (weight == best_weight && candidate < best)) {
                    best = candidate;
                    best_weight = weight;
                }
            }
            cg.level[best] = next_level++;
            erase(remaining, best);
        }
    }

    cg.pruned_successors.assign(n, {});
    cg.pruned_predecessors.assign(n, {});
    cg.dropped_arcs.clear();
    for (const CausalGraph::Arc &arc : cg.arcs) {
        if (cg.level[arc.from] < cg.level[arc.to]) {
            cg.pruned_successors[arc.from].push_back(arc.to);
            cg.pruned_predecessors[arc.to].push_back(arc.from);
        } else {
            cg.dropped_arcs.emplace_back(arc.from, arc.to);
        }
    }
    for (auto &list : cg.pruned_successors)
        sort(list.begin(), list.end());
    for (auto &list : cg.pruned_predecessors)
        sort(list.begin(), list.end());
}

vector<int> goal_ancestors(const CausalGraph &cg, const Task &task) {
    vector<char> relevant(cg.num_variables, 0);
    deque<int> queue;
    for (const Fact &fact : task.goal) {
        if (!relevant[fact.var]) {
            relevant[fact.var] = 1;
            queue.push_back(fact.var);
        }
    }
    while (!queue.empty()) {
        int var = queue.front();
        queue.pop_front();
        for (int pred : cg.predecessors[var]) {
            if (!relevant[pred]) {
                relevant[pred] = 1;
                queue.push_back(pred);
            }
        }
    }
    vector<int> result;
    for (int v = 0; v < cg.num_variables; ++v)
        if (relevant[v])
            result.push_back(v);
    return result;
}

}    // namespace mvplan
