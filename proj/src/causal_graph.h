#ifndef MVPLAN_CAUSAL_GRAPH_H
#define MVPLAN_CAUSAL_GRAPH_H

#include "domain_transition_graph.h"
#include "mpt.h"

#include <utility>
#include <vector>

namespace mvplan {

/*
  Variable dependency graph: an arc (v, v') whenever some transition of
  DTG(v') carries a condition on v or some operator affects both. Arc
  weights count the distinct inducing axioms and operators.

  The pruned graph is the acyclic subgraph that keeps an arc (v, v') iff
  level[v] < level[v']. Levels order the strongly connected components
  topologically and, within one component, follow the greedy
  minimal-incoming-weight elimination order.
*/
class CausalGraph {
public:
    struct Arc {
        int from;
        int to;
        int weight;

        bool operator==(const Arc &) const = default;
    };

    int num_variables = 0;
    std::vector<Arc> arcs;                         // sorted by (from, to)
    std::vector<std::vector<int>> successors;      // full graph, sorted
    std::vector<std::vector<int>> predecessors;    // full graph, sorted

    std::vector<int> scc_id;    // by variable; components numbered in
                                // topological order
    int num_sccs = 0;

    std::vector<int> level;    // total order; pruned arcs: level rises
    std::vector<std::vector<int>> pruned_predecessors;
    std::vector<std::vector<int>> pruned_successors;
    std::vector<std::pair<int, int>> dropped_arcs;

    bool has_arc(int from, int to) const;
    int arc_weight(int from, int to) const;    // 0 if absent
    bool pruned_has_arc(int from, int to) const;
    bool is_acyclic() const {
        return dropped_arcs.empty();
    }
};

// Builds the full graph with weights; the dtgs must be the normal
// (unextended) graphs of every task variable.
CausalGraph build_causal_graph(const Task &task, const std::vector<Dtg> &dtgs);

/*
  Computes SCCs, the per-component greedy elimination order (minimal
  cumulated incoming-arc weight first, ties to the lowest variable index)
  and from those the levels and the pruned arc sets.
*/
void compute_acyclic_ordering(CausalGraph &cg);

// Variables from which some goal variable is reachable, goal variables
// included; sorted ascending.
std::vector<int> goal_ancestors(const CausalGraph &cg, const Task &task);

}    // namespace mvplan

#endif
