#ifndef MVPLAN_BEST_FIRST_SEARCH_H
#define MVPLAN_BEST_FIRST_SEARCH_H

#include "cg_heuristic.h"
#include "compiled_task.h"
#include "ff_heuristic.h"
#include "open_list.h"
#include "search_types.h"
#include "state_registry.h"

#include <chrono>
#include <memory>
#include <vector>

namespace mvplan {

/*
  Greedy best-first search with a closed list, deferred heuristic
  evaluation and preferred operators. Successors enter the open lists
  under their parent's heuristic value as (parent, operator) references;
  their own value is computed when they are expanded. With several
  heuristics, each keeps its own open list pair and expansion alternates
  over the lists round-robin; with one heuristic this is plain greedy
  best-first search.
*/
class BestFirstEngine {
public:
    // Superset of the configuration surface: ha_only exists for the
    // restart after the causal graph heuristic ran out of open states.
    enum class PreferredOps {
        none,
        ht,
        ht_fallback_ha,
        ht_and_ha,
        ha_only,
    };

    struct Options {
        bool sort_by_cg = false;
        bool sort_by_ff = false;
        PreferredOps preferred = PreferredOps::none;
        SearchLimits limits;
    };

    enum class Status {
        running,
        solved,
        exhausted,
        limit,
    };

    BestFirstEngine(const CompiledTask &compiled, const Options &options);

    /*
      Sorting by caller-supplied heuristics (not owned, no preferred
      operators); this is how the engine linkage tests stub the
      estimators out.
    */
    BestFirstEngine(const CompiledTask &compiled,
                    std::vector<Heuristic *> external_sorting,
                    const SearchLimits &limits);

    Status step();
    Status run();

    Status status() const {
        return current_status;
    }

    // Whether any state was discarded purely on an infinite causal graph
    // estimate; such dead ends are unverified (the estimate is not
    // sound), so exhaustion must not be reported as unsolvable.
    bool pruned_on_cg_infinity() const {
        return cg_infinity_pruned;
    }

    const SearchStats &stats() const {
        return search_stats;
    }

    // Valid after status() == solved; operator ids of the reduced task.
    const Plan &plan() const {
        return found_plan;
    }

    // Expansion order of closed states; used by the engine linkage tests.
    const std::vector<State> &expansion_order() const {
        return expanded_states;
    }

    /*
      Per expansion: which open list supplied it and whether every list
      was nonempty when the turn was taken. Over stretches where all
      lists hold entries the turns alternate strictly, which the
      alternation accounting tests verify from the outside.
    */
    const std::vector<std::pair<int, bool>> &expansion_sources() const {
        return expansion_source_log;
    }

private:
    struct Entry {
        int parent_id;    // -1 for the initial state
        int op_id;        // reduced operator id, -1 for the initial state
    };

    struct ListInfo {
        int sorter;    // index into sorters
        bool preferred_only;
        BucketOpenList<Entry> open;
    };

    struct NodeInfo {
        bool closed = false;
        int parent_id = -1;
        int op_id = -1;
    };

    const CompiledTask &compiled;
    PreferredOps preferred_mode = PreferredOps::none;
    SearchLimits limits;

    std::unique_ptr<CgHeuristic> cg;
    std::unique_ptr<FfHeuristic> ff;
    std::vector<Heuristic *> sorters;    // owned by cg/ff or the caller
    int cg_sorter = -1;                  // index into sorters, -1 if absent
    int ff_sorter = -1;
    bool cg_only_sorting = false;        // the restart-relevant setup

    std::vector<ListInfo> lists;
    size_t next_list = 0;

    StateRegistry registry;
    std::vector<NodeInfo> nodes;
    SearchStats search_stats;
    Status current_status = Status::running;
    bool cg_infinity_pruned = false;
    Plan found_plan;
    std::vector<State> expanded_states;
    std::vector<std::pair<int, bool>> expansion_source_log;
    std::chrono::steady_clock::time_point start_time;

    void init();
    NodeInfo &node(int id);
    void expand(int id, const State &state);
    void reconstruct_plan(int id);
    bool over_limits();
};

/*
  Engine driver handling the heuristic-specific failure protocol: under
  the causal graph heuristic alone, an exhausted frontier that pruned
  states on infinite estimates restarts the search with the FF heuristic,
  whose infinite values are sound. Reports unsolvable only after a sound
  exhaustion. Usable stepwise by the portfolio.
*/
class BestFirstSearch {
public:
    BestFirstSearch(const CompiledTask &compiled, const SearchConfig &config);

    // Returns false once finished.
    bool step();
    SearchResult result() const;
    SearchStats live_stats() const;
    const BestFirstEngine &engine() const {
        return *current;
    }

private:
    const CompiledTask &compiled;
    SearchConfig config;
    std::unique_ptr<BestFirstEngine> current;
    SearchStats accumulated;
    bool restarted = false;
    bool finished = false;
    SearchResult final_result;

    static BestFirstEngine::Options engine_options(const SearchConfig &config);
    void finish(Outcome outcome, const Plan &reduced_plan);
};

SearchResult run_best_first(const CompiledTask &compiled,
                            const SearchConfig &config);

}    // namespace mvplan

#endif
