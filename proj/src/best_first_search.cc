#include "best_first_search.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

using namespace std;

namespace mvplan {

BestFirstEngine::BestFirstEngine(const CompiledTask &compiled,
                                 const Options &options)
    : compiled(compiled), preferred_mode(options.preferred),
      limits(options.limits) {
    bool want_ht = preferred_mode == PreferredOps::ht ||
                   preferred_mode == PreferredOps::ht_fallback_ha ||
                   preferred_mode == PreferredOps::ht_and_ha;
    bool want_ha = preferred_mode == PreferredOps::ht_fallback_ha ||
                   preferred_mode == PreferredOps::ht_and_ha ||
                   preferred_mode == PreferredOps::ha_only;
    if (options.sort_by_cg || want_ht)
        cg = make_unique<CgHeuristic>(compiled);
    if (options.sort_by_ff || want_ha)
        ff = make_unique<FfHeuristic>(compiled);
    assert(options.sort_by_cg || options.sort_by_ff);

    if (options.sort_by_cg) {
        cg_sorter = static_cast<int>(sorters.size());
        sorters.push_back(cg.get());
    }
    if (options.sort_by_ff) {
        ff_sorter = static_cast<int>(sorters.size());
        sorters.push_back(ff.get());
    }
    cg_only_sorting = options.sort_by_cg && !options.sort_by_ff;

    bool with_preferred = preferred_mode != PreferredOps::none;
    for (size_t sorter = 0; sorter < sorters.size(); ++sorter) {
        lists.push_back({static_cast<int>(sorter), false, {}});
        if (with_preferred)
            lists.push_back({static_cast<int>(sorter), true, {}});
    }
    init();
}

BestFirstEngine::BestFirstEngine(const CompiledTask &compiled,
                                 vector<Heuristic *> external_sorting,
                                 const SearchLimits &limits)
    : compiled(compiled), limits(limits), sorters(move(external_sorting)) {
    assert(!sorters.empty());
    for (size_t sorter = 0; sorter < sorters.size(); ++sorter)
        lists.push_back({static_cast<int>(sorter), false, {}});
    init();
}

void BestFirstEngine::init() {
    start_time = chrono::steady_clock::now();

    const State &initial = compiled.task.initial;
    ExtendedState extended = compiled.axiom_evaluator.evaluate(initial);
    int id = registry.intern(initial);
    node(id);

    if (holds_in(compiled.task.goal, extended)) {
        current_status = Status::solved;
        found_plan.clear();
        return;
    }

    // The initial state has no parent to inherit a key from: evaluate it
    // eagerly, once per sorting heuristic.
    vector<int> keys(sorters.size());
    for (size_t sorter = 0; sorter < sorters.size(); ++sorter) {
        keys[sorter] = sorters[sorter]->compute(initial, extended).value;
        ++search_stats.evaluations;
    }
    for (ListInfo &list : lists) {
        if (list.preferred_only)
            continue;
        list.open.push(keys[list.sorter], {-1, -1});
    }
}

BestFirstEngine::NodeInfo &BestFirstEngine::node(int id) {
    if (id >= static_cast<int>(nodes.size()))
        nodes.resize(id + 1);
    return nodes[id];
}

bool BestFirstEngine::over_limits() {
    if (search_stats.expansions >= limits.max_expansions)
        return true;
    if ((search_stats.expansions & 0xff) == 0) {
        double elapsed =
            chrono::duration<double>(chrono::steady_clock::now() - start_time)
                .count();
        if (elapsed > limits.timeout_seconds)
            return true;
    }
    return false;
}

BestFirstEngine::Status BestFirstEngine::step() {
    if (current_status != Status::running)
        return current_status;
    if (over_limits()) {
        current_status = Status::limit;
        return current_status;
    }

    size_t attempts = 0;
    size_t list_index = next_list;
    while (attempts < lists.size() && lists[list_index].open.empty()) {
        list_index = (list_index + 1) % lists.size();
        ++attempts;
    }
    if (attempts == lists.size()) {
        current_status = Status::exhausted;
        return current_status;
    }
    bool all_nonempty = true;
    for (const ListInfo &list : lists)
        if (list.open.empty())
            all_nonempty = false;

    BucketOpenList<Entry> &open = lists[list_index].open;
    while (!open.empty()) {
        Entry entry = open.pop_min().second;

        State state;
        if (entry.parent_id == -1) {
            state = compiled.task.initial;
        } else {
            const State &parent = registry[entry.parent_id];
            ExtendedState parent_extended =
                compiled.axiom_evaluator.evaluate(parent);
            const Operator &op = compiled.task.operators[entry.op_id];
            assert(holds_in(op.precondition, parent_extended));
            state = parent;
            for (const Effect &effect : op.effects)
                if (holds_in(effect.condition, parent_extended))
                    state.values[compiled.task.fluent_index(effect.var)] =
                        effect.value;
        }

        int id = registry.intern(state);
        NodeInfo &info = node(id);
        if (info.closed)
            continue;    // duplicate detected upon expansion
        info.closed = true;
        info.parent_id = entry.parent_id;
        info.op_id = entry.op_id;

        next_list = (list_index + 1) % lists.size();
        expansion_source_log.emplace_back(static_cast<int>(list_index),
                                          all_nonempty);
        expand(id, state);
        return current_status;
    }
    // Only stale duplicates in this list; hand the turn onwards.
    next_list = (list_index + 1) % lists.size();
    return current_status;
}

void BestFirstEngine::expand(int id, const State &state) {
    ExtendedState extended = compiled.axiom_evaluator.evaluate(state);
    if (holds_in(compiled.task.goal, extended)) {
        reconstruct_plan(id);
        current_status = Status::solved;
        return;
    }

    ++search_stats.expansions;
    expanded_states.push_back(state);

    vector<HeuristicResult> sorter_results(sorters.size());
    for (size_t sorter = 0; sorter < sorters.size(); ++sorter) {
        sorter_results[sorter] = sorters[sorter]->compute(state, extended);
        ++search_stats.evaluations;
    }

    const HeuristicResult *cg_result =
        cg_sorter >= 0 ? &sorter_results[cg_sorter] : nullptr;
    const HeuristicResult *ff_result =
        ff_sorter >= 0 ? &sorter_results[ff_sorter] : nullptr;

    // Auxiliary evaluations that only feed the preferred-operator set.
    HeuristicResult cg_aux, ff_aux;
    bool want_ht = preferred_mode == PreferredOps::ht ||
                   preferred_mode == PreferredOps::ht_fallback_ha ||
                   preferred_mode == PreferredOps::ht_and_ha;
    if (want_ht && !cg_result) {
        cg_aux = cg->compute(state, extended);
        ++search_stats.evaluations;
        cg_result = &cg_aux;
    }
    bool want_ha = preferred_mode == PreferredOps::ht_and_ha ||
                   preferred_mode == PreferredOps::ha_only ||
                   (preferred_mode == PreferredOps::ht_fallback_ha &&
                    cg_result && cg_result->preferred.empty());
    if (want_ha && !ff_result) {
        ff_aux = ff->compute(state, extended);
        ++search_stats.evaluations;
        ff_result = &ff_aux;
    }

    // An infinite FF value is a sound dead-end signal: no successors.
    if (ff_result && ff_result->value == COST_INFINITY)
        return;

    bool any_finite = false;
    for (const HeuristicResult &result : sorter_results)
        if (result.value != COST_INFINITY)
            any_finite = true;
    if (!any_finite) {
        if (cg_only_sorting) {
            // Unverified dead end; exhaustion cannot be trusted later.
            cg_infinity_pruned = true;
        }
        return;
    }

    vector<int> preferred;
    switch (preferred_mode) {
    case PreferredOps::none:
        break;
    case PreferredOps::ht:
        preferred = cg_result->preferred;
        break;
    case PreferredOps::ht_fallback_ha:
        preferred = cg_result->preferred;
        if (preferred.empty() && ff_result)
            preferred = ff_result->preferred;
        break;
    case PreferredOps::ht_and_ha: {
        preferred = cg_result->preferred;
        preferred.insert(preferred.end(), ff_result->preferred.begin(),
                         ff_result->preferred.end());
        sort(preferred.begin(), preferred.end());
        preferred.erase(unique(preferred.begin(), preferred.end()),
                        preferred.end());
        break;
    }
    case PreferredOps::ha_only:
        preferred = ff_result->preferred;
        break;
    }

    vector<int> applicable =
        compiled.successor_generator.generate_applicable(extended);
    for (int op_id : applicable) {
        ++search_stats.generations;
        bool is_preferred =
            binary_search(preferred.begin(), preferred.end(), op_id);
        for (ListInfo &list : lists) {
            int key = sorter_results[list.sorter].value;
            if (key == COST_INFINITY)
                continue;
            if (list.preferred_only && !is_preferred)
                continue;
            list.open.push(key, {id, op_id});
        }
    }
}

void BestFirstEngine::reconstruct_plan(int id) {
    found_plan.clear();
    int cursor = id;
    while (nodes[cursor].parent_id != -1 || nodes[cursor].op_id != -1) {
        found_plan.push_back(nodes[cursor].op_id);
        cursor = nodes[cursor].parent_id;
    }
    reverse(found_plan.begin(), found_plan.end());
}

BestFirstEngine::Status BestFirstEngine::run() {
    while (current_status == Status::running)
        step();
    return current_status;
}

BestFirstEngine::Options BestFirstSearch::engine_options(
    const SearchConfig &config) {
    BestFirstEngine::Options options;
    switch (config.heuristic) {
    case HeuristicChoice::cg:
        options.sort_by_cg = true;
        break;
    case HeuristicChoice::ff:
        options.sort_by_ff = true;
        break;
    case HeuristicChoice::both:
        options.sort_by_cg = options.sort_by_ff = true;
        break;
    }
    switch (config.preferred) {
    case PreferredMode::none:
        options.preferred = BestFirstEngine::PreferredOps::none;
        break;
    case PreferredMode::helpful_transitions:
        options.preferred = BestFirstEngine::PreferredOps::ht;
        break;
    case PreferredMode::ht_fallback_ha:
        options.preferred = BestFirstEngine::PreferredOps::ht_fallback_ha;
        break;
    case PreferredMode::ht_and_ha:
        options.preferred = BestFirstEngine::PreferredOps::ht_and_ha;
        break;
    }
    options.limits = config.limits;
    return options;
}

BestFirstSearch::BestFirstSearch(const CompiledTask &compiled,
                                 const SearchConfig &config)
    : compiled(compiled), config(config) {
    if (config.engine == EngineKind::gbfs &&
        config.heuristic == HeuristicChoice::both)
        throw invalid_argument("gbfs uses a single heuristic");
    if (config.engine == EngineKind::mhbfs &&
        config.heuristic != HeuristicChoice::both)
        throw invalid_argument("mhbfs uses both heuristics");
    current = make_unique<BestFirstEngine>(compiled, engine_options(config));
}

void BestFirstSearch::finish(Outcome outcome, const Plan &reduced_plan) {
    finished = true;
    final_result.outcome = outcome;
    final_result.plan = compiled.to_original_plan(reduced_plan);
    accumulated.accumulate(current->stats());
    final_result.stats = accumulated;
}

bool BestFirstSearch::step() {
    if (finished)
        return false;
    BestFirstEngine::Status status = current->step();
    switch (status) {
    case BestFirstEngine::Status::running:
        return true;
    case BestFirstEngine::Status::solved:
        finish(Outcome::plan_found, current->plan());
        return false;
    case BestFirstEngine::Status::limit:
        finish(Outcome::resource_limit, {});
        return false;
    case BestFirstEngine::Status::exhausted: {
        bool cg_only = config.heuristic == HeuristicChoice::cg;
        if (cg_only && !restarted && current->pruned_on_cg_infinity()) {
            /*
              All open states looked like dead ends to the causal graph
              heuristic, which cannot be trusted for that. Restart with
              the FF heuristic, which can.
            */
            restarted = true;
            accumulated.accumulate(current->stats());
            accumulated.restarted_with_ff = true;
            BestFirstEngine::Options options = engine_options(config);
            options.sort_by_cg = false;
            options.sort_by_ff = true;
            options.preferred =
                options.preferred == BestFirstEngine::PreferredOps::none
                    ? BestFirstEngine::PreferredOps::none
                    : BestFirstEngine::PreferredOps::ha_only;
            current = make_unique<BestFirstEngine>(compiled, options);
            return true;
        }
        finish(Outcome::unsolvable, {});
        return false;
    }
    }
    return false;
}

SearchResult BestFirstSearch::result() const {
    assert(finished);
    return final_result;
}

SearchStats BestFirstSearch::live_stats() const {
    if (finished)
        return final_result.stats;
    SearchStats stats = accumulated;
    stats.accumulate(current->stats());
    return stats;
}

SearchResult run_best_first(const CompiledTask &compiled,
                            const SearchConfig &config) {
    BestFirstSearch search(compiled, config);
    while (search.step()) {
    }
    return search.result();
}

}    // namespace mvplan
