#include "portfolio.h"

#include "best_first_search.h"
#include "fibs.h"

#include <cassert>
#include <memory>

using namespace std;

namespace mvplan {

namespace {

struct Member {
    unique_ptr<BestFirstSearch> best_first;
    unique_ptr<FibsSearch> fibs;
    bool done = false;
    bool sound_unsolvable;    // exhaustion of this member is a proof

    bool step() {
        return best_first ? best_first->step() : fibs->step();
    }

    SearchResult result() const {
        return best_first ? best_first->result() : fibs->result();
    }
};

}    // namespace

SearchResult run_portfolio(const CompiledTask &compiled,
                           const vector<SearchConfig> &members_config) {
    assert(!members_config.empty());
    vector<Member> members;
    for (const SearchConfig &config : members_config) {
        Member member;
        if (config.engine == EngineKind::fibs) {
            member.fibs = make_unique<FibsSearch>(compiled, config);
            member.sound_unsolvable = false;
        } else {
            member.best_first = make_unique<BestFirstSearch>(compiled, config);
            member.sound_unsolvable = true;
        }
        members.push_back(move(member));
    }

    auto combined_stats = [&members]() {
        SearchStats combined;
        for (const Member &member : members) {
            combined.accumulate(member.best_first
                                    ? member.best_first->live_stats()
                                    : member.fibs->live_stats());
        }
        return combined;
    };

    size_t live = members.size();
    while (live > 0) {
        for (Member &member : members) {
            if (member.done)
                continue;
            if (member.step())
                continue;
            member.done = true;
            --live;
            SearchResult result = member.result();
            if (result.outcome == Outcome::plan_found ||
                (result.outcome == Outcome::unsolvable &&
                 member.sound_unsolvable)) {
                result.stats = combined_stats();
                return result;
            }
        }
    }

    // Nobody found a plan or a proof.
    SearchResult result;
    result.outcome = Outcome::resource_limit;
    for (const Member &member : members) {
        SearchResult member_result = member.result();
        result.stats.accumulate(member_result.stats);
    }
    return result;
}

vector<SearchConfig> default_portfolio(const SearchLimits &limits) {
    vector<SearchConfig> configs;
    auto add = [&](EngineKind engine, HeuristicChoice heuristic,
                   PreferredMode preferred) {
        SearchConfig config;
        config.engine = engine;
        config.heuristic = heuristic;
        config.preferred = preferred;
        config.limits = limits;
        configs.push_back(config);
    };
    add(EngineKind::gbfs, HeuristicChoice::cg, PreferredMode::none);
    add(EngineKind::gbfs, HeuristicChoice::cg, PreferredMode::helpful_transitions);
    add(EngineKind::gbfs, HeuristicChoice::cg, PreferredMode::ht_fallback_ha);
    add(EngineKind::mhbfs, HeuristicChoice::both, PreferredMode::none);
    add(EngineKind::mhbfs, HeuristicChoice::both, PreferredMode::ht_and_ha);
    add(EngineKind::fibs, HeuristicChoice::cg, PreferredMode::none);
    return configs;
}

}    // namespace mvplan
