#ifndef MVPLAN_SEARCH_TYPES_H
#define MVPLAN_SEARCH_TYPES_H

#include "mpt.h"

#include <limits>
#include <string>

namespace mvplan {

enum class Outcome {
    plan_found,
    unsolvable,
    resource_limit,
};

enum class EngineKind {
    gbfs,
    mhbfs,
    fibs,
    portfolio,
};

enum class PreferredMode {
    none,
    helpful_transitions,
    ht_fallback_ha,    // helpful transitions, helpful actions when none
    ht_and_ha,
};

enum class HeuristicChoice {
    cg,
    ff,
    both,
};

struct SearchLimits {
    long max_expansions = std::numeric_limits<long>::max();
    double timeout_seconds = std::numeric_limits<double>::infinity();
};

struct SearchConfig {
    EngineKind engine = EngineKind::mhbfs;
    HeuristicChoice heuristic = HeuristicChoice::both;
    PreferredMode preferred = PreferredMode::ht_and_ha;
    SearchLimits limits;
};

struct SearchStats {
    long expansions = 0;
    long generations = 0;
    long evaluations = 0;
    bool restarted_with_ff = false;
    bool fibs_protected_pass_failed = false;
    bool fibs_unprotected_pass_ran = false;

    void accumulate(const SearchStats &other) {
        expansions += other.expansions;
        generations += other.generations;
        evaluations += other.evaluations;
        restarted_with_ff = restarted_with_ff || other.restarted_with_ff;
        fibs_protected_pass_failed =
            fibs_protected_pass_failed || other.fibs_protected_pass_failed;
        fibs_unprotected_pass_ran =
            fibs_unprotected_pass_ran || other.fibs_unprotected_pass_ran;
    }
};

struct SearchResult {
    Outcome outcome = Outcome::resource_limit;
    Plan plan;    // operator ids of the original (uncompiled) task
    SearchStats stats;
};

std::string to_string(Outcome outcome);
std::string to_string(EngineKind engine);
std::string to_string(PreferredMode mode);
std::string to_string(HeuristicChoice heuristic);

}    // namespace mvplan

#endif
