#include "search_types.h"

using namespace std;

namespace mvplan {

string to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::plan_found:
        return "plan-found";
    case Outcome::unsolvable:
        return "unsolvable";
    case Outcome::resource_limit:
        return "resource-limit";
    }
    return "?";
}

string to_string(EngineKind engine) {
    switch (engine) {
    case EngineKind::gbfs:
        return "gbfs";
    case EngineKind::mhbfs:
        return "mhbfs";
    case EngineKind::fibs:
        return "fibs";
    case EngineKind::portfolio:
        return "portfolio";
    }
    return "?";
}

string to_string(PreferredMode mode) {
    switch (mode) {
    case PreferredMode::none:
        return "none";
    case PreferredMode::helpful_transitions:
        return "ht";
    case PreferredMode::ht_fallback_ha:
        return "ht+ha-fallback";
    case PreferredMode::ht_and_ha:
        return "ht+ha";
    }
    return "?";
}

string to_string(HeuristicChoice heuristic) {
    switch (heuristic) {
    case HeuristicChoice::cg:
        return "cg";
    case HeuristicChoice::ff:
        return "ff";
    case HeuristicChoice::both:
        return "both";
    }
    return "?";
}

}    // namespace mvplan
