#ifndef MVPLAN_SEARCH_H
#define MVPLAN_SEARCH_H

#include "compiled_task.h"
#include "search_types.h"

namespace mvplan {

// Dispatches to the configured engine. Plans are reported in operator
// ids of the original task and always pass validate_plan.
SearchResult run_search(const CompiledTask &compiled, const SearchConfig &config);

}    // namespace mvplan

#endif
