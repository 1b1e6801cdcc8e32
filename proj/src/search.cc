#include "search.h"

#include "best_first_search.h"
#include "fibs.h"
#include "portfolio.h"

namespace mvplan {

SearchResult run_search(const CompiledTask &compiled, const SearchConfig &config) {
    switch (config.engine) {
    case EngineKind::gbfs:
    case EngineKind::mhbfs:
        return run_best_first(compiled, config);
    case EngineKind::fibs:
        return run_fibs(compiled, config);
    case EngineKind::portfolio:
        return run_portfolio(compiled, default_portfolio(config.limits));
    }
    return {};
}

}    // namespace mvplan
