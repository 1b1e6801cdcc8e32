#ifndef MVPLAN_STATE_REGISTRY_H
#define MVPLAN_STATE_REGISTRY_H

#include "mpt.h"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace mvplan {

struct StateHash {
    size_t operator()(const State &state) const {
        // FNV-1a over the values.
        size_t hash = 14695981039346656037ULL;
        for (int value : state.values) {
            hash ^= static_cast<size_t>(value);
            hash *= 1099511628211ULL;
        }
        return hash;
    }
};

class StateRegistry {
public:
    int intern(const State &state) {
        auto [it, inserted] =
            ids.emplace(state, static_cast<int>(states.size()));
        if (inserted)
            states.push_back(state);
        return it->second;
    }

    const State &operator[](int id) const {
        return states[id];
    }

    size_t size() const {
        return states.size();
    }

    void clear() {
        states.clear();
        ids.clear();
    }

private:
    std::vector<State> states;
    std::unordered_map<State, int, StateHash> ids;
};

}    // namespace mvplan

#endif
