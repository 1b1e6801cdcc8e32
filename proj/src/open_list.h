#ifndef MVPLAN_OPEN_LIST_H
#define MVPLAN_OPEN_LIST_H

#include <cassert>
#include <deque>
#include <map>
#include <utility>

namespace mvplan {

/*
  Priority buckets keyed by an integer value, first-in-first-out within a
  bucket. With a constant key this degenerates to a plain queue, which
  makes the surrounding search behave like breadth-first search on
  heuristic plateaus.
*/
template <typename Entry>
class BucketOpenList {
public:
    void push(int key, Entry entry) {
        buckets[key].push_back(std::move(entry));
        ++count;
    }

    bool empty() const {
        return count == 0;
    }

    size_t size() const {
        return count;
    }

    std::pair<int, Entry> pop_min() {
        assert(!empty());
        auto it = buckets.begin();
        int key = it->first;
        Entry entry = std::move(it->second.front());
        it->second.pop_front();
        if (it->second.empty())
            buckets.erase(it);
        --count;
        return {key, std::move(entry)};
    }

    void clear() {
        buckets.clear();
        count = 0;
    }

private:
    std::map<int, std::deque<Entry>> buckets;
    size_t count = 0;
};

}    // namespace mvplan

#endif
