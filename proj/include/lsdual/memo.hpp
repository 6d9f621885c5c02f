#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace lsdual {

/// Thread-safe memo table. Values are computed outside the lock; if two
/// threads race on one key, the first stored value wins and both see it.
template <class Key, class Value>
class Memo {
public:
    template <class Fn>
    std::shared_ptr<const Value> get(const Key& key, Fn compute) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        auto fresh = std::make_shared<const Value>(compute());
        std::lock_guard<std::mutex> lock(mutex_);
        return table_.try_emplace(key, std::move(fresh)).first->second;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mutex_);
        table_.clear();
    }

private:
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<const Value>> table_;
};

}  // namespace lsdual
