#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace dualhopf {

/// Thread-safe memo table. Readers share the lock; the value is computed
/// without holding it, so recursive computations may re-enter the cache.
/// Two threads racing on one key both compute, and the first insertion wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace dualhopf
