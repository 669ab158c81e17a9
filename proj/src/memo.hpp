#pragma once

#include <map>
#include <mutex>

namespace tracecat::detail {

// Process-wide memo table. Entries are never erased, so returned references
// stay valid. `compute` runs without the lock held and may recurse.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace tracecat::detail
