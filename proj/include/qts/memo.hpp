#pragma once

#include <cstdlib>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace qts {

// Entry limit shared by every memo table; read once from QTS_CACHE_SIZE
// (0 disables caching).  Default 200000 entries per table.
std::size_t memo_capacity();

// Thread-safe memo table.  When full it is cleared wholesale; values are
// pure functions of their keys, so eviction never changes results.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoTable {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Value& value) {
    const std::size_t cap = memo_capacity();
    if (cap == 0) return;
    std::unique_lock lock(mutex_);
    if (map_.size() >= cap) map_.clear();
    map_.emplace(key, value);
  }

  template <class F>
  Value get_or_compute(const Key& key, F&& compute) {
    if (auto hit = find(key)) return *hit;
    Value value = compute();
    insert(key, value);
    return value;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace qts
