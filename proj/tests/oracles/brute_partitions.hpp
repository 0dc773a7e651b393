#pragma once

// Grid enumeration used as an independent check on the partition
// enumerators: walk every vector in [0, bound]^n and filter by predicate.
#include <functional>
#include <set>
#include <vector>

namespace oracle {

inline std::set<std::vector<int>> grid_filter(int n, int bound,
                                              const std::function<bool(const std::vector<int>&)>& keep) {
  std::set<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  while (true) {
    bool decreasing = true;
    for (int i = 1; i < n; ++i) decreasing = decreasing && v[i] <= v[i - 1];
    if (decreasing && keep(v)) out.insert(v);
    int i = 0;
    while (i < n && v[i] == bound) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

}  // namespace oracle
