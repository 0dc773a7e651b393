#include "qts/memo.hpp"

namespace qts {

std::size_t memo_capacity() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("QTS_CACHE_SIZE");
    if (env == nullptr || *env == '\0') return std::size_t{200000};
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    return (end && *end == '\0') ? static_cast<std::size_t>(v) : std::size_t{200000};
  }();
  return cap;
}

}  // namespace qts
