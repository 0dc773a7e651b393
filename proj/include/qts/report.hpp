#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "json.hpp"
#include "qts/partition.hpp"
#include "qts/rational_function.hpp"

namespace qts {

// Outcome of one identity instance.  witness holds the canonical string of
// LHS - RHS (or a short description) exactly when passed is false.
struct IdentityReport {
  std::string identity_id;
  nlohmann::json index;
  bool passed = false;
  std::optional<std::string> witness;
  double elapsed_ms = 0;

  nlohmann::json to_json(bool with_elapsed = true) const;
};

inline nlohmann::json to_json_value(const Partition& p) { return nlohmann::json(p.parts()); }

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Report for lhs == rhs.
IdentityReport compare(std::string id, nlohmann::json index, const RationalFn& lhs,
                       const RationalFn& rhs, const Stopwatch& clock);
// Report for a boolean condition with a free-form witness on failure.
IdentityReport verdict(std::string id, nlohmann::json index, bool passed, std::string witness,
                       const Stopwatch& clock);

}  // namespace qts
