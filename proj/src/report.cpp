#include "qts/report.hpp"

namespace qts {

nlohmann::json IdentityReport::to_json(bool with_elapsed) const {
  nlohmann::json out = {{"identity_id", identity_id}, {"index", index}, {"passed", passed}};
  out["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
  if (with_elapsed) out["elapsed_ms"] = elapsed_ms;
  return out;
}

IdentityReport compare(std::string id, nlohmann::json index, const RationalFn& lhs,
                       const RationalFn& rhs, const Stopwatch& clock) {
  IdentityReport r{std::move(id), std::move(index), lhs == rhs, std::nullopt, 0};
  if (!r.passed) r.witness = (lhs - rhs).str();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

IdentityReport verdict(std::string id, nlohmann::json index, bool passed, std::string witness,
                       const Stopwatch& clock) {
  IdentityReport r{std::move(id), std::move(index), passed, std::nullopt, 0};
  if (!passed) r.witness = std::move(witness);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace qts
