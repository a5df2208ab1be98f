#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

namespace dreg {

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

// Wall-clock cap for one Gröbner computation. The default cap comes from the
// environment variable DREG_BUDGET_MS (unset or non-positive: unlimited).
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget);

  static Deadline from_environment();

  bool limited() const { return end_.has_value(); }
  // Throws ResourceError carrying `stage` and the progress counters.
  void check(const char* stage, const GroebnerStats& stats) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
  std::chrono::milliseconds budget_{0};
};

}  // namespace dreg
