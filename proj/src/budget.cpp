#include "dreg/budget.hpp"

#include <cstdlib>

#include "dreg/errors.hpp"

namespace dreg {

Deadline::Deadline(std::chrono::milliseconds budget)
    : end_(std::chrono::steady_clock::now() + budget), budget_(budget) {}

Deadline Deadline::from_environment() {
  const char* env = std::getenv("DREG_BUDGET_MS");
  if (env == nullptr || *env == '\0') return Deadline();
  char* end = nullptr;
  long long ms = std::strtoll(env, &end, 10);
  if (end == env || ms <= 0) return Deadline();
  return Deadline(std::chrono::milliseconds(ms));
}

void Deadline::check(const char* stage, const GroebnerStats& stats) const {
  if (!end_ || std::chrono::steady_clock::now() < *end_) return;
  throw ResourceError(std::string(stage) + ": budget of " +
                      std::to_string(budget_.count()) + " ms exceeded (basis size " +
                      std::to_string(stats.basis_size) + ", pairs reduced " +
                      std::to_string(stats.pairs_reduced) + ", pairs created " +
                      std::to_string(stats.pairs_created) + ")");
}

}  // namespace dreg
