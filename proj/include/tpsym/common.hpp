#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tpsym {

// Computational-basis labels of C^N and subsystem dimensions.
using label_t = std::int64_t;

// Input outside an operation's domain. The CLI maps this to exit code 3.
class domain_error : public std::domain_error {
  using std::domain_error::domain_error;
};

// A configured search or summation budget would be exceeded (exit code 4).
class budget_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace limits {
// Largest admissible product of subsystem dimensions.
inline constexpr label_t max_dimension = label_t{1} << 31;
// Largest N for which dense N x N matrices are materialized by default.
inline constexpr label_t default_dense_limit = 212;
// Largest k with k! summations (projectors, permutation searches).
inline constexpr int max_factorial_slots = 6;
// Pair budget for the coarse-grain search, 6!^2.
inline constexpr long default_match_budget = 518400;
}  // namespace limits

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

}  // namespace tpsym
