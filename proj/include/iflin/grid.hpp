#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "iflin/errors.hpp"
#include "iflin/scalar.hpp"

namespace iflin {

/// Default candidate cap for every exhaustive search.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Sorted set of component values. Join and meet only ever select existing
/// components, so the values occurring in a problem together with 0 and 1
/// form a finite grid that every search in the library enumerates.
template <typename Real>
class ValueSet {
 public:
  ValueSet() : values_{Real(0), Real(1)} {}

  void insert(const Real& v) { values_.push_back(v); }

  void insert(const BasicIfScalar<Real>& s) {
    values_.push_back(s.mu());
    values_.push_back(s.nu());
  }

  template <typename Derived>
  void insert(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) insert(m(i, j));
  }

  /// Sorted, duplicate-free values.
  std::vector<Real> values() const {
    std::vector<Real> v = values_;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  /// Every valid pair <mu, nu> with both components in the set, ordered
  /// lexicographically.
  std::vector<BasicIfScalar<Real>> pairs() const {
    return valid_pairs(std::span<const Real>(values()));
  }

  static std::vector<BasicIfScalar<Real>> valid_pairs(std::span<const Real> values) {
    std::vector<BasicIfScalar<Real>> out;
    for (const Real& mu : values)
      for (const Real& nu : values)
        if (BasicIfScalar<Real>::is_valid(mu, nu)) out.emplace_back(mu, nu);
    return out;
  }

 private:
  std::vector<Real> values_;
};

/// Valid pairs over {0, 1/steps, ..., 1}. steps = 5 gives the 21-element
/// grid {0, 0.2, ..., 1}.
inline std::vector<IfScalar> step_grid(int steps) {
  std::vector<Rational> values;
  for (int k = 0; k <= steps; ++k) values.emplace_back(k, steps);
  return ValueSet<Rational>::valid_pairs(values);
}

/// Number of points in choices^slots, saturating at UINT64_MAX.
inline std::uint64_t product_size(std::size_t choices, std::size_t slots) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    if (choices != 0 && total > UINT64_MAX / choices) return UINT64_MAX;
    total *= choices;
  }
  return total;
}

inline void require_budget(std::size_t choices, std::size_t slots,
                           std::uint64_t budget, const char* what) {
  const std::uint64_t n = product_size(choices, slots);
  if (n > budget) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(choices) +
                         "^" + std::to_string(slots) +
                         " candidates exceed the budget of " +
                         std::to_string(budget));
  }
}

/// Visits every assignment of `slots` slots to indices in [0, choices),
/// last slot varying fastest. `visit` returns false to stop early. Throws
/// BudgetExceeded before visiting anything if the product exceeds `budget`.
template <typename Visit>
void for_each_assignment(std::size_t choices, std::size_t slots,
                         std::uint64_t budget, const char* what, Visit&& visit) {
  require_budget(choices, slots, budget, what);
  if (choices == 0 && slots > 0) return;
  std::vector<std::size_t> idx(slots, 0);
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return;
    std::size_t pos = slots;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < choices) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (slots == 0) return;
  }
}

}  // namespace iflin
