#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>

#include "iflin/grid.hpp"
#include "iflin/linalg.hpp"

namespace iflin {

/// Whether T Y T = T. T is m x n, Y must be n x m.
template <typename Real>
bool is_g_inverse(const BasicIfMatrix<Real>& t, const BasicIfMatrix<Real>& y) {
  if (y.rows() != t.cols() || y.cols() != t.rows()) {
    throw DimensionMismatch("g-inverse of a " + detail::shape(t.rows(), t.cols()) +
                            " matrix must be " + detail::shape(t.cols(), t.rows()) +
                            ", got " + detail::shape(y.rows(), y.cols()));
  }
  return compose(compose(t, y), t) == t;
}

/// Greatest Y over the value grid of T (components of T together with 0 and 1)
/// with T Y T <= T.
///
/// Per channel this is the residual of max-min composition:
///   Y.mu(j,k) = min over i,l of  (min(T.mu(i,j), T.mu(k,l)) -> T.mu(i,l))
///   Y.nu(j,k) = max over i,l of  (max(T.nu(i,j), T.nu(k,l)) => T.nu(i,l))
/// with a -> b = 1 if a <= b else b, and its dual a => b = 0 if a >= b else b.
/// mu is then capped at 1 - nu and rounded down onto the grid.
///
/// Composition is monotone, so T has a g-inverse on the grid iff this
/// matrix is one.
template <typename Real>
BasicIfMatrix<Real> greatest_g_inverse_candidate(const BasicIfMatrix<Real>& t) {
  const Eigen::Index m = t.rows();
  const Eigen::Index n = t.cols();
  ValueSet<Real> grid;
  grid.insert(t);
  const std::vector<Real> values = grid.values();

  BasicIfMatrix<Real> y(n, m);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      Real mu(1);
      Real nu(0);
      for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index l = 0; l < n; ++l) {
          const Real lo = std::min(t(i, j).mu(), t(k, l).mu());
          if (lo > t(i, l).mu()) mu = std::min(mu, t(i, l).mu());
          const Real hi = std::max(t(i, j).nu(), t(k, l).nu());
          if (hi < t(i, l).nu()) nu = std::max(nu, t(i, l).nu());
        }
      }
      if (Real(1) < mu + nu) {
        const Real cap = Real(1) - nu;
        mu = *std::prev(std::upper_bound(values.begin(), values.end(), cap));
      }
      y(j, k) = BasicIfScalar<Real>(mu, nu);
    }
  }
  return y;
}

/// A g-inverse of T whose components come from T's values together with 0
/// and 1, or nullopt if none exists there. Returns the greatest such
/// witness.
template <typename Real>
std::optional<BasicIfMatrix<Real>> find_g_inverse(const BasicIfMatrix<Real>& t) {
  BasicIfMatrix<Real> y = greatest_g_inverse_candidate(t);
  if (is_g_inverse(t, y)) return y;
  return std::nullopt;
}

/// Exhaustive search for a g-inverse over the same grid, in lexicographic
/// candidate order. Throws BudgetExceeded when pairs^(m*n) > budget.
template <typename Real>
std::optional<BasicIfMatrix<Real>> search_g_inverse(
    const BasicIfMatrix<Real>& t, std::uint64_t budget = kDefaultBudget) {
  ValueSet<Real> grid;
  grid.insert(t);
  const auto pairs = grid.pairs();
  const Eigen::Index rows = t.cols();
  const Eigen::Index cols = t.rows();
  std::optional<BasicIfMatrix<Real>> found;
  BasicIfMatrix<Real> y(rows, cols);
  for_each_assignment(
      pairs.size(), static_cast<std::size_t>(rows * cols), budget,
      "g-inverse search", [&](std::span<const std::size_t> idx) {
        for (Eigen::Index r = 0; r < rows; ++r)
          for (Eigen::Index c = 0; c < cols; ++c)
            y(r, c) = pairs[idx[static_cast<std::size_t>(r * cols + c)]];
        if (is_g_inverse(t, y)) {
          found = y;
          return false;
        }
        return true;
      });
  return found;
}

}  // namespace iflin
