#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "iflin/ginverse.hpp"
#include "iflin/grid.hpp"
#include "iflin/linalg.hpp"

namespace iflin {

/// Outcome of solving A x = b.
template <typename Real>
struct BasicSolveReport {
  BasicIfVector<Real> candidate;  // greatest candidate x
  bool solvable = false;          // A candidate == b
  BasicIfVector<Real> residual;   // A candidate
};

/// Outcome of solving X B = R for X.
template <typename Real>
struct BasicMatrixSolveReport {
  BasicIfMatrix<Real> candidate;
  bool solvable = false;
  BasicIfMatrix<Real> residual;  // candidate B
};

using SolveReport = BasicSolveReport<Rational>;
using MatrixSolveReport = BasicMatrixSolveReport<Rational>;

/// sigma(a, b) = b if b < a (strict dominance in both components), else <1,0>.
template <typename Real>
BasicIfScalar<Real> sigma(const BasicIfScalar<Real>& a,
                          const BasicIfScalar<Real>& b) {
  return lt(b, a) ? b : BasicIfScalar<Real>::top();
}

/// Greatest candidate for A x = b, solved channel by channel.
///
/// Membership is a max-min system; its greatest solution is
///   x_j.mu = min_i { b_i.mu if a_ij.mu > b_i.mu, else 1 }.
/// Non-membership is the dual min-max system, smallest solution
///   x_j.nu = max_i { b_i.nu if a_ij.nu < b_i.nu, else 0 }.
/// When the two channels disagree with mu + nu <= 1, mu is lowered to
/// 1 - nu; every valid solution still lies below the result, and A is
/// monotone, so the candidate solves the system iff any valid x does.
template <typename Real>
BasicSolveReport<Real> greatest_solution(const BasicIfMatrix<Real>& a,
                                         const BasicIfVector<Real>& b) {
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("solve: right-hand side has " +
                            std::to_string(b.rows()) + " entries, matrix has " +
                            std::to_string(a.rows()) + " rows");
  }
  BasicSolveReport<Real> report;
  report.candidate.resize(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    Real mu(1);
    Real nu(0);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j).mu() > b(i).mu()) mu = std::min(mu, b(i).mu());
      if (a(i, j).nu() < b(i).nu()) nu = std::max(nu, b(i).nu());
    }
    if (Real(1) < mu + nu) mu = Real(1) - nu;
    report.candidate(j) = BasicIfScalar<Real>(mu, nu);
  }
  report.residual = apply(a, report.candidate);
  report.solvable = report.residual == b;
  return report;
}

/// The literal pairwise formula x_j = meet_k sigma(m_jk, b_k), where the
/// comparison inside sigma is on whole pairs. It indexes the matrix by rows,
/// so it agrees with greatest_solution(A, b) when called with
/// m = transpose(A), provided no comparison is one-sided (see
/// `pairwise_sigma_applies`).
template <typename Real>
BasicIfVector<Real> pairwise_sigma_candidate(const BasicIfMatrix<Real>& m,
                                             const BasicIfVector<Real>& b) {
  if (m.cols() != b.rows()) {
    throw DimensionMismatch("pairwise sigma: matrix has " +
                            std::to_string(m.cols()) + " columns, vector has " +
                            std::to_string(b.rows()) + " entries");
  }
  BasicIfVector<Real> x(m.rows());
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    BasicIfScalar<Real> acc = BasicIfScalar<Real>::top();
    for (Eigen::Index k = 0; k < m.cols(); ++k) acc = acc * sigma(m(j, k), b(k));
    x(j) = acc;
  }
  return x;
}

/// True when every comparison made by pairwise_sigma_candidate(m, b) is
/// either m_jk <= b_k or b_k < m_jk strictly. Those are exactly the cases in
/// which the pair-level sigma and the per-channel rule coincide.
template <typename Real>
bool pairwise_sigma_applies(const BasicIfMatrix<Real>& m,
                            const BasicIfVector<Real>& b) {
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (!leq(m(j, k), b(k)) && !lt(b(k), m(j, k))) return false;
  return true;
}

template <typename Real>
bool verify_solution(const BasicIfMatrix<Real>& a, const BasicIfVector<Real>& x,
                     const BasicIfVector<Real>& b) {
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("verify: right-hand side has " +
                            std::to_string(b.rows()) + " entries, matrix has " +
                            std::to_string(a.rows()) + " rows");
  }
  return apply(a, x) == b;
}

/// Greatest X with X B = R. Row i of X solves B^T x = (row i of R)^T.
template <typename Real>
BasicMatrixSolveReport<Real> greatest_left_solution(const BasicIfMatrix<Real>& b,
                                                    const BasicIfMatrix<Real>& r) {
  if (b.cols() != r.cols()) {
    throw DimensionMismatch("solve-left: B has " + std::to_string(b.cols()) +
                            " columns, R has " + std::to_string(r.cols()));
  }
  const BasicIfMatrix<Real> bt = b.transpose();
  BasicMatrixSolveReport<Real> report;
  report.candidate.resize(r.rows(), b.rows());
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    const BasicIfVector<Real> rhs = r.row(i).transpose();
    report.candidate.row(i) = greatest_solution(bt, rhs).candidate.transpose();
  }
  report.residual = compose(report.candidate, b);
  report.solvable = report.residual == r;
  return report;
}

/// Every x over the value grid of (A, b) with A x = b, in lexicographic
/// order. Brute force; throws BudgetExceeded when pairs^cols > budget.
template <typename Real>
std::vector<BasicIfVector<Real>> enumerate_solutions(
    const BasicIfMatrix<Real>& a, const BasicIfVector<Real>& b,
    std::uint64_t budget = kDefaultBudget) {
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("enumerate: right-hand side has " +
                            std::to_string(b.rows()) + " entries, matrix has " +
                            std::to_string(a.rows()) + " rows");
  }
  ValueSet<Real> grid;
  grid.insert(a);
  grid.insert(b);
  const auto pairs = grid.pairs();
  std::vector<BasicIfVector<Real>> out;
  BasicIfVector<Real> x(a.cols());
  for_each_assignment(pairs.size(), static_cast<std::size_t>(a.cols()), budget,
                      "solution enumeration",
                      [&](std::span<const std::size_t> idx) {
                        for (Eigen::Index j = 0; j < x.rows(); ++j)
                          x(j) = pairs[idx[static_cast<std::size_t>(j)]];
                        if (apply(a, x) == b) out.push_back(x);
                        return true;
                      });
  return out;
}

/// Whether A has a g-inverse on its value grid.
template <typename Real>
bool is_regular(const BasicIfMatrix<Real>& a) {
  return find_g_inverse(a).has_value();
}

}  // namespace iflin
