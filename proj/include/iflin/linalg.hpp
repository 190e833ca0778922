#pragma once

#include <string>

#include <Eigen/Core>

#include "iflin/errors.hpp"
#include "iflin/scalar.hpp"

namespace iflin {

template <typename Real>
using BasicIfMatrix =
    Eigen::Matrix<BasicIfScalar<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Column vector; an element of V_n.
template <typename Real>
using BasicIfVector = Eigen::Matrix<BasicIfScalar<Real>, Eigen::Dynamic, 1>;

using IfMatrix = BasicIfMatrix<Rational>;
using IfVector = BasicIfVector<Rational>;

namespace detail {

inline std::string shape(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

template <typename A, typename B>
void require_same_shape(const Eigen::MatrixBase<A>& a,
                        const Eigen::MatrixBase<B>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shapes " +
                            shape(a.rows(), a.cols()) + " and " +
                            shape(b.rows(), b.cols()) + " differ");
  }
}

}  // namespace detail

/// n x n matrix with <1,0> on the diagonal and <0,1> elsewhere.
template <typename Real = Rational>
BasicIfMatrix<Real> identity(Eigen::Index n) {
  BasicIfMatrix<Real> m = BasicIfMatrix<Real>::Constant(
      n, n, BasicIfScalar<Real>::bottom());
  m.diagonal().setConstant(BasicIfScalar<Real>::top());
  return m;
}

/// All-<0,1> matrix.
template <typename Real = Rational>
BasicIfMatrix<Real> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return BasicIfMatrix<Real>::Constant(rows, cols,
                                       BasicIfScalar<Real>::bottom());
}

template <typename Real = Rational>
BasicIfVector<Real> zero_vector(Eigen::Index n) {
  return BasicIfVector<Real>::Constant(n, BasicIfScalar<Real>::bottom());
}

/// Shape-aware exact equality. Eigen's operator== asserts on mismatched
/// shapes; this returns false instead.
template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

/// Max-min composition: r_ik = < max_j min(a_ij.mu, b_jk.mu),
///                               min_j max(a_ij.nu, b_jk.nu) >.
template <typename A, typename B>
BasicIfMatrix<typename A::Scalar::value_type> compose(
    const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Real = typename A::Scalar::value_type;
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("compose: inner dimensions of " +
                            detail::shape(a.rows(), a.cols()) + " and " +
                            detail::shape(b.rows(), b.cols()) + " differ");
  }
  if (a.cols() == 0) return zero_matrix<Real>(a.rows(), b.cols());
  using S = BasicIfScalar<Real>;
  BasicIfMatrix<Real> r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < b.cols(); ++k) {
      // redux rather than sum(): sum() wants Scalar(0) for the empty case.
      r(i, k) = a.row(i).transpose().cwiseProduct(b.col(k)).redux(
          [](const S& x, const S& y) { return x + y; });
    }
  }
  return r;
}

/// b = A x with b_i = sum_j a_ij . x_j.
template <typename A, typename X>
BasicIfVector<typename A::Scalar::value_type> apply(
    const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<X>& x) {
  if (x.cols() != 1 || a.cols() != x.rows()) {
    throw DimensionMismatch("apply: matrix " + detail::shape(a.rows(), a.cols()) +
                            " cannot act on vector " +
                            detail::shape(x.rows(), x.cols()));
  }
  return compose(a, x);
}

/// Entrywise join.
template <typename A, typename B>
BasicIfMatrix<typename A::Scalar::value_type> add(
    const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  detail::require_same_shape(a, b, "add");
  return a + b;
}

/// Entrywise meet with a scalar.
template <typename Real, typename A>
BasicIfMatrix<Real> scale(const BasicIfScalar<Real>& alpha,
                          const Eigen::MatrixBase<A>& a) {
  return a.unaryExpr([&alpha](const BasicIfScalar<Real>& x) { return alpha * x; });
}

template <typename Real, typename A>
BasicIfVector<Real> scale_vector(const BasicIfScalar<Real>& alpha,
                                 const Eigen::MatrixBase<A>& v) {
  return v.unaryExpr([&alpha](const BasicIfScalar<Real>& x) { return alpha * x; });
}

template <typename A>
BasicIfMatrix<typename A::Scalar::value_type> transpose(
    const Eigen::MatrixBase<A>& a) {
  return a.transpose();
}

/// Entrywise partial order.
template <typename A, typename B>
bool leq(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  detail::require_same_shape(a, b, "leq");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!leq(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

}  // namespace iflin
