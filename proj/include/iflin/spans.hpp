#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "iflin/grid.hpp"
#include "iflin/linalg.hpp"
#include "iflin/releq.hpp"

namespace iflin {

/// Ordered, nonempty sequence of vectors sharing one dimension.
template <typename Real>
class BasicVectorSet {
 public:
  using Vector = BasicIfVector<Real>;

  explicit BasicVectorSet(std::vector<Vector> vectors)
      : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw ShapeError("vector set is empty");
    for (const Vector& v : vectors_) {
      if (v.rows() != vectors_.front().rows() || v.rows() == 0) {
        throw DimensionMismatch("vector set members must share a positive dimension");
      }
    }
  }

  std::size_t size() const { return vectors_.size(); }
  Eigen::Index dim() const { return vectors_.front().rows(); }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  friend bool operator==(const BasicVectorSet& a, const BasicVectorSet& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!exactly_equal(a[i], b[i])) return false;
    return true;
  }

 private:
  std::vector<Vector> vectors_;
};

using VectorSet = BasicVectorSet<Rational>;

/// Matrix whose columns are the given vectors.
template <typename Real>
BasicIfMatrix<Real> columns_of(std::span<const BasicIfVector<Real>> vectors,
                               Eigen::Index dim) {
  BasicIfMatrix<Real> m(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].rows() != dim) {
      throw DimensionMismatch("vector of dimension " +
                              std::to_string(vectors[i].rows()) +
                              " in a family of dimension " + std::to_string(dim));
    }
    m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return m;
}

/// sum_i coeffs_i . vectors_i
template <typename Real>
BasicIfVector<Real> recompose(const BasicIfVector<Real>& coeffs,
                              std::span<const BasicIfVector<Real>> vectors,
                              Eigen::Index dim) {
  if (static_cast<std::size_t>(coeffs.rows()) != vectors.size()) {
    throw DimensionMismatch("recompose: " + std::to_string(coeffs.rows()) +
                            " coefficients for " + std::to_string(vectors.size()) +
                            " vectors");
  }
  return apply(columns_of(vectors, dim), coeffs);
}

template <typename Real>
BasicIfVector<Real> recompose(const BasicIfVector<Real>& coeffs,
                              const BasicVectorSet<Real>& s) {
  return recompose(coeffs, std::span<const BasicIfVector<Real>>(s.vectors()), s.dim());
}

/// Greatest coefficients expressing v over `vectors`, if v lies in their
/// span. The empty family spans only the zero vector.
template <typename Real>
std::optional<BasicIfVector<Real>> in_span(const BasicIfVector<Real>& v,
                                           std::span<const BasicIfVector<Real>> vectors) {
  const BasicIfMatrix<Real> cols = columns_of(vectors, v.rows());
  auto report = greatest_solution(cols, v);
  if (!report.solvable) return std::nullopt;
  return std::move(report.candidate);
}

template <typename Real>
std::optional<BasicIfVector<Real>> in_span(const BasicIfVector<Real>& v,
                                           const BasicVectorSet<Real>& s) {
  if (v.rows() != s.dim()) {
    throw DimensionMismatch("span: vector has dimension " + std::to_string(v.rows()) +
                            ", set has dimension " + std::to_string(s.dim()));
  }
  return in_span(v, std::span<const BasicIfVector<Real>>(s.vectors()));
}

/// Member `index` equals the combination `coefficients` of the others
/// (listed in set order with `index` skipped).
template <typename Real>
struct BasicDependence {
  std::size_t index = 0;
  BasicIfVector<Real> coefficients;
};

template <typename Real>
struct BasicIndependenceReport {
  bool independent = true;
  std::vector<BasicDependence<Real>> dependences;
};

template <typename Real>
BasicIndependenceReport<Real> independence_report(const BasicVectorSet<Real>& s) {
  BasicIndependenceReport<Real> report;
  std::vector<BasicIfVector<Real>> others;
  for (std::size_t i = 0; i < s.size(); ++i) {
    others.clear();
    for (std::size_t k = 0; k < s.size(); ++k)
      if (k != i) others.push_back(s[k]);
    if (auto c = in_span(s[i], std::span<const BasicIfVector<Real>>(others))) {
      report.independent = false;
      report.dependences.push_back({i, std::move(*c)});
    }
  }
  return report;
}

/// No member is a linear combination of the others.
template <typename Real>
bool is_independent(const BasicVectorSet<Real>& s) {
  return independence_report(s).independent;
}

/// e_i has <1,0> at position i and <0,1> elsewhere.
template <typename Real = Rational>
BasicVectorSet<Real> standard_basis(Eigen::Index n) {
  if (n < 1) throw ShapeError("standard basis needs n >= 1");
  std::vector<BasicIfVector<Real>> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    BasicIfVector<Real> e = zero_vector<Real>(n);
    e(i) = BasicIfScalar<Real>::top();
    out.push_back(std::move(e));
  }
  return BasicVectorSet<Real>(std::move(out));
}

template <typename Real>
struct BasicProbeCertificate {
  bool representable = false;
  bool unique = false;
  std::optional<BasicIfVector<Real>> coefficients;  // greatest representation
  std::optional<BasicIfVector<Real>> alternative;   // a second, distinct one
};

template <typename Real>
struct BasicBasisReport {
  bool basis = false;
  bool independent = false;
  std::vector<BasicProbeCertificate<Real>> certificates;
};

/// Representation of `probe` over `s`, with a uniqueness verdict.
///
/// Representations on the value grid of (s, probe) are enumerated. Any
/// representation can be moved onto the grid channelwise (mu down, nu up)
/// without breaking it, so the representation is unique iff the only grid
/// representation is the greatest one.
template <typename Real>
BasicProbeCertificate<Real> certify_probe(const BasicVectorSet<Real>& s,
                                          const BasicIfVector<Real>& probe,
                                          std::uint64_t budget = kDefaultBudget) {
  BasicProbeCertificate<Real> cert;
  cert.coefficients = in_span(probe, s);
  cert.representable = cert.coefficients.has_value();
  if (!cert.representable) return cert;

  ValueSet<Real> grid;
  for (const auto& v : s) grid.insert(v);
  grid.insert(probe);
  const auto pairs = grid.pairs();
  const BasicIfMatrix<Real> cols = columns_of(std::span<const BasicIfVector<Real>>(s.vectors()), s.dim());
  BasicIfVector<Real> c(static_cast<Eigen::Index>(s.size()));
  for_each_assignment(pairs.size(), s.size(), budget, "uniqueness enumeration",
                      [&](std::span<const std::size_t> idx) {
                        for (Eigen::Index j = 0; j < c.rows(); ++j)
                          c(j) = pairs[idx[static_cast<std::size_t>(j)]];
                        if (c != *cert.coefficients && apply(cols, c) == probe) {
                          cert.alternative = c;
                          return false;
                        }
                        return true;
                      });
  cert.unique = !cert.alternative.has_value();
  return cert;
}

/// `s` is independent and every probe has exactly one representation.
/// Probes stand in for the (infinite) subspace being checked.
template <typename Real>
BasicBasisReport<Real> is_basis(const BasicVectorSet<Real>& s,
                                const BasicVectorSet<Real>& probes,
                                std::uint64_t budget = kDefaultBudget) {
  if (probes.dim() != s.dim()) {
    throw DimensionMismatch("basis check: probes have dimension " +
                            std::to_string(probes.dim()) + ", set has " +
                            std::to_string(s.dim()));
  }
  BasicBasisReport<Real> report;
  report.independent = is_independent(s);
  report.basis = report.independent;
  for (const auto& p : probes) {
    report.certificates.push_back(certify_probe(s, p, budget));
    const auto& cert = report.certificates.back();
    report.basis = report.basis && cert.representable && cert.unique;
  }
  return report;
}

using Dependence = BasicDependence<Rational>;
using IndependenceReport = BasicIndependenceReport<Rational>;
using ProbeCertificate = BasicProbeCertificate<Rational>;
using BasisReport = BasicBasisReport<Rational>;

}  // namespace iflin
