#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "iflin/grid.hpp"
#include "iflin/linalg.hpp"
#include "iflin/spans.hpp"

namespace iflin {

/// A linear transformation stored as data: an ordered domain basis and the
/// image of each basis vector. Maps are equal when bases and images are
/// exactly equal.
template <typename Real>
class BasicLinearMap {
 public:
  using Vector = BasicIfVector<Real>;

  BasicLinearMap(BasicVectorSet<Real> basis, std::vector<Vector> images)
      : basis_(std::move(basis)), images_(std::move(images)) {
    if (images_.size() != basis_.size()) {
      throw ShapeError("linear map has " + std::to_string(basis_.size()) +
                       " basis vectors but " + std::to_string(images_.size()) +
                       " images");
    }
    for (const Vector& v : images_) {
      if (v.rows() != images_.front().rows() || v.rows() == 0) {
        throw ShapeError("linear map images must share a positive dimension");
      }
    }
  }

  const BasicVectorSet<Real>& basis() const { return basis_; }
  const std::vector<Vector>& images() const { return images_; }
  std::span<const Vector> image_span() const { return images_; }
  Eigen::Index codomain_dim() const { return images_.front().rows(); }

  friend bool operator==(const BasicLinearMap& a, const BasicLinearMap& b) {
    if (!(a.basis_ == b.basis_) || a.images_.size() != b.images_.size()) return false;
    for (std::size_t i = 0; i < a.images_.size(); ++i)
      if (!exactly_equal(a.images_[i], b.images_[i])) return false;
    return true;
  }

 private:
  BasicVectorSet<Real> basis_;
  std::vector<Vector> images_;
};

using LinearMap = BasicLinearMap<Rational>;

// Map kinds accepted by make_map.
struct IdentityKind {};
struct ZeroKind {};
template <typename Real>
struct ScalarKind {
  BasicIfScalar<Real> alpha;
};
/// Keeps the listed coordinates (0-based) of each vector, in order.
struct ProjectionKind {
  std::vector<Eigen::Index> indices;
};
template <typename Real>
struct ExplicitKind {
  std::vector<BasicIfVector<Real>> images;
};

template <typename Real>
using BasicMapKind = std::variant<IdentityKind, ZeroKind, ScalarKind<Real>,
                                  ProjectionKind, ExplicitKind<Real>>;
using MapKind = BasicMapKind<Rational>;

template <typename Real>
BasicLinearMap<Real> make_map(const BasicMapKind<Real>& kind,
                              const BasicVectorSet<Real>& basis) {
  std::vector<BasicIfVector<Real>> images;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, IdentityKind>) {
          images = basis.vectors();
        } else if constexpr (std::is_same_v<K, ZeroKind>) {
          images.assign(basis.size(), zero_vector<Real>(basis.dim()));
        } else if constexpr (std::is_same_v<K, ScalarKind<Real>>) {
          for (const auto& c : basis) images.push_back(scale_vector(k.alpha, c));
        } else if constexpr (std::is_same_v<K, ProjectionKind>) {
          if (k.indices.empty()) throw ShapeError("projection needs at least one index");
          for (Eigen::Index i : k.indices) {
            if (i < 0 || i >= basis.dim()) {
              throw ShapeError("projection index " + std::to_string(i) +
                               " out of range for dimension " +
                               std::to_string(basis.dim()));
            }
          }
          for (const auto& c : basis) {
            BasicIfVector<Real> p(static_cast<Eigen::Index>(k.indices.size()));
            for (std::size_t r = 0; r < k.indices.size(); ++r)
              p(static_cast<Eigen::Index>(r)) = c(k.indices[r]);
            images.push_back(std::move(p));
          }
        } else {
          images = k.images;
        }
      },
      kind);
  return BasicLinearMap<Real>(basis, std::move(images));
}

template <typename Real>
BasicLinearMap<Real> identity_map(const BasicVectorSet<Real>& basis) {
  return make_map<Real>(IdentityKind{}, basis);
}

template <typename Real>
BasicLinearMap<Real> zero_map(const BasicVectorSet<Real>& basis) {
  return make_map<Real>(ZeroKind{}, basis);
}

template <typename Real>
BasicLinearMap<Real> scalar_map(const BasicIfScalar<Real>& alpha,
                                const BasicVectorSet<Real>& basis) {
  return make_map<Real>(ScalarKind<Real>{alpha}, basis);
}

/// Greatest coordinates of x over the domain basis, recombined with the
/// images. Throws NotInSpan when x has no representation.
template <typename Real>
BasicIfVector<Real> apply_map(const BasicLinearMap<Real>& t,
                              const BasicIfVector<Real>& x) {
  if (x.rows() != t.basis().dim()) {
    throw DimensionMismatch("apply map: vector has dimension " +
                            std::to_string(x.rows()) + ", domain has " +
                            std::to_string(t.basis().dim()));
  }
  auto coords = in_span(x, t.basis());
  if (!coords) throw NotInSpan("vector is not in the span of the map's domain basis");
  return recompose(*coords, t.image_span(), t.codomain_dim());
}

namespace detail {

template <typename Real>
void require_shared_basis(const BasicLinearMap<Real>& a,
                          const BasicLinearMap<Real>& b, const char* what) {
  if (!(a.basis() == b.basis())) {
    throw BasisMismatch(std::string(what) + ": maps are defined over different bases");
  }
  if (a.codomain_dim() != b.codomain_dim()) {
    throw DimensionMismatch(std::string(what) + ": codomain dimensions differ");
  }
}

}  // namespace detail

/// (t1 + t2)(c_j) = t1(c_j) + t2(c_j)
template <typename Real>
BasicLinearMap<Real> map_add(const BasicLinearMap<Real>& t1,
                             const BasicLinearMap<Real>& t2) {
  detail::require_shared_basis(t1, t2, "map add");
  std::vector<BasicIfVector<Real>> images;
  for (std::size_t j = 0; j < t1.images().size(); ++j)
    images.push_back(t1.images()[j] + t2.images()[j]);
  return BasicLinearMap<Real>(t1.basis(), std::move(images));
}

/// (alpha t)(c_j) = alpha . t(c_j)
template <typename Real>
BasicLinearMap<Real> map_scalar(const BasicIfScalar<Real>& alpha,
                                const BasicLinearMap<Real>& t) {
  std::vector<BasicIfVector<Real>> images;
  for (const auto& v : t.images()) images.push_back(scale_vector(alpha, v));
  return BasicLinearMap<Real>(t.basis(), std::move(images));
}

/// t1 after t2, over t2's domain basis.
template <typename Real>
BasicLinearMap<Real> map_compose(const BasicLinearMap<Real>& t1,
                                 const BasicLinearMap<Real>& t2) {
  if (t2.codomain_dim() != t1.basis().dim()) {
    throw BasisMismatch("map compose: inner map lands in dimension " +
                        std::to_string(t2.codomain_dim()) +
                        ", outer map is defined on dimension " +
                        std::to_string(t1.basis().dim()));
  }
  std::vector<BasicIfVector<Real>> images;
  for (const auto& v : t2.images()) images.push_back(apply_map(t1, v));
  return BasicLinearMap<Real>(t2.basis(), std::move(images));
}

/// Matrix of a map: column j holds coefficients of t(c_j) over basis_out.
template <typename Real>
struct BasicAssociatedMatrix {
  BasicIfMatrix<Real> matrix;
  BasicVectorSet<Real> basis_in;
  BasicVectorSet<Real> basis_out;
};

using AssociatedMatrix = BasicAssociatedMatrix<Rational>;

/// Canonical matrix of t: each column is the greatest coefficient vector of
/// the corresponding image over basis_out. Coefficients are generally not
/// unique, so other matrices can describe the same map; compare them with
/// `compare_matrix`.
template <typename Real>
BasicAssociatedMatrix<Real> matrix_of(const BasicLinearMap<Real>& t,
                                      const BasicVectorSet<Real>& basis_out) {
  if (basis_out.dim() != t.codomain_dim()) {
    throw DimensionMismatch("matrix of map: output basis has dimension " +
                            std::to_string(basis_out.dim()) + ", images have " +
                            std::to_string(t.codomain_dim()));
  }
  BasicIfMatrix<Real> m(static_cast<Eigen::Index>(basis_out.size()),
                        static_cast<Eigen::Index>(t.images().size()));
  for (std::size_t j = 0; j < t.images().size(); ++j) {
    auto coeffs = in_span(t.images()[j], basis_out);
    if (!coeffs) {
      throw NotInSpan("image of basis vector " + std::to_string(j) +
                      " is not in the span of the output basis");
    }
    m.col(static_cast<Eigen::Index>(j)) = *coeffs;
  }
  return {std::move(m), t.basis(), basis_out};
}

/// Vector described by column j of a coefficient matrix over basis_out.
template <typename Real>
BasicIfVector<Real> column_image(const BasicIfMatrix<Real>& m, Eigen::Index j,
                                 const BasicVectorSet<Real>& basis_out) {
  return recompose(BasicIfVector<Real>(m.col(j)), basis_out);
}

template <typename Real>
struct BasicEntryDifference {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  BasicIfScalar<Real> canonical;
  BasicIfScalar<Real> given;
};

/// How a caller-supplied matrix relates to the map it claims to describe.
template <typename Real>
struct BasicMatrixComparison {
  bool faithful = false;        // every column recomposes to its image
  bool entrywise_equal = false; // identical to the canonical matrix
  std::vector<Eigen::Index> unfaithful_columns;
  std::vector<BasicEntryDifference<Real>> differences;
};

template <typename Real>
BasicMatrixComparison<Real> compare_matrix(const BasicLinearMap<Real>& t,
                                           const BasicIfMatrix<Real>& given,
                                           const BasicVectorSet<Real>& basis_out) {
  const auto canonical = matrix_of(t, basis_out);
  detail::require_same_shape(canonical.matrix, given, "compare matrix");
  BasicMatrixComparison<Real> out;
  for (Eigen::Index j = 0; j < given.cols(); ++j) {
    if (!exactly_equal(column_image(given, j, basis_out),
                       t.images()[static_cast<std::size_t>(j)]))
      out.unfaithful_columns.push_back(j);
    for (Eigen::Index i = 0; i < given.rows(); ++i) {
      if (!(given(i, j) == canonical.matrix(i, j)))
        out.differences.push_back({i, j, canonical.matrix(i, j), given(i, j)});
    }
  }
  out.faithful = out.unfaithful_columns.empty();
  out.entrywise_equal = out.differences.empty();
  return out;
}

/// Two coefficient matrices describe the same images over basis_out.
template <typename Real>
bool same_by_recomposition(const BasicIfMatrix<Real>& a, const BasicIfMatrix<Real>& b,
                           const BasicVectorSet<Real>& basis_out) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (!exactly_equal(column_image(a, j, basis_out), column_image(b, j, basis_out)))
      return false;
  return true;
}

struct LawCheck {
  std::string name;
  bool passed = false;
};

/// Checks closure of L(V) under + and scalar multiplication and the seven
/// identities of its algebra, imagewise:
///   t1+t2 = t2+t1, (t1+t2)+t3 = t1+(t2+t3), (ab)t1 = a(bt1),
///   (a+b)t1 = at1+bt1, a(t1+t2) = at1+at2, I.t1 = t1, 0.t1 = 0.
template <typename Real>
std::vector<LawCheck> law_suite(const BasicLinearMap<Real>& t1,
                                const BasicLinearMap<Real>& t2,
                                const BasicLinearMap<Real>& t3,
                                const BasicIfScalar<Real>& alpha,
                                const BasicIfScalar<Real>& beta) {
  detail::require_shared_basis(t1, t2, "law suite");
  detail::require_shared_basis(t1, t3, "law suite");

  std::vector<LawCheck> out;
  const auto sum12 = map_add(t1, t2);
  const auto scaled = map_scalar(alpha, t1);
  const bool closed = sum12.basis() == t1.basis() && scaled.basis() == t1.basis() &&
                      sum12.codomain_dim() == t1.codomain_dim() &&
                      scaled.codomain_dim() == t1.codomain_dim();
  out.push_back({"closure under addition and scalar multiplication", closed});
  out.push_back({"t1+t2 = t2+t1", sum12 == map_add(t2, t1)});
  out.push_back({"(t1+t2)+t3 = t1+(t2+t3)",
                 map_add(sum12, t3) == map_add(t1, map_add(t2, t3))});
  out.push_back({"(ab)t1 = a(b t1)",
                 map_scalar(alpha * beta, t1) == map_scalar(alpha, map_scalar(beta, t1))});
  out.push_back({"(a+b)t1 = a t1 + b t1",
                 map_scalar(alpha + beta, t1) == map_add(scaled, map_scalar(beta, t1))});
  out.push_back({"a(t1+t2) = a t1 + a t2",
                 map_scalar(alpha, sum12) == map_add(scaled, map_scalar(alpha, t2))});

  const auto out_basis = standard_basis<Real>(t1.codomain_dim());
  out.push_back({"I.t1 = t1", map_compose(identity_map(out_basis), t1) == t1});
  const BasicLinearMap<Real> zero_t1(
      t1.basis(), std::vector<BasicIfVector<Real>>(
                      t1.images().size(), zero_vector<Real>(t1.codomain_dim())));
  out.push_back({"0.t1 = 0", map_compose(zero_map(out_basis), t1) == zero_t1});
  return out;
}

/// True when no map Y over t's domain basis, with image components drawn
/// from t's value grid, satisfies t + Y = 0. Join only raises membership
/// and lowers non-membership, so any nonzero image component rules an
/// inverse out; the search confirms it exhaustively.
template <typename Real>
bool no_additive_inverse_witness(const BasicLinearMap<Real>& t,
                                 std::uint64_t budget = kDefaultBudget) {
  ValueSet<Real> grid;
  for (const auto& v : t.images()) grid.insert(v);
  const auto pairs = grid.pairs();
  const std::size_t n = t.images().size();
  const Eigen::Index d = t.codomain_dim();
  const BasicLinearMap<Real> target(
      t.basis(), std::vector<BasicIfVector<Real>>(n, zero_vector<Real>(d)));

  std::vector<BasicIfVector<Real>> images(n, BasicIfVector<Real>(d));
  bool found = false;
  for_each_assignment(pairs.size(), n * static_cast<std::size_t>(d), budget,
                      "additive inverse search",
                      [&](std::span<const std::size_t> idx) {
                        for (std::size_t j = 0; j < n; ++j)
                          for (Eigen::Index r = 0; r < d; ++r)
                            images[j](r) = pairs[idx[j * static_cast<std::size_t>(d) +
                                                     static_cast<std::size_t>(r)]];
                        if (map_add(t, BasicLinearMap<Real>(t.basis(), images)) == target) {
                          found = true;
                          return false;
                        }
                        return true;
                      });
  return !found;
}

using EntryDifference = BasicEntryDifference<Rational>;
using MatrixComparison = BasicMatrixComparison<Rational>;

}  // namespace iflin
