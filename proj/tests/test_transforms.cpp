#include <doctest.h>

#include "test_util.hpp"

using namespace iflin;
using namespace iflin::testing;

namespace {

LinearMap random_map(Gen& gen, const std::vector<IfScalar>& pool, const VectorSet& basis,
                     Eigen::Index codim) {
  std::vector<IfVector> images;
  for (std::size_t j = 0; j < basis.size(); ++j) images.push_back(gen.vector(pool, codim));
  return LinearMap(basis, images);
}

LinearMap padded_projection() { return make_map<Rational>(ProjectionKind{{0, 1}}, padded_b3()); }
LinearMap half_map() { return scalar_map(half_alpha(), half_basis()); }

}  // namespace

TEST_CASE("make_map kinds") {
  const VectorSet b = half_basis();
  CHECK(identity_map(b).images() == b.vectors());
  const auto z = zero_map(b);
  for (const auto& v : z.images()) CHECK(v == zero_vector(2));
  const auto s = half_map();
  CHECK(s.images()[0] == vec({"0.5,0.3", "0.5,0.3"}));
  CHECK(s.images()[1] == vec({"0,1", "0.5,0.3"}));
  const auto p = padded_projection();
  CHECK(p.codomain_dim() == 2);
  CHECK(p.images()[2] == vec({"0,0", "0,0"}));
  const auto e = make_map<Rational>(ExplicitKind<Rational>{{vec({"0.2,0.3"}), vec({"1,0"})}},
                                    standard_basis(2));
  CHECK(e.codomain_dim() == 1);
  CHECK_THROWS_AS(make_map<Rational>(ProjectionKind{{3}}, padded_b3()), ShapeError);
  CHECK_THROWS_AS(make_map<Rational>(ProjectionKind{{}}, padded_b3()), ShapeError);
  CHECK_THROWS_AS(LinearMap(standard_basis(2), {vec({"1,0"})}), ShapeError);
}

TEST_CASE("apply_map") {
  const auto p = make_map<Rational>(ProjectionKind{{0, 1}}, standard_basis(3));
  CHECK(apply_map(p, vec({"0.3,0.4", "0.6,0.1", "1,0"})) == vec({"0.3,0.4", "0.6,0.1"}));
  CHECK_THROWS_AS(apply_map(p, zero_vector(2)), DimensionMismatch);
  const LinearMap narrow(VectorSet({vec({"1,0", "0,1"})}), {vec({"1,0"})});
  CHECK_THROWS_AS(apply_map(narrow, vec({"0,1", "0.5,0.5"})), NotInSpan);
}

TEST_CASE("the scalar map is idempotent") {
  const auto t = half_map();
  const auto tt = map_compose(t, t);
  CHECK(tt == t);
}

TEST_CASE("composition with identity and zero") {
  Gen gen(5);
  const auto pool = pairs_over({"0", "0.3", "0.6", "1"});
  const VectorSet e2 = standard_basis(2);
  const VectorSet e3 = standard_basis(3);
  for (int round = 0; round < 50; ++round) {
    const auto t = random_map(gen, pool, e2, 3);
    CHECK(map_compose(identity_map(e3), t) == t);
    CHECK(map_compose(t, identity_map(e2)) == t);
    CHECK(map_compose(zero_map(e3), t) == LinearMap(e2, {zero_vector(3), zero_vector(3)}));
  }
  CHECK_THROWS_AS(map_compose(identity_map(e2), random_map(gen, pool, e2, 3)), BasisMismatch);
  CHECK_THROWS_AS(map_add(identity_map(e2), identity_map(half_basis())), BasisMismatch);
}

TEST_CASE("matrix of the projection: canonical, printed and faithful") {
  const auto t = padded_projection();
  const auto m = matrix_of(t, padded_b2());
  const IfMatrix expected = mat({{"1,0", "0,0", "0,0"}, {"0,0", "1,0", "0,0"}});
  CHECK(m.matrix == expected);
  const auto cmp = compare_matrix(t, projection_printed(), padded_b2());
  CHECK(cmp.faithful);
  CHECK_FALSE(cmp.entrywise_equal);
  REQUIRE(cmp.differences.size() == 1);
  CHECK(cmp.differences[0].row == 0);
  CHECK(cmp.differences[0].col == 2);
  CHECK(same_by_recomposition(m.matrix, projection_printed(), padded_b2()));
}

TEST_CASE("matrix of the scalar map") {
  const auto t = half_map();
  const auto m = matrix_of(t, half_basis());
  CHECK(m.matrix == mat({{"0.7,0.3", "0,1"}, {"0.5,0.3", "0.5,0.3"}}));
  CHECK_FALSE(m.matrix == half_y());
  CHECK(same_by_recomposition(m.matrix, half_y(), half_basis()));
  const auto cmp = compare_matrix(t, half_t(), half_basis());
  CHECK(cmp.faithful);
  CHECK_FALSE(cmp.entrywise_equal);
  REQUIRE(cmp.differences.size() == 2);
  CHECK(cmp.differences[0].col == 0);
  CHECK(cmp.differences[1].col == 0);
  CHECK(same_by_recomposition(half_t(), half_y(), half_basis()));
}

TEST_CASE("canonical columns are greatest on a fine grid") {
  const auto pool = step_grid(10);
  for (const auto& [t, out] : {std::pair{half_map(), half_basis()},
                                std::pair{padded_projection(), padded_b2()}}) {
    const auto m = matrix_of(t, out);
    for (std::size_t j = 0; j < t.images().size(); ++j) {
      const auto reps = oracle_representations(out.vectors(), t.images()[j], pool);
      const auto g = oracle_greatest(reps);
      REQUIRE(g.has_value());
      CHECK(*g == IfVector(m.matrix.col(static_cast<Eigen::Index>(j))));
    }
  }
}

TEST_CASE("an unfaithful matrix is reported column by column") {
  const auto t = half_map();
  IfMatrix bad = half_y();
  bad(1, 1) = S("0.2,0.3");
  const auto cmp = compare_matrix(t, bad, half_basis());
  CHECK_FALSE(cmp.faithful);
  REQUIRE(cmp.unfaithful_columns.size() == 1);
  CHECK(cmp.unfaithful_columns[0] == 1);
  CHECK_THROWS_AS(compare_matrix(t, IfMatrix(identity(3)), half_basis()), DimensionMismatch);
}

TEST_CASE("matrix_of needs images inside the output span") {
  const LinearMap t(standard_basis(1), {vec({"0.5,0.3", "0.5,0.3"})});
  CHECK_THROWS_AS(matrix_of(t, VectorSet({vec({"1,0", "0,1"})})), NotInSpan);
}

TEST_CASE("standard bases: matrices compose like maps, maps are linear") {
  Gen gen(11);
  const auto pool = pairs_over({"0", "0.2", "0.5", "0.8", "1"});
  for (int round = 0; round < 200; ++round) {
    const Eigen::Index a = gen.uniform(1, 3), b = gen.uniform(1, 3), c = gen.uniform(1, 3);
    const auto t2 = random_map(gen, pool, standard_basis(a), b);
    const auto t1 = random_map(gen, pool, standard_basis(b), c);
    const auto m1 = matrix_of(t1, standard_basis(c)).matrix;
    const auto m2 = matrix_of(t2, standard_basis(b)).matrix;
    CHECK(matrix_of(map_compose(t1, t2), standard_basis(c)).matrix == compose(m1, m2));

    const IfVector x = gen.vector(pool, a), y = gen.vector(pool, a);
    const IfScalar al = gen.pick(pool), be = gen.pick(pool);
    CHECK(apply_map(t2, IfVector(scale_vector(al, x) + scale_vector(be, y))) ==
          IfVector(scale_vector(al, apply_map(t2, x)) + scale_vector(be, apply_map(t2, y))));
    CHECK(apply_map(t2, x) == oracle_apply(m2, x));
  }
}

TEST_CASE("law suite on fixed maps") {
  const VectorSet e2 = standard_basis(2);
  const LinearMap t1(e2, {vec({"0.7,0.2", "0.1,0.8"}), vec({"0.3,0.3", "1,0"})});
  const LinearMap t2(e2, {vec({"0.4,0.5", "0.6,0.1"}), vec({"0,1", "0.2,0.2"})});
  const LinearMap t3 = identity_map(e2);
  const auto laws = law_suite(t1, t2, t3, S("0.6,0.3"), S("0.2,0.7"));
  CHECK(laws.size() == 8);
  for (const auto& law : laws) {
    CAPTURE(law.name);
    CHECK(law.passed);
  }
}

TEST_CASE("law suite on random maps") {
  Gen gen(2024);
  const auto pool = pairs_over({"0", "0.3", "0.5", "0.7", "1"});
  for (int round = 0; round < 200; ++round) {
    const VectorSet basis = standard_basis(gen.uniform(1, 3));
    const Eigen::Index codim = gen.uniform(1, 3);
    const auto laws = law_suite(random_map(gen, pool, basis, codim),
                                random_map(gen, pool, basis, codim),
                                random_map(gen, pool, basis, codim), gen.pick(pool),
                                gen.pick(pool));
    for (const auto& law : laws) {
      CAPTURE(law.name);
      CHECK(law.passed);
    }
  }
}

TEST_CASE("no additive inverses") {
  CHECK(no_additive_inverse_witness(identity_map(standard_basis(2))));
  CHECK(no_additive_inverse_witness(half_map()));
  CHECK_FALSE(no_additive_inverse_witness(zero_map(standard_basis(2))));
  CHECK_THROWS_AS(no_additive_inverse_witness(identity_map(standard_basis(3)), 10),
                  BudgetExceeded);
}
