#include <doctest.h>

#include "test_util.hpp"

using namespace iflin;
using namespace iflin::testing;

TEST_CASE("composition of the g-inverse pair reproduces T") {
  const IfMatrix t = half_t();
  const IfMatrix y = half_y();
  CHECK(compose(compose(t, y), t) == t);
  CHECK(compose(t, y) == oracle_compose(t, y));
}

TEST_CASE("apply on a worked system") {
  CHECK(apply(system_a(), system_x()) == system_b());
}

TEST_CASE("identity and zero") {
  const IfMatrix i3 = identity(3);
  CHECK(i3(0, 0) == IfScalar::top());
  CHECK(i3(0, 1) == IfScalar::bottom());
  const IfMatrix z = zero_matrix(2, 3);
  CHECK(z(1, 2) == IfScalar::bottom());
  CHECK(zero_vector(4).rows() == 4);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(compose(IfMatrix(identity(2)), IfMatrix(identity(3))), DimensionMismatch);
  CHECK_THROWS_AS(add(IfMatrix(identity(2)), zero_matrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(apply(IfMatrix(identity(2)), zero_vector(3)), DimensionMismatch);
}

TEST_CASE("transpose and entrywise order") {
  const IfMatrix a = mat({{"0.2,0.3", "0.5,0.5"}, {"1,0", "0,0"}, {"0.1,0.9", "0,1"}});
  const IfMatrix at = transpose(a);
  CHECK(at.rows() == 2);
  CHECK(at(1, 0) == a(0, 1));
  CHECK(leq(zero_matrix(3, 2), a));
  CHECK_FALSE(leq(a, zero_matrix(3, 2)));
  CHECK(leq(a, add(a, a)));
}

TEST_CASE("random matrices: algebraic laws against the loop oracle") {
  Gen gen(20241015);
  const auto pool = pairs_over({"0", "0.2", "0.5", "0.7", "1"});
  for (int round = 0; round < 300; ++round) {
    const Eigen::Index m = gen.uniform(1, 3), n = gen.uniform(1, 3), p = gen.uniform(1, 3),
                       q = gen.uniform(1, 3);
    const IfMatrix a = gen.matrix(pool, m, n);
    const IfMatrix a2 = gen.matrix(pool, m, n);
    const IfMatrix b = gen.matrix(pool, n, p);
    const IfMatrix b2 = gen.matrix(pool, n, p);
    const IfMatrix c = gen.matrix(pool, p, q);
    const IfScalar alpha = gen.pick(pool);
    CAPTURE(round);

    CHECK(compose(a, b) == oracle_compose(a, b));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(IfMatrix(identity(m)), a) == a);
    CHECK(compose(a, IfMatrix(identity(n))) == a);
    CHECK(compose(a, add(b, b2)) == add(compose(a, b), compose(a, b2)));
    CHECK(compose(add(a, a2), b) == add(compose(a, b), compose(a2, b)));
    CHECK(transpose(compose(a, b)) == compose(transpose(b), transpose(a)));
    CHECK(scale(alpha, compose(a, b)) == compose(scale(alpha, a), b));
    CHECK(compose(zero_matrix(q, m), a) == zero_matrix(q, n));
    // Composition is monotone.
    CHECK(leq(compose(a, b), compose(add(a, a2), b)));
  }
}

TEST_CASE("double-valued matrices use the same algebra") {
  using D = BasicIfScalar<double>;
  BasicIfMatrix<double> a(1, 2);
  a << D(0.8, 0.2), D(0.6, 0.3);
  BasicIfVector<double> x(2);
  x << D(0.7, 0.3), D(0.6, 0.3);
  CHECK(apply(a, x)(0) == D(0.7, 0.3));
}
