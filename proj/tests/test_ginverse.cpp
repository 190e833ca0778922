#include <doctest.h>

#include "test_util.hpp"

using namespace iflin;
using namespace iflin::testing;

TEST_CASE("the printed pair satisfies T Y T = T") {
  CHECK(is_g_inverse(half_t(), half_y()));
  CHECK_FALSE(is_g_inverse(half_t(), zero_matrix(2, 2)));
}

TEST_CASE("shape of a g-inverse") {
  const IfMatrix t = mat({{"0.5,0.3", "1,0", "0,1"}});
  CHECK_THROWS_AS(is_g_inverse(t, zero_matrix(1, 3)), DimensionMismatch);
  const auto y = find_g_inverse(t);
  REQUIRE(y.has_value());
  CHECK(y->rows() == 3);
  CHECK(y->cols() == 1);
}

TEST_CASE("constructed g-inverses") {
  const auto yh = find_g_inverse(half_t());
  REQUIRE(yh.has_value());
  CHECK(is_g_inverse(half_t(), *yh));
  // The witness is the greatest one; the printed Y lies below it.
  CHECK(leq(half_y(), *yh));

  const auto yi = find_g_inverse(IfMatrix(identity(3)));
  REQUIRE(yi.has_value());
  CHECK(*yi == IfMatrix(identity(3)));

  const auto yz = find_g_inverse(zero_matrix(2, 3));
  REQUIRE(yz.has_value());
  CHECK(is_g_inverse(zero_matrix(2, 3), *yz));
}

TEST_CASE("construction agrees with exhaustive search on random small matrices") {
  Gen gen(424242);
  const auto pool = pairs_over({"0", "0.4", "0.7", "1"});
  int regular = 0, irregular = 0;
  for (int round = 0; round < 300; ++round) {
    const Eigen::Index m = gen.uniform(1, 2), n = gen.uniform(1, 2);
    const IfMatrix t = gen.matrix(pool, m, n);
    CAPTURE(round);
    const auto constructed = find_g_inverse(t);
    const auto searched = search_g_inverse(t);
    CHECK(constructed.has_value() == searched.has_value());
    if (constructed) {
      ++regular;
      CHECK(is_g_inverse(t, *constructed));
      CHECK(leq(*searched, *constructed));
    } else {
      ++irregular;
    }
  }
  CHECK(regular > 0);
  MESSAGE("regular: " << regular << ", irregular: " << irregular);
}

TEST_CASE("the search enforces its budget") {
  const IfMatrix t = mat({{"0.6,0.3", "0,1", "0.2,0.5"}, {"0.4,0.4", "0.5,0.3", "0.1,0.1"}});
  CHECK_THROWS_AS(search_g_inverse(t, 1000), BudgetExceeded);
}
