// Acceptance criteria: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure. Each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "iflin/cli.hpp"
#include "test_util.hpp"

using namespace iflin;
using namespace iflin::testing;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s,
               const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < limit_s, "exceeded time limit");
  if (!v.ok) ++failures;
  std::printf("[%s] %s %s (%.3f s, limit %.0f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title,
              secs, limit_s, v.ok ? "" : ": ", v.detail.c_str());
}

LinearMap random_map(Gen& gen, const std::vector<IfScalar>& pool, const VectorSet& basis) {
  std::vector<IfVector> images;
  for (std::size_t j = 0; j < basis.size(); ++j) images.push_back(gen.vector(pool, basis.dim()));
  return LinearMap(basis, images);
}

}  // namespace

int main() {
  criterion("AC1", "worked relational equation via the solve command", 1, [](Verdict& v) {
    cli::RunConfig cfg;
    cfg.command = cli::Command::kSolve;
    cfg.inputs = {std::string(IFLIN_TEST_DATA_DIR) + "/solve_worked.json"};
    cfg.timestamp = false;
    const auto o = cli::execute(cfg);
    v.require(o.exit_code == cli::kExitOk, "exit code");
    const auto& r = o.report["result"];
    v.require(r["solvable"] == true, "solvable");
    const IfVector x = io::vector_from_json(r["candidate"]);
    v.require(x == system_x(), "candidate");
  });

  criterion("AC2", "g-inverse pair and self-inverse scalar map", 1, [](Verdict& v) {
    v.require(is_g_inverse(half_t(), half_y()), "T Y T != T");
    const VectorSet b = half_basis();
    const IfMatrix y = half_y();
    for (Eigen::Index j = 0; j < 2; ++j) {
      v.require(column_image(y, j, b) == scale_vector(half_alpha(), b[static_cast<std::size_t>(j)]),
                "Y(c_j) != alpha c_j");
    }
  });

  criterion("AC3", "independent triple and dependent pair", 1, [](Verdict& v) {
    v.require(is_independent(VectorSet({triple_1(), triple_2(), triple_3()})), "triple dependent");
    const VectorSet pair({pair_1(), pair_2()});
    const auto r = independence_report(pair);
    v.require(!r.independent, "pair independent");
    bool found = false;
    for (const auto& d : r.dependences) {
      if (d.index != 0) continue;
      found = true;
      v.require(d.coefficients(0) == S("0.7,0.3"), "coefficient");
      v.require(scale_vector(d.coefficients(0), pair_2()) == pair_1(), "recomposition");
    }
    v.require(found, "no dependence recorded for the first vector");
  });

  criterion("AC4", "projection matrix faithfulness", 1, [](Verdict& v) {
    const auto t = make_map<Rational>(ProjectionKind{{0, 1}}, padded_b3());
    const auto m = matrix_of(t, padded_b2());
    for (Eigen::Index j = 0; j < 3; ++j)
      v.require(column_image(m.matrix, j, padded_b2()) == t.images()[static_cast<std::size_t>(j)],
                "canonical column does not recompose");
    const auto cmp = compare_matrix(t, projection_printed(), padded_b2());
    v.require(cmp.faithful, "printed matrix not faithful");
    v.require(!cmp.entrywise_equal && cmp.differences.size() == 1 &&
                  cmp.differences[0].row == 0 && cmp.differences[0].col == 2,
              "difference report");
  });

  criterion("AC5", "diagonal systems solve to the top vector", 1, [](Verdict& v) {
    for (int n : {2, 3}) {
      IfMatrix a = zero_matrix(n, n);
      for (int i = 0; i < n; ++i) a(i, i) = S("0.6,0.3");
      const IfVector b = IfVector::Constant(n, S("0.6,0.3"));
      const auto r = greatest_solution(a, b);
      v.require(r.solvable, "unsolvable");
      for (int i = 0; i < n; ++i) v.require(r.candidate(i) == IfScalar::top(), "x_i != <1,0>");
    }
  });

  criterion("AC6", "algebra laws on the 21-scalar grid", 10, [](Verdict& v) {
    const auto grid = step_grid(5);
    v.require(grid.size() == 21, "grid size");
    for (const auto& law : check_axioms(std::span<const IfScalar>(grid)))
      v.require(law.cases > 0 && law.failures == 0, law.name);
  });

  criterion("AC7", "greatest solution against brute force on 2x2 systems", 60, [](Verdict& v) {
    Gen gen(1);
    const auto pool = pairs_over({"0", "0.3", "0.5", "0.7", "1"});
    for (int round = 0; round < 600; ++round) {
      const IfMatrix a = gen.matrix(pool, 2, 2);
      const IfVector b = round % 2 == 0 ? apply(a, gen.vector(pool, 2)) : gen.vector(pool, 2);
      const auto r = greatest_solution(a, b);
      const auto sols = enumerate_solutions(a, b);
      v.require(r.solvable == !sols.empty(), "verdict mismatch");
      for (const auto& x : sols) v.require(vector_leq(x, r.candidate), "solution above candidate");
    }
  });

  criterion("AC8", "linear map law suite on 1000 random maps", 30, [](Verdict& v) {
    Gen gen(2);
    const auto pool = pairs_over({"0", "0.3", "0.5", "0.7", "1"});
    for (int round = 0; round < 1000; ++round) {
      const VectorSet basis = standard_basis(round % 2 == 0 ? 2 : 3);
      const auto laws = law_suite(random_map(gen, pool, basis), random_map(gen, pool, basis),
                                  random_map(gen, pool, basis), gen.pick(pool), gen.pick(pool));
      for (const auto& law : laws) v.require(law.passed, law.name);
    }
  });

  criterion("AC9", "identity map has no additive inverse", 10, [](Verdict& v) {
    v.require(no_additive_inverse_witness(identity_map(standard_basis(2))), "inverse found");
  });

  criterion("AC10", "identity matrix is a two-sided unit", 5, [](Verdict& v) {
    Gen gen(3);
    const auto pool = pairs_over({"0", "0.2", "0.4", "0.6", "0.8", "1"});
    for (int round = 0; round < 100; ++round) {
      const IfMatrix a = gen.matrix(pool, gen.uniform(1, 3), gen.uniform(1, 3));
      v.require(compose(a, IfMatrix(identity(a.cols()))) == a, "A I != A");
      v.require(compose(IfMatrix(identity(a.rows())), a) == a, "I A != A");
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
