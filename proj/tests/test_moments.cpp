#include "doctest.h"
#include "rhombic/moments.hpp"
#include "rhombic/tableau.hpp"
#include "rhombic/transfer.hpp"

using namespace rhombic;

namespace {

Params spec_point() {
  // alpha = beta = 1, gamma = delta = 1/2, q = 1/3
  return Params{1, 1, Rational(1, 2), Rational(1, 2), Rational(1, 3), 1};
}

}  // namespace

TEST_CASE("cal-Z values") {
  MomentEvaluator eval(spec_point(), 1);
  CHECK(eval.z_cal(0) == 1);
  // Z_1(xi) = xi(alpha+delta) + beta + gamma over (alpha beta - gamma delta)
  CHECK(eval.z_cal(1) == (Rational(1) * (1 + Rational(1, 2)) + 1 + Rational(1, 2)) /
                             (1 - Rational(1, 4)));
  CHECK(eval.z_cal(1) == 4);
}

TEST_CASE("pole detection names the offending factor") {
  Params p{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 3), 1};
  MomentEvaluator eval(p, 1);  // alpha beta = gamma delta: pole at i = 0
  CHECK_THROWS_WITH_AS(eval.z_cal(1), doctest::Contains("q^0"), PoleError);

  // alpha beta = q gamma delta: pole at i = 1 only
  Params p1{Rational(1, 2), Rational(1, 2), Rational(3, 4), 1, Rational(1, 3), 1};
  MomentEvaluator eval1(p1, 1);
  CHECK_NOTHROW(eval1.z_cal(1));
  CHECK_THROWS_WITH_AS(eval1.z_cal(2), doctest::Contains("q^1"), PoleError);
}

TEST_CASE("r = 0 moments reduce to cal-Z") {
  MomentSpec spec{3, 0, Rational(2, 3), spec_point()};
  MomentEvaluator eval(spec.params, spec.xi);
  CHECK(moment_det(spec) == eval.z_cal(3));
  CHECK(moment_tableaux(spec) == eval.z_cal(3));
}

TEST_CASE("determinant and tableaux routes agree at the worked point") {
  MomentSpec spec{2, 1, 1, spec_point()};
  CHECK(moment_det(spec) == moment_tableaux(spec));
}

TEST_CASE("tableaux moment closed forms") {
  // K_{(1)}(xi) = (xi(alpha+delta) + beta + gamma) / (alpha beta - gamma delta)
  MomentSpec k1{1, 0, Rational(1, 2), spec_point()};
  const Params& p = k1.params;
  const Rational expected =
      (k1.xi * (p.alpha + p.delta) + p.beta + p.gamma) / (p.alpha * p.beta - p.gamma * p.delta);
  CHECK(moment_tableaux(k1) == expected);

  // K_{(0^{r+1})}(xi) = 1 / (1-q)^r for the degenerate shapes
  for (int r = 1; r <= 3; ++r) {
    MomentSpec zero{r, r, Rational(1, 5), spec_point()};
    Rational denom = 1;
    for (int i = 0; i < r; ++i) denom *= 1 - zero.params.q;
    CHECK(moment_tableaux(zero) == 1 / denom);
    CHECK(moment_det(zero) == 1 / denom);
  }
}

TEST_CASE("q = 1 pole of the r > 0 routes") {
  Params p = spec_point();
  p.q = 1;
  MomentSpec spec{2, 1, 1, p};
  CHECK_THROWS_AS(moment_tableaux(spec), PoleError);
  CHECK_THROWS_AS(moment_det(spec), PoleError);
}

TEST_CASE("singular denominator determinant is reported") {
  // gamma = delta = 0, xi = 0 makes cal-Z_2 cal-Z_0 - cal-Z_1^2 vanish.
  Params p{1, 1, 0, 0, Rational(1, 2), 1};
  MomentSpec spec{2, 1, 0, p};
  CHECK_THROWS_AS(moment_det(spec), SingularMatrixError);
}

TEST_CASE("two-route cross-check at seeded tuples") {
  for (auto [n, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    const MomentReport rep = cross_check(n, r, 3, 42 + n * 10 + r);
    CHECK(rep.all_equal);
    CHECK(rep.positivity);
    CHECK(static_cast<int>(rep.trials.size()) == 3);
    for (const MomentTrial& t : rep.trials) CHECK(t.det == t.tableaux);
  }
}

TEST_CASE("trivial equality of the two routes at r = 0") {
  const MomentReport rep = cross_check(3, 0, 2, 7);
  CHECK(rep.all_equal);
}

TEST_CASE("bracket route and tableaux route give the same Z") {
  const std::map<Var, Polynomial> u_one = {{Var::U, Polynomial(BigInt(1))}};
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r)
      CHECK(fugacity_bracket_sum(n, r) ==
            partition_function(n, r, true).substitute(u_one));
}
