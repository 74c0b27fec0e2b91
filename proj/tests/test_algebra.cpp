#include <random>

#include "doctest.h"
#include "rhombic/json_io.hpp"
#include "rhombic/linalg.hpp"
#include "rhombic/polynomial.hpp"

using namespace rhombic;

namespace {

Polynomial v(Var var) { return Polynomial::variable(var); }

Polynomial random_poly(std::mt19937_64& rng) {
  Polynomial p;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    const int coeff = static_cast<int>(rng() % 9) - 4;
    ExpKey key = exp_key(rng() % 3, rng() % 3, rng() % 2, rng() % 2, rng() % 4, rng() % 2,
                         rng() % 2);
    p += Polynomial::monomial(coeff, key);
  }
  return p;
}

Rational random_rational(std::mt19937_64& rng) {
  const int den = 1 + static_cast<int>(rng() % 16);
  const int num = static_cast<int>(rng() % 21) - 10;
  return Rational(num, den);
}

std::array<Rational, kNumVars> random_point(std::mt19937_64& rng) {
  std::array<Rational, kNumVars> pt;
  for (auto& x : pt) x = random_rational(rng);
  return pt;
}

// Cofactor-expansion oracle, exponential but independent of the elimination.
Rational det_cofactor(const RationalMatrix& m) {
  const int n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rational total = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    Rational term = m.at(0, c) * det_cofactor(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const Polynomial a = v(Var::Alpha) + v(Var::Q);
  const Polynomial b = v(Var::Alpha) - v(Var::Q);
  CHECK(a + b == v(Var::Alpha).scaled(2));
  CHECK(a * b == Polynomial::var_pow(Var::Alpha, 2) - Polynomial::var_pow(Var::Q, 2));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = random_poly(rng);
    CHECK(p * Polynomial(BigInt(1)) == p);
    CHECK(p - p == Polynomial());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const Polynomial a = random_poly(rng);
    const Polynomial b = random_poly(rng);
    const Polynomial c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("substitution and evaluation") {
  // alpha*beta - gamma*delta*q vanishes at the all-ones point
  const Polynomial p = v(Var::Alpha) * v(Var::Beta) - v(Var::Gamma) * v(Var::Delta) * v(Var::Q);
  std::array<Rational, kNumVars> ones;
  ones.fill(1);
  CHECK(p.evaluate(ones) == 0);

  // alpha*q + delta*q^2 at q := 1 becomes alpha + delta
  const Polynomial r = v(Var::Alpha) * v(Var::Q) + v(Var::Delta) * Polynomial::var_pow(Var::Q, 2);
  CHECK(r.substitute({{Var::Q, Polynomial(BigInt(1))}}) == v(Var::Alpha) + v(Var::Delta));

  // substitution by polynomials: q := q^2 on [3]_q
  const Polynomial bracket3 = Polynomial::q_bracket(3);
  const Polynomial doubled = bracket3.substitute({{Var::Q, Polynomial::var_pow(Var::Q, 2)}});
  CHECK(doubled == Polynomial(BigInt(1)) + Polynomial::var_pow(Var::Q, 2) +
                       Polynomial::var_pow(Var::Q, 4));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) {
    const Polynomial a = random_poly(rng);
    const Polynomial b = random_poly(rng);
    const auto pt = random_point(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("rational literals stay reduced with positive denominator") {
  const Rational r = parse_rational("3/6");
  CHECK(boost::multiprecision::numerator(r) == 1);
  CHECK(boost::multiprecision::denominator(r) == 2);
  const Rational neg = parse_rational("-4/8");
  CHECK(boost::multiprecision::numerator(neg) == -1);
  CHECK(boost::multiprecision::denominator(neg) == 2);
  CHECK(rational_to_string(parse_rational("0/5")) == "0");
  CHECK(rational_to_string(parse_rational("14/3")) == "14/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("determinant basics") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  CHECK(determinant(m) == -2);
  CHECK(determinant(RationalMatrix::identity(4)) == 1);
  CHECK(determinant(RationalMatrix(3, 3)) == 0);
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      RationalMatrix m(n, n);
      for (auto& e : m.entries) e = random_rational(rng);
      CHECK(determinant(m) == det_cofactor(m));
    }
  }
}

TEST_CASE("kernel of the zero matrix has full dimension") {
  const auto basis = kernel_basis(RationalMatrix(2, 2));
  CHECK(basis.size() == 2);
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
}

TEST_CASE("kernel solves the hand-checked 2-state chain") {
  // P = [[1/2,1/2],[1/4,3/4]]; pi (P - I) = 0 has solution (1/3, 2/3).
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 2) - 1;
  m.at(0, 1) = Rational(1, 4);
  m.at(1, 0) = Rational(1, 2);
  m.at(1, 1) = Rational(3, 4) - 1;
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  Rational sum = basis[0][0] + basis[0][1];
  CHECK(basis[0][0] / sum == Rational(1, 3));
  CHECK(basis[0][1] / sum == Rational(2, 3));
}

TEST_CASE("kernel vectors satisfy m v = 0 exactly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    // Plant rank deficiencies by repeating rows.
    RationalMatrix m(4, 5);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 5; ++c) m.at(r, c) = random_rational(rng);
    for (int c = 0; c < 5; ++c) m.at(3, c) = m.at(1, c) + m.at(2, c);
    const auto basis = kernel_basis(m);
    CHECK(basis.size() >= 2);  // 5 columns, rank <= 3
    for (const auto& vec : basis)
      for (int r = 0; r < m.rows; ++r) {
        Rational dot = 0;
        for (int c = 0; c < m.cols; ++c) dot += m.at(r, c) * vec[c];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("polynomial JSON is sorted lexicographically") {
  const Polynomial p = v(Var::Xi) + v(Var::Alpha) + Polynomial(BigInt(7));
  const auto j = polynomial_to_json(p);
  REQUIRE(j.size() == 3);
  // constant first, then xi (last variable), then alpha (first variable, largest key)
  CHECK(j[0]["coeff"] == "7");
  CHECK(j[1]["exp"]["xi"] == 1);
  CHECK(j[2]["exp"]["alpha"] == 1);
  for (const auto& term : j) CHECK(term["exp"].size() == 7);
}
