#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rhombic/asep.hpp"
#include "rhombic/polynomial.hpp"

namespace rhombic {

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Homogeneous Koornwinder moment K_{(N-r,0^r)}(xi); partition with m = r+1
// parts.  All moment work is at u = 1.
struct MomentSpec {
  int n = 1;
  int r = 0;
  Rational xi = 1;
  Params params;
};

// cal-Z values for fixed parameters: Z_n(xi) is evaluated through the matrix
// route (sum of 2^n brackets) and divided by prod_{i<n}(ab - q^i gd).
class MomentEvaluator {
 public:
  MomentEvaluator(Params params, Rational xi);

  Rational z_plain(int n);  // Z_n(xi) at u = 1
  Rational z_cal(int n);    // cal-Z_n(xi); throws PoleError on a zero factor

 private:
  Params params_;
  std::array<Rational, kNumVars> point_;
  std::vector<Rational> z_cache_;      // z_plain by n
  std::vector<Rational> factor_cache_; // ab - q^i gd by i
};

// Determinant ratio det(calZ_{lambda_i+2m-i-j}) / det(calZ_{2m-i-j}) for
// lambda = (N-r, 0^r), m = r+1.  Throws PoleError / SingularMatrixError.
Rational moment_det(const MomentSpec& spec);

// Z_{N,r}(xi) / ((1-q)^r prod_{i=0}^{N-r-1}(ab - q^{i+2r} gd)) via tableau
// enumeration.  Requires q != 1 when r > 0.
Rational moment_tableaux(const MomentSpec& spec);

struct MomentTrial {
  Params params;
  Rational xi;
  Rational det;
  Rational tableaux;
  bool equal = false;
};

struct MomentReport {
  int n = 0;
  int r = 0;
  std::vector<MomentTrial> trials;
  bool positivity = false;  // all coefficients of Z_{N,r}(xi) positive
  bool all_equal = false;
};

// Draws seeded pole-free rational tuples (denominators <= 16) and compares
// the two moment routes exactly at each.
MomentReport cross_check(int n, int r, int trials, std::uint64_t seed);

}  // namespace rhombic
