#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rhombic/rational.hpp"

namespace rhombic {

// Every symbolic quantity in the engine lives in Z[alpha,beta,gamma,delta,q,u,xi].
enum class Var : int { Alpha = 0, Beta, Gamma, Delta, Q, U, Xi };
inline constexpr int kNumVars = 7;
extern const std::array<const char*, kNumVars> kVarNames;

// Exponent tuple packed 8 bits per variable with alpha in the most
// significant field, so increasing integer order on keys is lexicographic
// order on (alpha, beta, gamma, delta, q, u, xi).  Exponents must stay
// below 128 so that key addition never carries across fields.
using ExpKey = std::uint64_t;

ExpKey exp_key(int alpha, int beta, int gamma, int delta, int q, int u, int xi);
ExpKey exp_key_var(Var v, int e);
int exp_of(ExpKey key, Var v);
ExpKey exp_mul(ExpKey a, ExpKey b);
int exp_total_degree(ExpKey key, bool include_xi);

struct Monomial {
  BigInt coeff;
  ExpKey exps = 0;
};

// Sparse exact multivariate polynomial over BigInt coefficients.  Terms are
// held sorted ascending by packed key (no zero coefficients), which makes
// equality structural and all serialization deterministic.
class Polynomial {
 public:
  using Term = std::pair<ExpKey, BigInt>;

  Polynomial() = default;
  explicit Polynomial(BigInt constant);
  explicit Polynomial(const Monomial& m);

  static Polynomial variable(Var v);
  static Polynomial monomial(BigInt coeff, ExpKey exps);
  static Polynomial var_pow(Var v, int e);
  // [t]_q = 1 + q + ... + q^{t-1}
  static Polynomial q_bracket(int t);

  static Polynomial from_terms(std::map<ExpKey, BigInt>&& accum);
  static Polynomial from_unordered_terms(std::unordered_map<ExpKey, BigInt>&& accum);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const BigInt& coeff(ExpKey key) const;  // zero reference if absent

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial scaled(const BigInt& c) const;
  Polynomial shifted(ExpKey key) const;  // multiply by a single monomial key
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // Substitutes polynomials for the bound variables; unbound variables stay.
  Polynomial substitute(const std::map<Var, Polynomial>& bindings) const;
  // Full evaluation at a rational point (all 7 variables bound).
  Rational evaluate(const std::array<Rational, kNumVars>& point) const;

  int max_total_degree(bool include_xi) const;
  bool all_coefficients_positive() const;

  std::string to_text() const;

 private:
  std::vector<Term> terms_;
};

inline Polynomial operator*(Polynomial lhs, const BigInt& c) { return lhs.scaled(c); }

Polynomial var_poly(Var v);

}  // namespace rhombic
