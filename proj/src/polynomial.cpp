#include "rhombic/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <stdexcept>

namespace rhombic {

const std::array<const char*, kNumVars> kVarNames = {
    "alpha", "beta", "gamma", "delta", "q", "u", "xi"};

namespace {

constexpr int shift_of(Var v) { return 8 * (6 - static_cast<int>(v)); }

void check_exp(int e) {
  if (e < 0 || e > 127) throw std::overflow_error("exponent out of range [0,127]");
}

const BigInt kZero = 0;

}  // namespace

ExpKey exp_key(int alpha, int beta, int gamma, int delta, int q, int u, int xi) {
  const int es[7] = {alpha, beta, gamma, delta, q, u, xi};
  ExpKey key = 0;
  for (int v = 0; v < 7; ++v) {
    check_exp(es[v]);
    key |= static_cast<ExpKey>(es[v]) << shift_of(static_cast<Var>(v));
  }
  return key;
}

ExpKey exp_key_var(Var v, int e) {
  check_exp(e);
  return static_cast<ExpKey>(e) << shift_of(v);
}

int exp_of(ExpKey key, Var v) {
  return static_cast<int>((key >> shift_of(v)) & 0xFF);
}

ExpKey exp_mul(ExpKey a, ExpKey b) {
  // Per-field sums stay below 128, so plain addition never carries.
  ExpKey sum = a + b;
  if ((sum & 0x8080808080808080ULL) != 0)
    throw std::overflow_error("exponent overflow in monomial product");
  return sum;
}

int exp_total_degree(ExpKey key, bool include_xi) {
  int d = 0;
  for (int v = 0; v < 7; ++v) {
    if (!include_xi && static_cast<Var>(v) == Var::Xi) continue;
    d += exp_of(key, static_cast<Var>(v));
  }
  return d;
}

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

Polynomial::Polynomial(const Monomial& m) {
  if (m.coeff != 0) terms_.emplace_back(m.exps, m.coeff);
}

Polynomial Polynomial::variable(Var v) { return var_pow(v, 1); }

Polynomial Polynomial::monomial(BigInt coeff, ExpKey exps) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace_back(exps, std::move(coeff));
  return p;
}

Polynomial Polynomial::var_pow(Var v, int e) {
  return monomial(1, exp_key_var(v, e));
}

Polynomial Polynomial::q_bracket(int t) {
  Polynomial p;
  for (int i = 0; i < t; ++i) p += var_pow(Var::Q, i);
  return p;
}

Polynomial Polynomial::from_terms(std::map<ExpKey, BigInt>&& accum) {
  Polynomial p;
  p.terms_.reserve(accum.size());
  for (auto& [key, coeff] : accum)
    if (coeff != 0) p.terms_.emplace_back(key, std::move(coeff));
  return p;
}

Polynomial Polynomial::from_unordered_terms(std::unordered_map<ExpKey, BigInt>&& accum) {
  Polynomial p;
  p.terms_.reserve(accum.size());
  for (auto& [key, coeff] : accum)
    if (coeff != 0) p.terms_.emplace_back(key, std::move(coeff));
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return p;
}

const BigInt& Polynomial::coeff(ExpKey key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, ExpKey k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return kZero;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->first < b->first) {
      merged.push_back(std::move(*a++));
    } else if (b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(terms_.end()));
  merged.insert(merged.end(), b, rhs.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  return *this += rhs.scaled(-1);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  // Single-term factors keep the sorted order, so multiply in place.
  if (lhs.term_count() == 1)
    return rhs.shifted(lhs.terms()[0].first).scaled(lhs.terms()[0].second);
  if (rhs.term_count() == 1)
    return lhs.shifted(rhs.terms()[0].first).scaled(rhs.terms()[0].second);
  std::unordered_map<ExpKey, BigInt> accum;
  accum.reserve(lhs.term_count() + rhs.term_count());
  for (const auto& [ka, ca] : lhs.terms())
    for (const auto& [kb, cb] : rhs.terms())
      accum[exp_mul(ka, kb)] += ca * cb;
  return Polynomial::from_unordered_terms(std::move(accum));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::scaled(const BigInt& c) const {
  Polynomial p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& [key, coeff] : terms_) p.terms_.emplace_back(key, coeff * c);
  return p;
}

Polynomial Polynomial::shifted(ExpKey key) const {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) p.terms_.emplace_back(exp_mul(k, key), c);
  return p;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result(BigInt(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<Var, Polynomial>& bindings) const {
  // Power cache per bound variable, grown on demand.
  std::map<Var, std::vector<Polynomial>> powers;
  for (const auto& [v, p] : bindings) powers[v] = {Polynomial(BigInt(1)), p};

  Polynomial result;
  for (const auto& [key, coeff] : terms_) {
    ExpKey residual = 0;
    Polynomial factor(coeff);
    for (int vi = 0; vi < kNumVars; ++vi) {
      Var v = static_cast<Var>(vi);
      int e = exp_of(key, v);
      if (e == 0) continue;
      auto it = powers.find(v);
      if (it == powers.end()) {
        residual = exp_mul(residual, exp_key_var(v, e));
      } else {
        auto& cache = it->second;
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
        factor *= cache[e];
      }
    }
    result += factor.shifted(residual);
  }
  return result;
}

Rational Polynomial::evaluate(const std::array<Rational, kNumVars>& point) const {
  std::array<std::vector<Rational>, kNumVars> powers;
  for (int v = 0; v < kNumVars; ++v) powers[v] = {Rational(1), point[v]};
  Rational result = 0;
  for (const auto& [key, coeff] : terms_) {
    Rational term(coeff);
    for (int v = 0; v < kNumVars; ++v) {
      int e = exp_of(key, static_cast<Var>(v));
      if (e == 0) continue;
      auto& cache = powers[v];
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
      term *= cache[e];
    }
    result += term;
  }
  return result;
}

int Polynomial::max_total_degree(bool include_xi) const {
  int d = 0;
  for (const auto& [key, coeff] : terms_)
    d = std::max(d, exp_total_degree(key, include_xi));
  return d;
}

bool Polynomial::all_coefficients_positive() const {
  for (const auto& [key, coeff] : terms_)
    if (coeff <= 0) return false;
  return !terms_.empty();
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    BigInt c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::vector<std::string> parts;
    if (c != 1 || key == 0) parts.push_back(c.str());
    for (int v = 0; v < kNumVars; ++v) {
      int e = exp_of(key, static_cast<Var>(v));
      if (e == 0) continue;
      std::string part = kVarNames[v];
      if (e > 1) part += "^" + std::to_string(e);
      parts.push_back(part);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "*";
      out << parts[i];
    }
  }
  return out.str();
}

Polynomial var_poly(Var v) { return Polynomial::variable(v); }

}  // namespace rhombic
