#include "rhombic/moments.hpp"

#include <random>
#include <sstream>

#include "rhombic/tableau.hpp"
#include "rhombic/transfer.hpp"

namespace rhombic {

namespace {

Rational pole_factor(const Params& p, int i) {
  Rational qi = 1;
  for (int e = 0; e < i; ++e) qi *= p.q;
  return p.alpha * p.beta - qi * p.gamma * p.delta;
}

Rational moment_tableaux_at(const Polynomial& z, const MomentSpec& spec) {
  const Params& p = spec.params;
  if (spec.r > 0 && p.q == 1)
    throw PoleError("moment_tableaux needs q != 1 when r > 0");
  Rational denom = 1;
  const Rational one_minus_q = Rational(1) - p.q;
  for (int i = 0; i < spec.r; ++i) denom *= one_minus_q;
  for (int i = 0; i <= spec.n - spec.r - 1; ++i) {
    const Rational factor = pole_factor(p, i + 2 * spec.r);
    if (factor == 0) {
      std::ostringstream msg;
      msg << "pole: alpha*beta = q^" << (i + 2 * spec.r) << " * gamma*delta";
      throw PoleError(msg.str());
    }
    denom *= factor;
  }
  Params at_u1 = p;
  at_u1.u = 1;
  return z.evaluate(param_point(at_u1, spec.xi)) / denom;
}

}  // namespace

MomentEvaluator::MomentEvaluator(Params params, Rational xi) : params_(std::move(params)) {
  params_.u = 1;
  point_ = param_point(params_, xi);
}

Rational MomentEvaluator::z_plain(int n) {
  while (static_cast<int>(z_cache_.size()) <= n) {
    const int m = static_cast<int>(z_cache_.size());
    z_cache_.push_back(fugacity_bracket_sum(m, 0).evaluate(point_));
  }
  return z_cache_[n];
}

Rational MomentEvaluator::z_cal(int n) {
  while (static_cast<int>(factor_cache_.size()) < n)
    factor_cache_.push_back(pole_factor(params_, static_cast<int>(factor_cache_.size())));
  Rational denom = 1;
  for (int i = 0; i < n; ++i) {
    if (factor_cache_[i] == 0) {
      std::ostringstream msg;
      msg << "pole: alpha*beta = q^" << i << " * gamma*delta";
      throw PoleError(msg.str());
    }
    denom *= factor_cache_[i];
  }
  return z_plain(n) / denom;
}

Rational moment_det(const MomentSpec& spec) {
  const int m = spec.r + 1;
  MomentEvaluator eval(spec.params, spec.xi);
  auto lambda_part = [&](int i) { return i == 1 ? spec.n - spec.r : 0; };  // 1-based

  RationalMatrix num(m, m), den(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      num.at(i - 1, j - 1) = eval.z_cal(lambda_part(i) + 2 * m - i - j);
      den.at(i - 1, j - 1) = eval.z_cal(2 * m - i - j);
    }
  const Rational d = determinant(den);
  if (d == 0) throw SingularMatrixError("denominator determinant of cal-Z values vanishes");
  Rational ratio = determinant(num) / d;
  // (1-q)^{-(m-1)} normalization of the moment; without it the ratio for the
  // zero partition would be 1 instead of 1/(1-q)^{m-1}.
  if (spec.r > 0) {
    if (spec.params.q == 1) throw PoleError("moment_det needs q != 1 when r > 0");
    Rational one_minus_q = Rational(1) - spec.params.q;
    for (int i = 0; i < spec.r; ++i) ratio /= one_minus_q;
  }
  return ratio;
}

Rational moment_tableaux(const MomentSpec& spec) {
  return moment_tableaux_at(partition_function(spec.n, spec.r, true), spec);
}

MomentReport cross_check(int n, int r, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("cross_check needs trials >= 1");
  MomentReport report;
  report.n = n;
  report.r = r;

  const Polynomial z = partition_function(n, r, true);
  report.positivity = z.all_coefficients_positive();

  std::mt19937_64 rng(seed);
  // Small-denominator rationals in (0,1]; q drawn strictly below 1 so the
  // tableaux route never hits its q = 1 pole.
  auto draw = [&](bool strictly_below_one) {
    const int den = 2 + static_cast<int>(rng() % 15);
    const int span = strictly_below_one ? den - 1 : den;
    const int num = 1 + static_cast<int>(rng() % span);
    return Rational(num, den);
  };

  report.all_equal = true;
  for (int trial = 0; trial < trials; ++trial) {
    MomentSpec spec;
    spec.n = n;
    spec.r = r;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000)
        throw std::runtime_error("could not find a pole-free parameter tuple");
      spec.params = Params{draw(false), draw(false), draw(false), draw(false), draw(true), 1};
      spec.xi = draw(false);
      bool pole = false;
      for (int i = 0; i <= n + r - 1; ++i)
        if (pole_factor(spec.params, i) == 0) {
          pole = true;
          break;
        }
      if (pole) continue;
      try {
        MomentTrial row;
        row.params = spec.params;
        row.xi = spec.xi;
        row.det = moment_det(spec);
        row.tableaux = moment_tableaux_at(z, spec);
        row.equal = row.det == row.tableaux;
        report.all_equal = report.all_equal && row.equal;
        report.trials.push_back(std::move(row));
        break;
      } catch (const SingularMatrixError&) {
        continue;  // resample: the denominator determinant happened to vanish
      }
    }
  }
  return report;
}

}  // namespace rhombic
