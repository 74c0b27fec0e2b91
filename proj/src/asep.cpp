#include "rhombic/asep.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>

#include "rhombic/parallel.hpp"
#include "rhombic/transfer.hpp"

namespace rhombic {

namespace {

void check_unit_interval(const char* name, const Rational& v) {
  if (v < 0 || v > 1)
    throw std::domain_error(std::string("parameter ") + name + " outside [0,1]: " +
                            rational_to_string(v));
}

std::vector<int> reachable(int start, const std::vector<std::vector<int>>& adj) {
  std::vector<int> seen(adj.size(), 0);
  std::queue<int> queue;
  queue.push(start);
  seen[start] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
  }
  return seen;
}

}  // namespace

std::array<Rational, kNumVars> param_point(const Params& p, const Rational& xi) {
  return {p.alpha, p.beta, p.gamma, p.delta, p.q, p.u, xi};
}

Chain build_chain(const ChainSpec& spec) {
  if (spec.strict) {
    check_unit_interval("alpha", spec.params.alpha);
    check_unit_interval("beta", spec.params.beta);
    check_unit_interval("gamma", spec.params.gamma);
    check_unit_interval("delta", spec.params.delta);
    check_unit_interval("q", spec.params.q);
    check_unit_interval("u", spec.params.u);
  }
  Chain chain;
  chain.states = TypeWord::all_of_size(spec.sites, spec.light);
  std::map<TypeWord, int> index;
  for (int i = 0; i < static_cast<int>(chain.states.size()); ++i)
    index.emplace(chain.states[i], i);

  const int n = spec.sites;
  const Rational norm = Rational(1, n + 1);
  chain.transition = RationalMatrix(static_cast<int>(chain.states.size()),
                                    static_cast<int>(chain.states.size()));
  for (int si = 0; si < static_cast<int>(chain.states.size()); ++si) {
    const std::vector<int>& w = chain.states[si].letters;
    auto add = [&](std::vector<int> target, const Rational& rate) {
      chain.transition.at(si, index.at(TypeWord(std::move(target)))) += rate * norm;
    };
    for (int i = 0; i + 1 < n; ++i) {
      if (w[i] == w[i + 1]) continue;
      std::vector<int> swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      // The heavier of the two hops right at rate u, left at rate q.
      add(std::move(swapped), w[i] > w[i + 1] ? spec.params.u : spec.params.q);
    }
    if (w[0] == 0) {
      std::vector<int> t = w;
      t[0] = 2;
      add(std::move(t), spec.params.alpha);
    } else if (w[0] == 2) {
      std::vector<int> t = w;
      t[0] = 0;
      add(std::move(t), spec.params.gamma);
    }
    if (w[n - 1] == 2) {
      std::vector<int> t = w;
      t[n - 1] = 0;
      add(std::move(t), spec.params.beta);
    } else if (w[n - 1] == 0) {
      std::vector<int> t = w;
      t[n - 1] = 2;
      add(std::move(t), spec.params.delta);
    }
    Rational row_sum = 0;
    for (int sj = 0; sj < static_cast<int>(chain.states.size()); ++sj)
      if (sj != si) row_sum += chain.transition.at(si, sj);
    chain.transition.at(si, si) = Rational(1) - row_sum;
  }
  return chain;
}

DistributionVector stationary_exact(const ChainSpec& spec) {
  Chain chain = build_chain(spec);
  const int n = static_cast<int>(chain.states.size());

  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && chain.transition.at(i, j) > 0) {
        fwd[i].push_back(j);
        bwd[j].push_back(i);
      }
  const auto down = reachable(0, fwd);
  const auto up = reachable(0, bwd);
  for (int i = 0; i < n; ++i) {
    if (!down[i] || !up[i]) {
      std::ostringstream msg;
      msg << "chain is reducible: state " << chain.states[i].digits()
          << (down[i] ? " cannot reach " : " is unreachable from ")
          << chain.states[0].digits();
      throw ReducibleChainError(msg.str());
    }
  }

  RationalMatrix m = chain.transition.transposed();
  for (int i = 0; i < n; ++i) m.at(i, i) -= 1;
  auto basis = kernel_basis(m);
  if (basis.size() != 1) {
    std::ostringstream msg;
    msg << "stationary kernel has dimension " << basis.size()
        << " (expected 1) despite strong connectivity";
    throw ReducibleChainError(msg.str());
  }
  std::vector<Rational>& v = basis[0];
  Rational sum = 0;
  for (const Rational& x : v) sum += x;
  if (sum == 0) throw ReducibleChainError("kernel vector sums to zero");
  DistributionVector dist;
  dist.states = std::move(chain.states);
  dist.probs.reserve(v.size());
  for (Rational& x : v) {
    Rational p = x / sum;
    if (p < 0) throw ReducibleChainError("stationary vector has mixed signs");
    dist.probs.push_back(std::move(p));
  }
  return dist;
}

std::vector<std::pair<TypeWord, Polynomial>> tableaux_stationary(int n, int r) {
  std::vector<std::pair<TypeWord, Polynomial>> out;
  for (const TypeWord& state : TypeWord::all_of_size(n, r))
    out.emplace_back(state, type_weight_sum(state));
  return out;
}

Polynomial stationarity_balance(const TypeWord& state,
                                const std::map<TypeWord, Polynomial>& f) {
  const std::vector<int>& w = state.letters;
  const int n = state.size();
  const Polynomial q = var_poly(Var::Q);
  auto fval = [&](std::vector<int> word) -> const Polynomial& {
    return f.at(TypeWord(std::move(word)));
  };
  auto with = [&](int pos, int letter) {
    std::vector<int> t = w;
    t[pos] = letter;
    return t;
  };

  Polynomial bal;
  if (w[0] == 0)
    bal += var_poly(Var::Gamma) * fval(with(0, 2)) - var_poly(Var::Alpha) * fval(w);
  else if (w[0] == 2)
    bal += var_poly(Var::Alpha) * fval(with(0, 0)) - var_poly(Var::Gamma) * fval(w);

  for (int i = 0; i + 1 < n; ++i) {
    if (w[i] == w[i + 1]) continue;
    std::vector<int> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    if (w[i] > w[i + 1])
      bal += q * fval(std::move(swapped)) - fval(w);  // outflow at rate u=1, inflow at q
    else
      bal += fval(std::move(swapped)) - q * fval(w);
  }

  if (w[n - 1] == 0)
    bal += var_poly(Var::Beta) * fval(with(n - 1, 2)) - var_poly(Var::Delta) * fval(w);
  else if (w[n - 1] == 2)
    bal += var_poly(Var::Delta) * fval(with(n - 1, 0)) - var_poly(Var::Beta) * fval(w);
  return bal;
}

VerifyReport verify_stationarity_symbolic(int n, int r) {
  VerifyReport report{"stationarity_balance"};
  std::map<TypeWord, Polynomial> f;
  const std::map<Var, Polynomial> u_one = {{Var::U, Polynomial(BigInt(1))}};
  for (auto& [state, poly] : tableaux_stationary(n, r))
    f.emplace(state, poly.substitute(u_one));
  for (const auto& [state, poly] : f) {
    ++report.cases;
    if (!stationarity_balance(state, f).is_zero())
      report.fail("state " + state.digits());
  }
  return report;
}

VerifyReport verify_ansatz(int max_norm, int threads) {
  VerifyReport report{"ansatz_I_to_V"};
  if (max_norm < 2) throw std::invalid_argument("verify_ansatz needs max_norm >= 2");

  struct Case {
    int relation;
    WordSpec x, y;
  };
  std::vector<Case> cases;
  const auto xs = all_words_norm_at_most(max_norm - 1, 0);
  for (const WordSpec& x : xs) {
    if (x.norm() + 2 <= max_norm)
      for (const WordSpec& y : all_words_norm_at_most(max_norm - 2 - x.norm(), 0))
        cases.push_back({1, x, y});
    if (x.norm() + 1 <= max_norm) {
      cases.push_back({2, x, {}});
      cases.push_back({3, x, {}});
    }
    if (x.norm() + 3 <= max_norm)
      for (const WordSpec& y : all_words_norm_at_most(max_norm - 3 - x.norm(), 0)) {
        cases.push_back({4, x, y});
        cases.push_back({5, x, y});
      }
  }

  std::vector<VerifyReport> partial;
  parallel_chunks(cases.size(), threads, partial,
                  [&](VerifyReport& rep, std::size_t begin, std::size_t end) {
    TransferEngine engine;
    auto word = [](const WordSpec& x, std::initializer_list<LetterKind> mid,
                   const WordSpec& y) {
      WordSpec w;
      w.letters = x.letters;
      w.letters.insert(w.letters.end(), mid.begin(), mid.end());
      w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
      return w;
    };
    for (std::size_t c = begin; c < end; ++c) {
      const auto& [relation, x, y] = cases[c];
      Polynomial lhs, rhs;
      switch (relation) {
        case 1: {  // X (D E - q E D) Y = lambda X (D + E) Y
          lhs = engine.bracket(word(x, {LetterKind::D, LetterKind::E}, y)) -
                var_poly(Var::Q) * engine.bracket(word(x, {LetterKind::E, LetterKind::D}, y));
          rhs = lambda_n(x.norm() + y.norm() + 2) *
                (engine.bracket(word(x, {LetterKind::D}, y)) +
                 engine.bracket(word(x, {LetterKind::E}, y)));
          break;
        }
        case 2: {  // beta X D - delta X E = lambda X
          lhs = var_poly(Var::Beta) * engine.bracket(word(x, {LetterKind::D}, {})) -
                var_poly(Var::Delta) * engine.bracket(word(x, {LetterKind::E}, {}));
          rhs = lambda_n(x.norm() + 1) * engine.bracket(x);
          break;
        }
        case 3: {  // alpha E X - gamma D X = lambda X
          lhs = var_poly(Var::Alpha) * engine.bracket(word({}, {LetterKind::E}, x)) -
                var_poly(Var::Gamma) * engine.bracket(word({}, {LetterKind::D}, x));
          rhs = lambda_n(x.norm() + 1) * engine.bracket(x);
          break;
        }
        case 4: {  // X (D A - q A D) Y' = lambda X A Y'
          lhs = engine.bracket(word(x, {LetterKind::D, LetterKind::A}, y)) -
                var_poly(Var::Q) * engine.bracket(word(x, {LetterKind::A, LetterKind::D}, y));
          rhs = lambda_n(x.norm() + y.norm() + 3) *
                engine.bracket(word(x, {LetterKind::A}, y));
          break;
        }
        case 5: {  // X (A E - q E A) Y' = lambda X A Y'
          lhs = engine.bracket(word(x, {LetterKind::A, LetterKind::E}, y)) -
                var_poly(Var::Q) * engine.bracket(word(x, {LetterKind::E, LetterKind::A}, y));
          rhs = lambda_n(x.norm() + y.norm() + 3) *
                engine.bracket(word(x, {LetterKind::A}, y));
          break;
        }
      }
      ++rep.cases;
      if (lhs != rhs) {
        static const char* kNames[] = {"", "I", "II", "III", "IV", "V"};
        rep.fail(std::string("relation ") + kNames[relation] + " X=" + x.text() +
                 " Y=" + y.text());
      }
    }
  });
  for (const VerifyReport& rep : partial) {
    report.cases += rep.cases;
    if (!rep.pass) {
      report.pass = false;
      for (const auto& ce : rep.counterexamples) report.fail(ce);
    }
  }
  return report;
}

McResult mc_simulate(const ChainSpec& spec, long long steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  ChainSpec strict_spec = spec;
  strict_spec.strict = true;
  Chain chain = build_chain(strict_spec);
  const int n = static_cast<int>(chain.states.size());

  // Cumulative off-diagonal transition table in doubles; the leftover tail
  // is the self-loop.
  std::vector<std::vector<std::pair<double, int>>> table(n);
  for (int i = 0; i < n; ++i) {
    double cum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational& p = chain.transition.at(i, j);
      if (p == 0) continue;
      cum += rational_to_double(p);
      table[i].emplace_back(cum, j);
    }
  }

  std::vector<long long> counts(n, 0);
  std::mt19937_64 rng(seed);
  int state = 0;  // lexicographically smallest state
  counts[state]++;
  for (long long s = 0; s < steps; ++s) {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    for (const auto& [cum, j] : table[state]) {
      if (x < cum) {
        state = j;
        break;
      }
    }
    counts[state]++;
  }

  McResult result;
  result.states = chain.states;
  result.empirical.resize(n);
  const double total = static_cast<double>(steps) + 1.0;
  for (int i = 0; i < n; ++i) result.empirical[i] = static_cast<double>(counts[i]) / total;

  DistributionVector exact = stationary_exact(spec);
  double tv = 0.0;
  for (int i = 0; i < n; ++i)
    tv += std::abs(result.empirical[i] - rational_to_double(exact.probs[i]));
  result.tv_distance = 0.5 * tv;
  return result;
}

}  // namespace rhombic
