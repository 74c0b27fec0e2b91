// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures.  Every check is an exact identity except the seeded Monte Carlo
// bound in criterion 10.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "rhombic/asep.hpp"
#include "rhombic/identities.hpp"
#include "rhombic/moments.hpp"
#include "rhombic/tableau.hpp"
#include "rhombic/transfer.hpp"

using namespace rhombic;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void run(int number, const std::string& what, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget");
  }
  std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
              number, what.c_str(), elapsed, budget_seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Params seeded_params(std::mt19937_64& rng) {
  auto draw = [&] {
    const int den = 2 + static_cast<int>(rng() % 15);
    return Rational(1 + static_cast<int>(rng() % den), den);
  };
  return Params{draw(), draw(), draw(), draw(), draw(), 1};
}

}  // namespace

int main() {
  run(1, "type-(2,1) enumeration gives the four paper weights", 1.0, [](std::string& detail) {
    auto tableaux = enumerate_tableaux(TypeWord::parse("21"), Engine::Dfs);
    std::multiset<ExpKey> weights;
    for (const Tableau& t : tableaux) weights.insert(weight(t).exps);
    const std::multiset<ExpKey> expected = {
        exp_key(1, 1, 0, 0, 0, 1, 0), exp_key(1, 0, 0, 1, 1, 0, 0),
        exp_key(1, 0, 0, 0, 1, 1, 0), exp_key(0, 0, 0, 1, 2, 0, 0)};
    if (weights != expected) {
      detail = "weight multiset mismatch";
      return false;
    }
    return tableaux.size() == 4;
  });

  run(2, "counting corollary 4^{N-r} (N!/r!) C(N,r) for all N <= 6", 60.0,
      [](std::string& detail) {
        for (int n = 1; n <= 6; ++n) {
          for (int r = 0; r <= n; ++r) {
            BigInt count = 0;
            for (const TypeWord& type : TypeWord::all_of_size(n, r))
              count += count_tableaux(type);
            BigInt expected = 1;
            for (int i = 0; i < n - r; ++i) expected *= 4;
            expected *= factorial(n) / factorial(r);
            expected *= binomial(n, r);
            if (count != expected) {
              detail = "mismatch at N=" + std::to_string(n) + " r=" + std::to_string(r) +
                       ": " + count.str() + " vs " + expected.str();
              return false;
            }
          }
        }
        return true;
      });

  run(3, "Prop 3.13 closed form for Z at q=1, u=1, all N <= 5", 30.0, [](std::string& detail) {
    const std::map<Var, Polynomial> at_one = {{Var::Q, Polynomial(BigInt(1))},
                                              {Var::U, Polynomial(BigInt(1))}};
    for (int n = 1; n <= 5; ++n)
      for (int r = 0; r <= n; ++r)
        if (partition_function(n, r, false).substitute(at_one) != q1_closed_form(n, r)) {
          detail = "N=" + std::to_string(n) + " r=" + std::to_string(r);
          return false;
        }
    return true;
  });

  run(4, "brackets equal type generating functions for all 3^N types, N <= 5", 60.0,
      [](std::string& detail) {
        TransferEngine engine;
        const std::map<Var, Polynomial> u_one = {{Var::U, Polynomial(BigInt(1))}};
        for (int n = 1; n <= 5; ++n)
          for (int r = 0; r <= n; ++r)
            for (const TypeWord& type : TypeWord::all_of_size(n, r))
              if (engine.bracket(WordSpec::from_type(type)) !=
                  type_weight_sum(type).substitute(u_one)) {
                detail = "type " + type.digits();
                return false;
              }
        return true;
      });

  run(5, "Matrix Ansatz relations (I)-(V) with lambda_n, norm arguments <= 6", 120.0,
      [](std::string& detail) {
        const VerifyReport rep = verify_ansatz(6);
        if (!rep.pass && !rep.counterexamples.empty()) detail = rep.counterexamples.front();
        return rep.pass;
      });

  run(6, "section-7 identity suite (indices <= 5, t <= 2, |X| <= 3, ||Y|| <= 6)", 120.0,
      [](std::string& detail) {
        VerifyBounds bounds;
        bounds.max_index = 5;
        bounds.max_t = 2;
        bounds.max_word_len = 3;
        bounds.max_norm = 6;
        for (const std::string& name : identity_names()) {
          const VerifyReport rep = verify_identity(name, bounds);
          if (!rep.pass) {
            detail = name;
            if (!rep.counterexamples.empty()) detail += ": " + rep.counterexamples.front();
            return false;
          }
        }
        return true;
      });

  run(7, "stationary law: kernel solve == tableaux formula (N <= 4), balance zero (N <= 3)",
      60.0, [](std::string& detail) {
        std::mt19937_64 rng(424242);
        for (int n = 1; n <= 4; ++n) {
          for (int r = 0; r <= n; ++r) {
            auto weights = tableaux_stationary(n, r);
            for (int trial = 0; trial < 3; ++trial) {
              const Params p = seeded_params(rng);
              const DistributionVector exact = stationary_exact({n, r, p, false});
              const auto point = param_point(p, 1);
              Rational total = 0;
              std::vector<Rational> values;
              for (const auto& [state, poly] : weights) {
                values.push_back(poly.evaluate(point));
                total += values.back();
              }
              for (std::size_t i = 0; i < values.size(); ++i)
                if (values[i] / total != exact.probs[i]) {
                  detail = "N=" + std::to_string(n) + " r=" + std::to_string(r) + " state " +
                           exact.states[i].digits();
                  return false;
                }
            }
          }
        }
        for (int n = 1; n <= 3; ++n)
          for (int r = 0; r <= n; ++r)
            if (!verify_stationarity_symbolic(n, r).pass) {
              detail = "balance N=" + std::to_string(n) + " r=" + std::to_string(r);
              return false;
            }
        return true;
      });

  run(8, "moment determinant == tableaux moment at 5 seeded tuples each", 60.0,
      [](std::string& detail) {
        for (auto [n, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}}) {
          const MomentReport rep = cross_check(n, r, 5, 1000 + 10 * n + r);
          if (!rep.all_equal) {
            detail = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
            return false;
          }
        }
        return true;
      });

  run(9, "weight degrees (N-r)(N+3r+1)/2 and strict positivity of Z, N <= 5", 60.0,
      [](std::string& detail) {
        for (int n = 1; n <= 5; ++n) {
          for (int r = 0; r <= n; ++r) {
            const int expected = weight_degree(n, r);
            bool ok = true;
            for (const TypeWord& type : TypeWord::all_of_size(n, r))
              for_each_tableau(build_tiling(type),
                               [&](const std::vector<Label>&, ExpKey w) {
                                 ok = ok && exp_total_degree(w, false) == expected;
                               });
            if (!ok) {
              detail = "degree N=" + std::to_string(n) + " r=" + std::to_string(r);
              return false;
            }
            if (!partition_function(n, r, true).all_coefficients_positive()) {
              detail = "positivity N=" + std::to_string(n) + " r=" + std::to_string(r);
              return false;
            }
          }
        }
        return true;
      });

  run(10, "Monte Carlo TV distance < 0.02 at seed 42 for (2,1) and (3,1)", 60.0,
      [](std::string& detail) {
        const Params p{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
                       Rational(1, 3), 1};
        const McResult mc21 = mc_simulate({2, 1, p, true}, 2000000, 42);
        const McResult mc31 = mc_simulate({3, 1, p, true}, 10000000, 42);
        detail = "tv(2,1)=" + std::to_string(mc21.tv_distance) +
                 " tv(3,1)=" + std::to_string(mc31.tv_distance);
        return mc21.tv_distance < 0.02 && mc31.tv_distance < 0.02;
      });

  if (g_failures == 0) std::printf("acceptance: all 10 criteria passed\n");
  else std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures;
}
