#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rhombic/identities.hpp"
#include "rhombic/linalg.hpp"
#include "rhombic/polynomial.hpp"
#include "rhombic/tableau.hpp"

namespace rhombic {

struct Params {
  Rational alpha, beta, gamma, delta, q, u = 1;
};

// Evaluation point in variable order (alpha, beta, gamma, delta, q, u, xi).
std::array<Rational, kNumVars> param_point(const Params& p, const Rational& xi);

struct ChainSpec {
  int sites = 1;
  int light = 0;
  Params params;
  bool strict = false;  // enforce parameters in [0,1] (simulation mode)
};

struct Chain {
  std::vector<TypeWord> states;  // lexicographic order
  RationalMatrix transition;     // row-stochastic
};

// Discrete-time two-species ASEP with all rates divided by N+1.
Chain build_chain(const ChainSpec& spec);

struct ReducibleChainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DistributionVector {
  std::vector<TypeWord> states;
  std::vector<Rational> probs;  // nonnegative, sums to exactly 1
};

// Unique stationary distribution via the exact kernel of (P^T - I).
// Irreducibility is checked structurally first (strong connectivity of the
// positive-rate digraph); a kernel of dimension != 1 is also rejected.
DistributionVector stationary_exact(const ChainSpec& spec);

// Unnormalized stationary weights: state tau -> sum of w(T) over tableaux of
// type tau (u tracked).  Dividing by Z_{N,r} gives the stationary law.
std::vector<std::pair<TypeWord, Polynomial>> tableaux_stationary(int n, int r);

// Net inflow at one state, assembled from the ten boundary/bulk balance
// groups with hop-right rate 1 (u = 1); f maps states to unnormalized
// stationary weights.  Zero for the true stationary measure.
Polynomial stationarity_balance(const TypeWord& state,
                                const std::map<TypeWord, Polynomial>& f);

// Asserts the balance sum is the zero polynomial at every state of B_{N,r},
// with f taken from tableaux_stationary at u = 1.
VerifyReport verify_stationarity_symbolic(int n, int r);

// Sweeps the Matrix Ansatz relations (I)-(V) with lambda_n = ab - gd q^{n-1}
// over all admissible words whose lambda subscript is at most max_norm.
VerifyReport verify_ansatz(int max_norm, int threads = 1);

struct McResult {
  std::vector<TypeWord> states;
  std::vector<double> empirical;  // occupancy of X_0 .. X_steps
  double tv_distance = 0.0;       // against the exact stationary law
};

McResult mc_simulate(const ChainSpec& spec, long long steps, std::uint64_t seed);

}  // namespace rhombic
