#include "rhombic/identities.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rhombic/transfer.hpp"

namespace rhombic {

namespace {

constexpr int kMaxCounterexamples = 8;

Polynomial ab_poly(int a, int b, int g, int d, int q) {
  return Polynomial::monomial(1, exp_key(a, b, g, d, q, 0, 0));
}

Polynomial one_minus_q() { return Polynomial(BigInt(1)) - var_poly(Var::Q); }
Polynomial one_minus_q_pow(int j) { return Polynomial(BigInt(1)) - Polynomial::var_pow(Var::Q, j); }

// q^t + (alpha + gamma q^t)[t]_q: the short-rhombus stack factor from the
// D/E base cases.
Polynomial short_stack(int t) {
  return Polynomial::var_pow(Var::Q, t) +
         (var_poly(Var::Alpha) + ab_poly(0, 0, 1, 0, t)) * Polynomial::q_bracket(t);
}

WordSpec concat(const WordSpec& x, std::initializer_list<LetterKind> tail) {
  WordSpec w = x;
  w.explicit_superscripts.reset();
  w.letters.insert(w.letters.end(), tail.begin(), tail.end());
  return w;
}

std::vector<MatRef> with_tail(const WordSpec& x, std::initializer_list<MatRef> tail) {
  std::vector<MatRef> refs = x.refs();
  refs.insert(refs.end(), tail.begin(), tail.end());
  return refs;
}

std::vector<MatRef> with_head(MatRef head, const WordSpec& x) {
  std::vector<MatRef> refs{head};
  const auto xr = x.refs();
  refs.insert(refs.end(), xr.begin(), xr.end());
  return refs;
}

// All kind-sequences of length <= max_len; superscripts are derived from the
// offset stored on the word.
std::vector<WordSpec> words_up_to_length(int max_len, int offset) {
  std::vector<WordSpec> out;
  for (int len = 0; len <= max_len; ++len)
    for (int as = 0; as <= len; ++as)
      for (WordSpec& w : all_words_sized(len, as, offset)) out.push_back(std::move(w));
  return out;
}

using Verifier = std::function<VerifyReport(const VerifyBounds&)>;

VerifyReport check_ij_reduction(const VerifyBounds& b) {
  VerifyReport report{"ij_reduction"};
  TransferEngine engine;
  // Row indices only grow along a product (every matrix vanishes for j < i),
  // so cells with a row index above max_index can never reach a checked
  // entry and are pruned; the computed maps are exact on j <= max_index.
  auto apply_capped = [&](const StateVector& v, MatRef m) {
    std::map<std::pair<int, int>, std::unordered_map<ExpKey, BigInt>> accum;
    for (const auto& [ik, p] : v.support) {
      const auto [i, k] = ik;
      const int j_hi = std::min(i + k + 1, b.max_index);
      for (int j = i; j <= j_hi; ++j) {
        for (int l = 0; l <= k + 1; ++l) {
          const Polynomial& e = engine.entry(m, i, j, k, l);
          if (e.is_zero()) continue;
          auto& target = accum[{j, l}];
          for (const auto& [ka, ca] : p.terms())
            for (const auto& [kb, cb] : e.terms()) target[exp_mul(ka, kb)] += ca * cb;
        }
      }
    }
    StateVector out;
    for (auto& [jl, terms] : accum)
      out.add(jl.first, jl.second, Polynomial::from_unordered_terms(std::move(terms)));
    return out;
  };
  // cur == shift_j(prev) * q^norm compared term by term; the factor is a
  // monomial so the product is a pure key shift.
  auto equals_q_shifted = [&](const StateVector& cur, const StateVector& prev, ExpKey q_key) {
    std::size_t matched = 0;
    for (const auto& [jl, p] : prev.support) {
      if (jl.first + 1 > b.max_index) continue;  // shifted out of the checked window
      auto it = cur.support.find({jl.first + 1, jl.second});
      if (it == cur.support.end()) return false;
      const auto& got = it->second.terms();
      const auto& want = p.terms();
      if (got.size() != want.size()) return false;
      for (std::size_t t = 0; t < got.size(); ++t)
        if (got[t].first != exp_mul(want[t].first, q_key) || got[t].second != want[t].second)
          return false;
      ++matched;
    }
    return matched == cur.support.size();
  };
  // One grid of row products e_{(i,k)} * (prefix) is carried down the word
  // tree, so every prefix is applied exactly once.
  using Grid = std::vector<std::vector<StateVector>>;
  std::vector<LetterKind> path;
  for (int t0 = 0; t0 <= b.max_t; ++t0) {
    Grid init(b.max_index + 1, std::vector<StateVector>(b.max_index + 1));
    for (int i = 0; i <= b.max_index; ++i)
      for (int k = 0; k <= b.max_index; ++k) init[i][k].add(i, k, Polynomial(BigInt(1)));

    auto rec = [&](auto&& self, const Grid& states, int budget, int norm, int t) -> void {
      const ExpKey q_key = exp_key_var(Var::Q, norm);
      for (int k = 0; k <= b.max_index; ++k) {
        for (int i = 1; i <= b.max_index; ++i) {
          ++report.cases;
          if (!equals_q_shifted(states[i][k], states[i - 1][k], q_key)) {
            WordSpec y{path, t0, std::nullopt};
            std::ostringstream msg;
            msg << "Y=" << y.text() << " offset=" << t0 << " i=" << i << " k=" << k;
            report.fail(msg.str());
          }
        }
      }
      for (LetterKind letter : {LetterKind::A, LetterKind::D, LetterKind::E}) {
        const int cost = letter == LetterKind::A ? 2 : 1;
        if (cost > budget) continue;
        const MatRef m = letter == LetterKind::A   ? MatRef{MatId::A, 0}
                         : letter == LetterKind::D ? MatRef{MatId::D, t}
                                                   : MatRef{MatId::E, t};
        Grid next(b.max_index + 1, std::vector<StateVector>(b.max_index + 1));
        for (int i = 0; i <= b.max_index; ++i)
          for (int k = 0; k <= b.max_index; ++k) next[i][k] = apply_capped(states[i][k], m);
        path.push_back(letter);
        self(self, next, budget - cost, norm + cost, t + (letter == LetterKind::A ? 1 : 0));
        path.pop_back();
      }
    };
    rec(rec, init, b.max_norm, 0, t0);
  }
  return report;
}

VerifyReport check_f_equals_g(const VerifyBounds& b) {
  VerifyReport report{"f_equals_g"};
  TransferEngine engine;
  for (int t = 0; t <= b.max_t; ++t)
    for (int i = 0; i <= b.max_index; ++i)
      for (int j = 0; j <= b.max_index; ++j)
        for (int k = 0; k <= b.max_index; ++k)
          for (int l = 0; l <= b.max_index; ++l) {
            ++report.cases;
            if (engine.entry({MatId::F, t}, i, j, k, l) !=
                engine.entry({MatId::G, t}, i, j, k, l)) {
              std::ostringstream msg;
              msg << "t=" << t << " (" << i << "," << j << "," << k << "," << l << ")";
              report.fail(msg.str());
            }
          }
  return report;
}

// Shared driver for the commutators: for M in {E, D},
// (1-q)(MF - FM)_{0,j,k,l} = (1-q^j) ab M_{0,j,k,l}
//                            + gd q^{2t}(q^{l+j-1} - q^{k+1}) M_{0,j-1,k,l},
// and for the A variant (1-q)(A F^(t+1) - F^(t) A) with exponents l+j+1, k+2.
VerifyReport check_commutator(const std::string& name, MatId m, const VerifyBounds& b) {
  VerifyReport report{name};
  TransferEngine engine;
  const Polynomial ab = ab_poly(1, 1, 0, 0, 0);
  const Polynomial gd = ab_poly(0, 0, 1, 1, 0);
  for (int t = 0; t <= b.max_t; ++t) {
    for (int k = 0; k <= b.max_index; ++k) {
      StateVector lhs;
      if (m == MatId::A) {
        lhs = engine.row_product(0, k, {{MatId::A, 0}, {MatId::F, t + 1}});
        lhs -= engine.row_product(0, k, {{MatId::F, t}, {MatId::A, 0}});
      } else {
        lhs = engine.row_product(0, k, {{m, t}, {MatId::F, t}});
        lhs -= engine.row_product(0, k, {{MatId::F, t}, {m, t}});
      }
      lhs = lhs.scaled(one_minus_q());
      for (int j = 0; j <= b.max_index; ++j) {
        for (int l = 0; l <= b.max_index; ++l) {
          const MatRef mref{m, m == MatId::A ? 0 : t};
          Polynomial rhs = one_minus_q_pow(j) * ab * engine.entry(mref, 0, j, k, l);
          if (j >= 1) {
            const int e1 = m == MatId::A ? l + j + 1 : l + j - 1;
            const int e2 = m == MatId::A ? k + 2 : k + 1;
            const Polynomial qfac = (Polynomial::var_pow(Var::Q, e1) -
                                     Polynomial::var_pow(Var::Q, e2))
                                        .shifted(exp_key_var(Var::Q, 2 * t));
            rhs += gd * qfac * engine.entry(mref, 0, j - 1, k, l);
          }
          ++report.cases;
          if (lhs.at(j, l) != rhs) {
            std::ostringstream msg;
            msg << "t=" << t << " j=" << j << " k=" << k << " l=" << l;
            report.fail(msg.str());
          }
        }
      }
    }
  }
  return report;
}

VerifyReport check_eq2(const VerifyBounds& b) {
  VerifyReport report{"eq2"};
  TransferEngine engine;
  const Polynomial ab = ab_poly(1, 1, 0, 0, 0);
  const Polynomial gd = ab_poly(0, 0, 1, 1, 0);
  for (int t = 0; t <= b.max_t; ++t) {
    for (const WordSpec& x : words_up_to_length(b.max_word_len, t)) {
      const int r = x.count_a();
      for (int k = 0; k <= b.max_index; ++k) {
        const StateVector mx = engine.row_product(0, k, x.refs());
        const StateVector mxd = engine.row_product(0, k, with_tail(x, {{MatId::D, r + t}}));
        const StateVector mxe = engine.row_product(0, k, with_tail(x, {{MatId::E, r + t}}));
        const StateVector mfx = engine.row_product(0, k, with_head({MatId::F, t}, x));
        StateVector lhs = mxd.scaled(var_poly(Var::Beta));
        lhs -= mxe.shifted(1, 0).scaled(var_poly(Var::Delta));
        StateVector rhs = mx.shifted(0, 1).scaled(ab);
        rhs -= mx.shifted(1, 1).scaled(
            gd.shifted(exp_key_var(Var::Q, 2 * t + k + x.norm())));
        rhs += mfx.shifted(0, 1).scaled(one_minus_q());
        ++report.cases;
        if (!(lhs == rhs)) {
          std::ostringstream msg;
          msg << "X=" << x.text() << " offset=" << t << " k=" << k;
          report.fail(msg.str());
        }
      }
    }
  }
  return report;
}

VerifyReport check_eq4(const VerifyBounds& b) {
  VerifyReport report{"eq4"};
  TransferEngine engine;
  const Polynomial ab = ab_poly(1, 1, 0, 0, 0);
  const Polynomial gd = ab_poly(0, 0, 1, 1, 0);
  for (int t = 0; t <= b.max_t; ++t) {
    for (const WordSpec& x : words_up_to_length(b.max_word_len, t)) {
      const int r = x.count_a();
      for (int k = 0; k <= b.max_index; ++k) {
        const StateVector mxa = engine.row_product(0, k, with_tail(x, {{MatId::A, 0}}));
        const StateVector mxda =
            engine.row_product(0, k, with_tail(x, {{MatId::D, r + t}, {MatId::A, 0}}));
        const StateVector mxad =
            engine.row_product(0, k, with_tail(x, {{MatId::A, 0}, {MatId::D, r + t + 1}}));
        const StateVector mfxa = [&] {
          std::vector<MatRef> refs = with_head({MatId::F, t}, x);
          refs.push_back({MatId::A, 0});
          return engine.row_product(0, k, refs);
        }();
        StateVector lhs = mxda;
        lhs -= mxad.scaled(var_poly(Var::Q));
        StateVector rhs = mxa.scaled(ab);
        rhs -= mxa.shifted(1, 0).scaled(
            gd.shifted(exp_key_var(Var::Q, 2 * t + k + 2 + x.norm())));
        rhs += mfxa.scaled(one_minus_q());
        ++report.cases;
        if (!(lhs == rhs)) {
          std::ostringstream msg;
          msg << "X=" << x.text() << " offset=" << t << " k=" << k;
          report.fail(msg.str());
        }
      }
    }
  }
  return report;
}

// Refined identities (offset 0, applied to <W|): the four row-level
// statements whose |V>-sums give relations (I), (II), (IV), (V).
VerifyReport check_refined(const std::string& name, int which, const VerifyBounds& b) {
  VerifyReport report{name};
  TransferEngine engine;
  const Polynomial ab = ab_poly(1, 1, 0, 0, 0);
  const Polynomial gd = ab_poly(0, 0, 1, 1, 0);
  const Polynomial q = var_poly(Var::Q);
  for (const WordSpec& x : words_up_to_length(b.max_word_len, 0)) {
    const int norm = x.norm();
    StateVector lhs, rhs;
    switch (which) {
      case 1: {
        lhs = engine.w_row(concat(x, {LetterKind::D, LetterKind::E}));
        StateVector de = engine.w_row(concat(x, {LetterKind::D}));
        de += engine.w_row(concat(x, {LetterKind::E}));
        rhs = engine.w_row(concat(x, {LetterKind::E, LetterKind::D})).scaled(q);
        rhs += de.scaled(ab);
        rhs -= de.shifted(1, 0).scaled(gd.shifted(exp_key_var(Var::Q, norm + 1)));
        break;
      }
      case 2: {
        lhs = engine.w_row(concat(x, {LetterKind::D})).scaled(var_poly(Var::Beta));
        const StateVector wx = engine.w_row(x);
        rhs = engine.w_row(concat(x, {LetterKind::E})).shifted(1, 0).scaled(var_poly(Var::Delta));
        rhs += wx.shifted(0, 1).scaled(ab);
        rhs -= wx.shifted(1, 1).scaled(gd.shifted(exp_key_var(Var::Q, norm)));
        break;
      }
      case 4: {
        lhs = engine.w_row(concat(x, {LetterKind::D, LetterKind::A}));
        const StateVector wxa = engine.w_row(concat(x, {LetterKind::A}));
        rhs = engine.w_row(concat(x, {LetterKind::A, LetterKind::D})).scaled(q);
        rhs += wxa.scaled(ab);
        rhs -= wxa.shifted(1, 0).scaled(gd.shifted(exp_key_var(Var::Q, norm + 2)));
        break;
      }
      case 5: {
        lhs = engine.w_row(concat(x, {LetterKind::A, LetterKind::E}));
        const StateVector wxa = engine.w_row(concat(x, {LetterKind::A}));
        rhs = engine.w_row(concat(x, {LetterKind::E, LetterKind::A})).scaled(q);
        rhs += wxa.scaled(ab);
        rhs -= wxa.shifted(1, 0).scaled(gd.shifted(exp_key_var(Var::Q, norm + 2)));
        break;
      }
    }
    ++report.cases;
    if (!(lhs == rhs)) report.fail("X=" + x.text());
  }
  return report;
}

VerifyReport check_base_cases(const VerifyBounds& b) {
  VerifyReport report{"base_DA_AD_AE_EA"};
  TransferEngine engine;
  const Polynomial alpha = var_poly(Var::Alpha);
  const Polynomial beta = var_poly(Var::Beta);
  for (int t = 0; t <= b.max_t; ++t) {
    const StateVector m_ad = engine.row_product(0, 0, {{MatId::A, 0}, {MatId::D, t + 1}});
    const StateVector m_da = engine.row_product(0, 0, {{MatId::D, t}, {MatId::A, 0}});
    const StateVector m_ae = engine.row_product(0, 0, {{MatId::A, 0}, {MatId::E, t + 1}});
    const StateVector m_ea = engine.row_product(0, 0, {{MatId::E, t}, {MatId::A, 0}});

    StateVector x_ad, x_da, x_ae, x_ea;
    x_ad.add(0, 1, alpha);
    x_ad.add(1, 0, var_poly(Var::Delta) * short_stack(t + 1));
    x_da.add(0, 1, ab_poly(1, 0, 0, 0, 1));
    x_da.add(1, 0, ab_poly(1, 0, 0, 1, 1) + ab_poly(0, 0, 0, 1, 2) * short_stack(t));
    x_da.add(0, 0, ab_poly(1, 1, 0, 0, 0));
    x_ae.add(0, 1, ab_poly(0, 0, 1, 0, 2 * t + 2));
    x_ae.add(0, 0, beta * short_stack(t + 1));
    x_ea.add(0, 1, ab_poly(0, 0, 1, 0, 2 * t + 1));
    x_ea.add(0, 0, ab_poly(0, 1, 1, 0, 2 * t) + beta * short_stack(t));
    x_ea.add(1, 0, ab_poly(0, 0, 1, 1, 2 * t + 1));

    StateVector diff_d = m_da;
    diff_d -= m_ad.scaled(var_poly(Var::Q));
    StateVector diff_e = m_ae;
    diff_e -= m_ea.scaled(var_poly(Var::Q));
    StateVector expect;
    expect.add(0, 0, ab_poly(1, 1, 0, 0, 0));
    expect.add(1, 0, -ab_poly(0, 0, 1, 1, 2 * t + 2));

    ++report.cases;
    if (!(m_ad == x_ad)) report.fail("AD^(t+1) base case, t=" + std::to_string(t));
    ++report.cases;
    if (!(m_da == x_da)) report.fail("D^(t)A base case, t=" + std::to_string(t));
    ++report.cases;
    if (!(m_ae == x_ae)) report.fail("AE^(t+1) base case, t=" + std::to_string(t));
    ++report.cases;
    if (!(m_ea == x_ea)) report.fail("E^(t)A base case, t=" + std::to_string(t));
    ++report.cases;
    if (!(diff_d == expect)) report.fail("DA - qAD, t=" + std::to_string(t));
    ++report.cases;
    if (!(diff_e == expect)) report.fail("AE - qEA, t=" + std::to_string(t));
  }
  return report;
}

}  // namespace

void VerifyReport::fail(std::string what) {
  pass = false;
  if (static_cast<int>(counterexamples.size()) < kMaxCounterexamples)
    counterexamples.push_back(std::move(what));
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "ij_reduction", "f_equals_g",  "commutator_EF", "commutator_DF",
      "commutator_AF", "eq2",        "eq4",           "refined_1",
      "refined_2",     "refined_4",  "refined_5",     "base_DA_AD_AE_EA"};
  return names;
}

VerifyReport verify_identity(const std::string& name, const VerifyBounds& bounds) {
  if (name == "ij_reduction") return check_ij_reduction(bounds);
  if (name == "f_equals_g") return check_f_equals_g(bounds);
  if (name == "commutator_EF") return check_commutator("commutator_EF", MatId::E, bounds);
  if (name == "commutator_DF") return check_commutator("commutator_DF", MatId::D, bounds);
  if (name == "commutator_AF") return check_commutator("commutator_AF", MatId::A, bounds);
  if (name == "eq2") return check_eq2(bounds);
  if (name == "eq4") return check_eq4(bounds);
  if (name == "refined_1") return check_refined("refined_1", 1, bounds);
  if (name == "refined_2") return check_refined("refined_2", 2, bounds);
  if (name == "refined_4") return check_refined("refined_4", 4, bounds);
  if (name == "refined_5") return check_refined("refined_5", 5, bounds);
  if (name == "base_DA_AD_AE_EA") return check_base_cases(bounds);
  throw std::invalid_argument("unknown identity: " + name);
}

}  // namespace rhombic
