#include "rhombic/transfer.hpp"

#include <stdexcept>

#include "rhombic/parallel.hpp"

namespace rhombic {

namespace {

const Polynomial kZeroPoly;

Polynomial ab_poly(int a, int b, int g, int d, int q) {
  return Polynomial::monomial(1, exp_key(a, b, g, d, q, 0, 0));
}

// q^t + (alpha + gamma q^t) [t]_q: weight of the short-rhombus stack above a
// bottom delta in a column with t short rhombi.
Polynomial short_stack(int t) {
  Polynomial bracket = Polynomial::q_bracket(t);
  return Polynomial::var_pow(Var::Q, t) +
         (var_poly(Var::Alpha) + ab_poly(0, 0, 1, 0, t)) * bracket;
}

std::uint64_t memo_key(MatId id, int t, int i, int j, int k, int l) {
  return static_cast<std::uint64_t>(id) | (static_cast<std::uint64_t>(t) << 3) |
         (static_cast<std::uint64_t>(i) << 10) | (static_cast<std::uint64_t>(j) << 22) |
         (static_cast<std::uint64_t>(k) << 34) | (static_cast<std::uint64_t>(l) << 46);
}

}  // namespace

int WordSpec::count(LetterKind k) const {
  int n = 0;
  for (LetterKind l : letters)
    if (l == k) ++n;
  return n;
}

int WordSpec::superscript(int idx) const {
  int t = offset;
  for (int i = 0; i < idx; ++i)
    if (letters[i] == LetterKind::A) ++t;
  return t;
}

bool WordSpec::superscripts_consistent() const {
  if (!explicit_superscripts) return true;
  if (explicit_superscripts->size() != letters.size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (letters[i] == LetterKind::A) continue;
    if ((*explicit_superscripts)[i] != superscript(i)) return false;
  }
  return true;
}

std::vector<MatRef> WordSpec::refs() const {
  std::vector<MatRef> out;
  out.reserve(letters.size());
  int t = offset;
  for (LetterKind l : letters) {
    switch (l) {
      case LetterKind::A:
        out.push_back({MatId::A, 0});
        ++t;
        break;
      case LetterKind::D:
        out.push_back({MatId::D, t});
        break;
      case LetterKind::E:
        out.push_back({MatId::E, t});
        break;
    }
  }
  return out;
}

WordSpec WordSpec::from_type(const TypeWord& tau) {
  WordSpec w;
  w.letters.reserve(tau.letters.size());
  for (int x : tau.letters) {
    if (x == 0)
      w.letters.push_back(LetterKind::E);
    else if (x == 1)
      w.letters.push_back(LetterKind::A);
    else
      w.letters.push_back(LetterKind::D);
  }
  return w;
}

TypeWord WordSpec::to_type() const {
  std::vector<int> digits;
  digits.reserve(letters.size());
  for (LetterKind l : letters)
    digits.push_back(l == LetterKind::E ? 0 : (l == LetterKind::A ? 1 : 2));
  return TypeWord(std::move(digits));
}

std::string WordSpec::text() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += " ";
    switch (letters[i]) {
      case LetterKind::A:
        s += "A";
        break;
      case LetterKind::D:
        s += "D" + std::to_string(superscript(i));
        break;
      case LetterKind::E:
        s += "E" + std::to_string(superscript(i));
        break;
    }
  }
  return s.empty() ? "(empty)" : s;
}

std::vector<WordSpec> all_words_sized(int n_letters, int n_as, int offset) {
  std::vector<WordSpec> out;
  std::vector<LetterKind> word;
  auto rec = [&](auto&& self, int left, int as_left) -> void {
    if (left == 0) {
      if (as_left == 0) out.push_back(WordSpec{word, offset, std::nullopt});
      return;
    }
    if (as_left > left) return;
    for (LetterKind l : {LetterKind::A, LetterKind::D, LetterKind::E}) {
      if (l == LetterKind::A && as_left == 0) continue;
      word.push_back(l);
      self(self, left - 1, as_left - (l == LetterKind::A ? 1 : 0));
      word.pop_back();
    }
  };
  rec(rec, n_letters, n_as);
  return out;
}

std::vector<WordSpec> all_words_norm_at_most(int max_norm, int offset) {
  std::vector<WordSpec> out;
  std::vector<LetterKind> word;
  auto rec = [&](auto&& self, int budget) -> void {
    out.push_back(WordSpec{word, offset, std::nullopt});
    for (LetterKind l : {LetterKind::A, LetterKind::D, LetterKind::E}) {
      const int cost = l == LetterKind::A ? 2 : 1;
      if (cost > budget) continue;
      word.push_back(l);
      self(self, budget - cost);
      word.pop_back();
    }
  };
  rec(rec, max_norm);
  return out;
}

void StateVector::add(int i, int k, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = support.try_emplace({i, k}, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) support.erase(it);
  }
}

void StateVector::add(int i, int k, Polynomial&& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = support.try_emplace({i, k}, std::move(p));
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) support.erase(it);
  }
}

const Polynomial& StateVector::at(int i, int k) const {
  auto it = support.find({i, k});
  return it == support.end() ? kZeroPoly : it->second;
}

StateVector StateVector::shifted(int di, int dk) const {
  StateVector out;
  for (const auto& [ik, p] : support)
    out.support.emplace(std::make_pair(ik.first + di, ik.second + dk), p);
  return out;
}

StateVector StateVector::scaled(const Polynomial& c) const {
  StateVector out;
  if (c.is_zero()) return out;
  for (const auto& [ik, p] : support) out.support.emplace(ik, p * c);
  return out;
}

StateVector& StateVector::operator+=(const StateVector& rhs) {
  for (const auto& [ik, p] : rhs.support) add(ik.first, ik.second, p);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& rhs) {
  for (const auto& [ik, p] : rhs.support) add(ik.first, ik.second, -p);
  return *this;
}

Polynomial StateVector::sum() const {
  Polynomial total;
  for (const auto& [ik, p] : support) total += p;
  return total;
}

int StateVector::max_index_sum() const {
  int m = 0;
  for (const auto& [ik, p] : support) m = std::max(m, ik.first + ik.second);
  return m;
}

const Polynomial& TransferEngine::entry(MatRef m, int i, int j, int k, int l) {
  if (i < 0 || j < 0 || k < 0 || l < 0) return kZeroPoly;
  const std::uint64_t key = memo_key(m.id, m.id == MatId::A ? 0 : m.t, i, j, k, l);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Polynomial value = compute(m.id, m.t, i, j, k, l);
  return memo_.emplace(key, std::move(value)).first->second;
}

Polynomial TransferEngine::compute(MatId id, int t, int i, int j, int k, int l) {
  switch (id) {
    case MatId::D: {
      if (j < i || l > k + 1) return {};
      if (k == 0 && l == 1 && i == j) return ab_poly(1, 0, 0, 0, i);
      if (k == 0 && l == 0 && j == i + 1)
        return ab_poly(0, 0, 0, 1, i) * short_stack(t);
      return var_poly(Var::Delta) * (entry({MatId::D, t}, i, j - 1, k - 1, l) +
                                     entry({MatId::E, t}, i, j - 1, k - 1, l)) +
             entry({MatId::D, t}, i, j, k - 1, l - 1);
    }
    case MatId::E: {
      if (j < i || l > k + 1) return {};
      if (k == 0 && l == 1 && i == j) return ab_poly(0, 0, 1, 0, 2 * t + i);
      if (k == 0 && l == 0 && i == j)
        return ab_poly(0, 1, 0, 0, i) * short_stack(t);
      return var_poly(Var::Beta) * (entry({MatId::D, t}, i, j, k - 1, l) +
                                    entry({MatId::E, t}, i, j, k - 1, l)) +
             var_poly(Var::Q) * entry({MatId::E, t}, i, j, k - 1, l - 1);
    }
    case MatId::A: {
      if (l > k || j - i > k - l) return {};
      if (i == j && k == 0 && l == 0) return Polynomial::var_pow(Var::Q, 2 * i);
      return var_poly(Var::Beta) * entry({MatId::A, 0}, i, j, k - 1, l) +
             ab_poly(0, 0, 0, 1, 1) * entry({MatId::A, 0}, i, j - 1, k - 1, l) +
             var_poly(Var::Q) * entry({MatId::A, 0}, i, j, k - 1, l - 1);
    }
    case MatId::F: {
      if (j <= i || l >= k) return {};
      Polynomial res = var_poly(Var::Delta) * entry({MatId::E, t}, i, j - 1, k - 1, l) +
                       entry({MatId::F, t}, i, j, k - 1, l - 1);
      if (k == l && i == j - 1) res -= ab_poly(0, 0, 1, 1, 2 * t + i + k - 1);
      return res;
    }
    case MatId::G: {
      if (j <= i || l >= k) return {};
      Polynomial res = var_poly(Var::Beta) * entry({MatId::D, t}, i, j, k - 1, l) +
                       var_poly(Var::Q) * entry({MatId::G, t}, i, j, k - 1, l - 1);
      if (k == l && i == j) res -= ab_poly(1, 1, 0, 0, i);
      return res;
    }
  }
  throw std::logic_error("unreachable matrix id");
}

StateVector TransferEngine::apply(const StateVector& v, MatRef m) {
  StateVector out;
  for (const auto& [ik, p] : v.support) {
    const auto [i, k] = ik;
    // One letter moves (i,k) to (j,l) with j+l <= i+k+1; the entry oracle
    // filters the finer zero structure.
    for (int j = i; j <= i + k + 1; ++j) {
      for (int l = 0; l <= k + 1; ++l) {
        const Polynomial& e = entry(m, i, j, k, l);
        if (e.is_zero()) continue;
        out.add(j, l, p * e);
      }
    }
  }
  return out;
}

StateVector TransferEngine::row_product(int i, int k, const std::vector<MatRef>& letters) {
  StateVector v;
  v.add(i, k, Polynomial(BigInt(1)));
  for (const MatRef& m : letters) v = apply(v, m);
  return v;
}

StateVector TransferEngine::w_row(const WordSpec& word) {
  if (word.offset != 0)
    throw std::invalid_argument("<W|X requires an A-compatible word (offset 0)");
  if (!word.superscripts_consistent())
    throw std::invalid_argument("superscripts violate A-compatibility: " + word.text());
  StateVector v;
  v.add(0, 0, Polynomial(BigInt(1)));
  const auto refs = word.refs();
  int prefix_norm = 0;
  for (std::size_t idx = 0; idx < refs.size(); ++idx) {
    prefix_norm += word.letters[idx] == LetterKind::A ? 2 : 1;
    v = apply(v, refs[idx]);
    if (v.max_index_sum() > prefix_norm)
      throw std::logic_error("support bound i+k <= ||prefix|| violated");
  }
  return v;
}

Polynomial TransferEngine::bracket(const WordSpec& word) { return w_row(word).sum(); }

Polynomial fugacity_bracket_sum(int n, int r, int threads) {
  const auto words = all_words_sized(n, r);
  std::vector<Polynomial> partial;
  parallel_chunks(words.size(), threads, partial,
                  [&](Polynomial& acc, std::size_t begin, std::size_t end) {
                    TransferEngine engine;
                    for (std::size_t w = begin; w < end; ++w) {
                      const ExpKey xi = exp_key_var(Var::Xi, words[w].count_d());
                      acc += engine.bracket(words[w]).shifted(xi);
                    }
                  });
  Polynomial total;
  for (const Polynomial& p : partial) total += p;
  return total;
}

Polynomial a_entry_closed_form(int i, int j, int k, int l) {
  const BigInt b1 = binomial(k, l);
  const BigInt b2 = binomial(k - l, j - i);
  if (b1 == 0 || b2 == 0) return {};
  return Polynomial::monomial(b1 * b2,
                              exp_key(0, k - l - (j - i), 0, j - i, l + i + j, 0, 0));
}

Polynomial lambda_n(int n) {
  if (n < 1) throw std::invalid_argument("lambda_n needs n >= 1");
  return ab_poly(1, 1, 0, 0, 0) - ab_poly(0, 0, 1, 1, n - 1);
}

}  // namespace rhombic
