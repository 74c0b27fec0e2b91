#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rhombic/polynomial.hpp"
#include "rhombic/typeword.hpp"

namespace rhombic {

enum class LetterKind : std::uint8_t { A, D, E };

// Matrix families indexed by quadruples (i,j,k,l); D/E/F/G carry a
// superscript t, A does not.  All entries are polynomials in
// (alpha, beta, gamma, delta, q); the matrices are defined at u = 1.
enum class MatId : std::uint8_t { D, E, A, F, G };

struct MatRef {
  MatId id;
  int t = 0;
};

// A word in {A, D^(i), E^(j)}.  Superscripts are the ones forced by
// (A,offset)-compatibility: the superscript of the n-th D/E equals offset
// plus the number of A's before it.  Explicit superscripts, when supplied,
// are validated against that rule.
struct WordSpec {
  std::vector<LetterKind> letters;
  int offset = 0;
  std::optional<std::vector<int>> explicit_superscripts;

  int size() const { return static_cast<int>(letters.size()); }
  int count(LetterKind k) const;
  int count_a() const { return count(LetterKind::A); }
  int count_d() const { return count(LetterKind::D); }
  int norm() const { return size() + count_a(); }  // ||X|| = |X| + |X|_A

  int superscript(int idx) const;  // offset + #A's strictly before idx
  bool superscripts_consistent() const;
  std::vector<MatRef> refs() const;

  static WordSpec from_type(const TypeWord& tau);  // 0->E, 1->A, 2->D
  TypeWord to_type() const;
  std::string text() const;
};

// All words with given letter count and A count (offset applied), in
// lexicographic order with A < D < E.
std::vector<WordSpec> all_words_sized(int n_letters, int n_as, int offset = 0);
// All words with ||X|| <= max_norm, shortest first, deterministic order.
std::vector<WordSpec> all_words_norm_at_most(int max_norm, int offset = 0);

// Finitely supported row vector indexed by (i, k) pairs (or (j, l) after
// letters have been applied).  Entries are exact polynomials; zero entries
// are never stored.
struct StateVector {
  std::map<std::pair<int, int>, Polynomial> support;

  void add(int i, int k, const Polynomial& p);
  void add(int i, int k, Polynomial&& p);
  const Polynomial& at(int i, int k) const;
  StateVector shifted(int di, int dk) const;
  StateVector scaled(const Polynomial& c) const;
  StateVector& operator+=(const StateVector& rhs);
  StateVector& operator-=(const StateVector& rhs);
  bool operator==(const StateVector& rhs) const { return support == rhs.support; }
  Polynomial sum() const;  // multiplication by |V> (all ones)
  int max_index_sum() const;
};

// Memoized entry oracle for D^(t), E^(t), A and the strip generating
// functions F^(t), G^(t).  Entries with any negative index are zero, as are
// the structural zero regions (j<i or l>k+1 for D/E; l>k or j-i>k-l for A;
// j<=i or l>=k for F/G).
class TransferEngine {
 public:
  const Polynomial& entry(MatRef m, int i, int j, int k, int l);

  // Row-transfer v' = v M, summing v_{ik} M_{i,j,k,l} over the support.
  StateVector apply(const StateVector& v, MatRef m);
  // e_{(i,k)} * M_1 ... M_s: entries of a matrix product, one row at a time.
  StateVector row_product(int i, int k, const std::vector<MatRef>& letters);
  // <W| X for an A-compatible word (offset 0); checks the support bound
  // i + k <= ||prefix|| after every letter.
  StateVector w_row(const WordSpec& word);
  Polynomial bracket(const WordSpec& word);  // <W| X |V>

 private:
  Polynomial compute(MatId id, int t, int i, int j, int k, int l);
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

// Z_{N,r}(xi) at u=1 via the matrix route: sum of xi^{|X|_D} <W|X|V> over all
// A-compatible words with |X| = N and |X|_A = r.
Polynomial fugacity_bracket_sum(int n, int r, int threads = 1);

// Closed form for A entries: delta^{j-i} beta^{k-l-(j-i)} q^{l+i+j} C(k,l) C(k-l,j-i).
Polynomial a_entry_closed_form(int i, int j, int k, int l);

// lambda_n = alpha beta - gamma delta q^{n-1}
Polynomial lambda_n(int n);

}  // namespace rhombic
