#include "rhombic/linalg.hpp"

#include <cassert>
#include <utility>

namespace rhombic {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;
  BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Clears denominators row by row; row scaling leaves kernel and determinant
// sign intact (the scale product is tracked for determinants).
IntMatrix integerize(const RationalMatrix& m, BigInt& scale) {
  IntMatrix im;
  im.rows = m.rows;
  im.cols = m.cols;
  im.a.resize(static_cast<std::size_t>(m.rows) * m.cols);
  scale = 1;
  for (int r = 0; r < m.rows; ++r) {
    BigInt lcm = 1;
    for (int c = 0; c < m.cols; ++c) {
      BigInt den = boost::multiprecision::denominator(m.at(r, c));
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    scale *= lcm;
    for (int c = 0; c < m.cols; ++c) {
      const Rational& v = m.at(r, c);
      im.at(r, c) = boost::multiprecision::numerator(v) *
                    (lcm / boost::multiprecision::denominator(v));
    }
  }
  return im;
}

struct Echelon {
  IntMatrix m;
  std::vector<int> pivot_cols;  // column of the pivot in row 0..rank-1
  int sign = 1;
};

// Fraction-free Gaussian elimination with column pivoting (Bareiss).  Entries
// stay integer; each update divides exactly by the previous pivot.
Echelon eliminate(IntMatrix m) {
  Echelon e;
  e.sign = 1;
  BigInt prev = 1;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;  // free column
    if (p != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
      e.sign = -e.sign;
    }
    const BigInt pivot = m.at(row, col);
    for (int r = row + 1; r < m.rows; ++r) {
      const BigInt factor = m.at(r, col);
      for (int c = col + 1; c < m.cols; ++c) {
        BigInt t = pivot * m.at(r, c) - factor * m.at(row, c);
        assert(t % prev == 0);
        m.at(r, c) = t / prev;
      }
      m.at(r, col) = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows == 0) return 1;
  BigInt scale;
  Echelon e = eliminate(integerize(m, scale));
  if (static_cast<int>(e.pivot_cols.size()) < m.rows) return 0;
  // Full rank: every column hosted a pivot, so the trailing entry is the
  // determinant of the integerized matrix.
  BigInt det = e.m.at(m.rows - 1, m.cols - 1);
  if (e.sign < 0) det = -det;
  return Rational(det, scale);
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  BigInt scale;
  Echelon e = eliminate(integerize(m, scale));
  const int rank = static_cast<int>(e.pivot_cols.size());

  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols);
    v[free] = 1;
    for (int r = rank - 1; r >= 0; --r) {
      const int pc = e.pivot_cols[r];
      Rational sum = 0;
      for (int c = pc + 1; c < m.cols; ++c) {
        if (v[c] == 0) continue;
        sum += Rational(e.m.at(r, c)) * v[c];
      }
      v[pc] = -sum / Rational(e.m.at(r, pc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace rhombic
