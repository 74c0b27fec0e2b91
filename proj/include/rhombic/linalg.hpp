#pragma once

#include <stdexcept>
#include <vector>

#include "rhombic/rational.hpp"

namespace rhombic {

struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;  // row-major, rows*cols

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  Rational& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

  static RationalMatrix identity(int n);
  RationalMatrix transposed() const;
};

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact determinant via fraction-free (Bareiss) elimination.
Rational determinant(const RationalMatrix& m);

// Exact basis of the right kernel {v : m v = 0}; fraction-free elimination
// followed by rational back-substitution, one basis vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

}  // namespace rhombic
