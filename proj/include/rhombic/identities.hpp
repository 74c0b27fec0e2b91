#pragma once

#include <string>
#include <vector>

namespace rhombic {

// Bounds for the symbolic identity sweeps: matrix indices i,j,k,l range over
// [0, max_index], superscripts/offsets over [0, max_t], word factors over
// |X| <= max_word_len, and norm-bounded word families over ||Y|| <= max_norm.
struct VerifyBounds {
  int max_index = 4;
  int max_t = 2;
  int max_word_len = 3;
  int max_norm = 6;
};

struct VerifyReport {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::vector<std::string> counterexamples;

  void fail(std::string what);
};

const std::vector<std::string>& identity_names();

// Verifies one registered identity by exact polynomial comparison over the
// bounded ranges.  Throws std::invalid_argument for an unknown name.
VerifyReport verify_identity(const std::string& name, const VerifyBounds& bounds);

}  // namespace rhombic
