#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rhombic {

// A word in {0,1,2}^N: simultaneously a two-species ASEP state and the
// boundary data of a rhombic diagram.  0 = hole, 1 = light, 2 = heavy.
struct TypeWord {
  std::vector<int> letters;

  TypeWord() = default;
  explicit TypeWord(std::vector<int> l);

  int size() const { return static_cast<int>(letters.size()); }
  int count(int letter) const;
  int ones() const { return count(1); }     // r
  int heavies() const { return count(2); }  // |tau|_2

  std::string digits() const;
  static TypeWord parse(const std::string& digits);

  // All words of length n with exactly r ones, lexicographic order.
  static std::vector<TypeWord> all_of_size(int n, int r);

  auto operator<=>(const TypeWord&) const = default;
};

}  // namespace rhombic
