#include "rhombic/typeword.hpp"

#include <stdexcept>

namespace rhombic {

TypeWord::TypeWord(std::vector<int> l) : letters(std::move(l)) {
  for (int x : letters)
    if (x < 0 || x > 2) throw std::invalid_argument("type letters must be 0, 1 or 2");
}

int TypeWord::count(int letter) const {
  int n = 0;
  for (int x : letters)
    if (x == letter) ++n;
  return n;
}

std::string TypeWord::digits() const {
  std::string s;
  s.reserve(letters.size());
  for (int x : letters) s.push_back(static_cast<char>('0' + x));
  return s;
}

TypeWord TypeWord::parse(const std::string& digits) {
  std::vector<int> l;
  l.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '2') throw std::invalid_argument("type digits must be 0, 1 or 2");
    l.push_back(c - '0');
  }
  return TypeWord(std::move(l));
}

std::vector<TypeWord> TypeWord::all_of_size(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
  std::vector<TypeWord> out;
  std::vector<int> word(n, 0);
  auto rec = [&](auto&& self, int pos, int ones_left) -> void {
    if (pos == n) {
      if (ones_left == 0) out.emplace_back(word);
      return;
    }
    if (n - pos < ones_left) return;
    for (int letter = 0; letter <= 2; ++letter) {
      if (letter == 1 && ones_left == 0) continue;
      word[pos] = letter;
      self(self, pos + 1, ones_left - (letter == 1));
    }
  };
  rec(rec, 0, r);
  return out;
}

}  // namespace rhombic
