#include "rhombic/tiling.hpp"

namespace rhombic {

int TilingSpec::total_squares() const {
  int n = 0;
  for (const auto& c : columns) n += c.squares;
  return n;
}

int TilingSpec::total_rhombi() const {
  int n = 0;
  for (const auto& c : columns) n += c.short_rhombi + c.tall_rhombi;
  return n;
}

TilingSpec build_tiling(const TypeWord& type) {
  TilingSpec spec;
  spec.type = type;
  const int n = type.size();
  spec.columns.resize(n);

  int corners_before = 0;  // |tau_1..tau_{p-1}|_02
  int ones_before = 0;     // |tau_1..tau_{p-1}|_1
  for (int p = 1; p <= n; ++p) {
    ColumnSpec& col = spec.columns[p - 1];
    if (type.letters[p - 1] == 1) {
      col.one_column = true;
      col.tall_rhombi = corners_before;
      for (int h = 1; h <= col.tall_rhombi; ++h)
        spec.tiles.push_back({p, TileKind::Tall, h, corners_before - h + 1, 0, false});
      ++ones_before;
    } else {
      col.corner_index = ++corners_before;
      col.squares = col.corner_index;
      col.short_rhombi = ones_before;
      for (int h = 1; h <= col.squares; ++h)
        spec.tiles.push_back(
            {p, TileKind::Square, h, col.corner_index - h + 1, col.corner_index, h == 1});
      for (int h = 1; h <= col.short_rhombi; ++h)
        spec.tiles.push_back({p, TileKind::Short, h, 0, col.corner_index, false});
    }
  }
  spec.num_hstrips = corners_before;
  return spec;
}

int weight_degree(int n, int r) { return (n - r) * (n + 3 * r + 1) / 2; }

}  // namespace rhombic
