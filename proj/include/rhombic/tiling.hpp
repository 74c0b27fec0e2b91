#pragma once

#include <cstdint>
#include <vector>

#include "rhombic/typeword.hpp"

namespace rhombic {

enum class TileKind : std::uint8_t { Square, Tall, Short };

// Columns are indexed by position p = 1..N reading tau left to right, but the
// column for position 1 sits at the far right of the diagram: a tile at a
// larger position is spatially LEFT of one at a smaller position.
struct ColumnSpec {
  bool one_column = false;
  int corner_index = 0;  // m, 1-based; the m-th corner column has m squares
  int squares = 0;
  int short_rhombi = 0;  // #1s before this position
  int tall_rhombi = 0;   // #0/2s before this position
};

struct TileInfo {
  int pos = 0;       // 1-based position in tau
  TileKind kind = TileKind::Square;
  int height = 0;    // 1-based from the bottom within its kind group
  int hstrip = 0;    // 1-based horizontal strip, 0 when the tile is in none
  int vstrip = 0;    // 1-based vertical strip (= corner index), 0 when none
  bool bottom_square = false;
};

// The maximal tiling of Gamma(tau) plus the strip structure.
//
// Strip bookkeeping: horizontal strip m is anchored at the bottom square of
// the m-th corner column; the height-h square of corner column m lies in
// horizontal strip m-h+1, and the height-h tall rhombus of a 1-column with
// n02 preceding corners lies in horizontal strip n02-h+1.  Vertical strip m
// is the m-th corner column itself (squares plus its short rhombi); tall
// rhombi belong to no vertical strip, short rhombi to no horizontal strip.
struct TilingSpec {
  TypeWord type;
  std::vector<ColumnSpec> columns;  // columns[p-1]
  std::vector<TileInfo> tiles;      // position ascending; within a column
                                    // squares bottom-up then rhombi bottom-up
  int num_hstrips = 0;              // N - r corners

  int total_squares() const;
  int total_rhombi() const;
};

TilingSpec build_tiling(const TypeWord& type);

// Expected weight degree of any tableau of size (N, r):
// (N-r)(N+3r+1)/2 = one per square plus two per rhombus.
int weight_degree(int n, int r);

}  // namespace rhombic
