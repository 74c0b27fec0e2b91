#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rhombic/polynomial.hpp"
#include "rhombic/tiling.hpp"

namespace rhombic {

// Tile labels.  Squares take Empty/Alpha/Beta/Gamma/Delta, tall rhombi take
// Empty/BetaU/DeltaQ, short rhombi take Empty/AlphaU/GammaQ.
enum class Label : std::uint8_t { Empty, Alpha, Beta, Gamma, Delta, BetaU, DeltaQ, AlphaU, GammaQ };

const char* label_name(Label l);
Label label_from_name(const std::string& name);

struct Tableau {
  TilingSpec tiling;
  std::vector<Label> labels;  // parallel to tiling.tiles
};

enum class Engine { Dfs, Naive };

// Weight of a valid tableau, computed by direct scanning of the strip
// structure (independently of the enumeration engines).  Every empty tile
// must see a labeled tile to its right / below it as required by the filling
// rules; a missing lookup or a wrong total degree throws.
Monomial weight(const Tableau& t);

std::vector<Tableau> enumerate_tableaux(const TypeWord& type, Engine engine);

// Streams every tableau of the given shape from the fast engine: columns
// right to left, tiles bottom-up, with per-strip nearest-letter state.  The
// weight is accumulated alongside and passed as a packed exponent key
// (weights are always monomials with coefficient 1).
using TableauSink = std::function<void(const std::vector<Label>& labels, ExpKey weight)>;
void for_each_tableau(const TilingSpec& tiling, const TableauSink& sink);

long long count_tableaux(const TypeWord& type);

// Sum of w(T) over tableaux of the given type, with u tracked.
Polynomial type_weight_sum(const TypeWord& type);

// Z_{N,r}(xi): sum over all tableaux of size (N, r) of w(T) xi^{#heavies},
// with the xi exponent fixed to 0 when track_xi is false.
Polynomial partition_function(int n, int r, bool track_xi, int threads = 1);

// C(N,r) * prod_{i=r}^{N-1} (alpha+beta+gamma+delta + i(alpha+gamma)(beta+delta))
Polynomial q1_closed_form(int n, int r);

struct Census {
  BigInt count;
  BigInt expected_count;     // 4^{N-r} (N!/r!) C(N,r)
  bool closed_form_match;    // count matches and Z|_{q=1,u=1} equals the closed form
};
Census q1_census(int n, int r, int threads = 1);

}  // namespace rhombic
