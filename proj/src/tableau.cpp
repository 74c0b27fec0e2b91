#include "rhombic/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "rhombic/parallel.hpp"

namespace rhombic {

namespace {

const char* kLabelNames[] = {"empty",  "alpha",   "beta",    "gamma",  "delta",
                             "beta_u", "delta_q", "alpha_u", "gamma_q"};

// Greek class of a label; rhombus labels count as their Greek letter for the
// emptiness rules (beta_u/delta_q close horizontal strips, alpha_u/gamma_q
// close vertical strips).
enum class Greek : std::uint8_t { None, A, B, G, D };

Greek class_of(Label l) {
  switch (l) {
    case Label::Alpha:
    case Label::AlphaU:
      return Greek::A;
    case Label::Beta:
    case Label::BetaU:
      return Greek::B;
    case Label::Gamma:
    case Label::GammaQ:
      return Greek::G;
    case Label::Delta:
    case Label::DeltaQ:
      return Greek::D;
    default:
      return Greek::None;
  }
}

bool is_beta_delta(Greek g) { return g == Greek::B || g == Greek::D; }
bool is_alpha_gamma(Greek g) { return g == Greek::A || g == Greek::G; }

struct Exponents {
  int alpha = 0, beta = 0, gamma = 0, delta = 0, q = 0, u = 0;
  ExpKey key() const { return exp_key(alpha, beta, gamma, delta, q, u, 0); }
  int degree() const { return alpha + beta + gamma + delta + q + u; }
};

void add_label_value(Exponents& e, Label l) {
  switch (l) {
    case Label::Alpha: e.alpha++; break;
    case Label::Beta: e.beta++; break;
    case Label::Gamma: e.gamma++; break;
    case Label::Delta: e.delta++; break;
    case Label::BetaU: e.beta++; e.u++; break;
    case Label::DeltaQ: e.delta++; e.q++; break;
    case Label::AlphaU: e.alpha++; e.u++; break;
    case Label::GammaQ: e.gamma++; e.q++; break;
    case Label::Empty: break;
  }
}

// The filling rules for empty tiles, keyed by the Greek class of the nearest
// labeled tile to the right (horizontal strip) and/or below (vertical strip).
void add_empty_square(Exponents& e, Greek right, Greek below) {
  if (right == Greek::B) {
    e.u++;
  } else if (right == Greek::D) {
    e.q++;
  } else if (below == Greek::A || below == Greek::D) {
    e.u++;
  } else {
    e.q++;
  }
}

void add_empty_tall(Exponents& e, Greek right) {
  if (right == Greek::B) {
    e.u += 2;
  } else if (right == Greek::D) {
    e.q += 2;
  } else {
    e.u++;
    e.q++;
  }
}

void add_empty_short(Exponents& e, Greek below) {
  if (below == Greek::A) {
    e.u += 2;
  } else if (below == Greek::G) {
    e.q += 2;
  } else {
    e.u++;
    e.q++;
  }
}

// Fast engine: backtracking over tiles in canonical order.  hstate[m] /
// vstate hold the Greek class of the nearest letter already placed in
// horizontal strip m / in the current column below the cursor; both start
// from the forced bottom-square letters.
struct DfsEnumerator {
  const TilingSpec& tiling;
  const TableauSink& sink;
  std::vector<Label> labels;
  std::vector<Greek> hstate;
  Greek vstate = Greek::None;
  Exponents exps;
  int expected_degree;

  DfsEnumerator(const TilingSpec& t, const TableauSink& s)
      : tiling(t),
        sink(s),
        labels(t.tiles.size(), Label::Empty),
        hstate(t.num_hstrips + 1, Greek::None),
        expected_degree(weight_degree(t.type.size(), t.type.ones())) {}

  void run() { step(0); }

  void emit() {
    if (exps.degree() != expected_degree)
      throw std::logic_error("tableau weight has wrong total degree");
    sink(labels, exps.key());
  }

  void place(std::size_t idx, Label l, const Exponents& saved, Greek saved_h, Greek saved_v,
             int hs, bool set_v) {
    labels[idx] = l;
    add_label_value(exps, l);
    Greek cls = class_of(l);
    if (cls != Greek::None) {
      if (hs > 0) hstate[hs] = cls;
      if (set_v) vstate = cls;
    }
    step(idx + 1);
    exps = saved;
    if (hs > 0) hstate[hs] = saved_h;
    vstate = saved_v;
    labels[idx] = Label::Empty;
  }

  void step(std::size_t idx) {
    if (idx == tiling.tiles.size()) {
      emit();
      return;
    }
    const TileInfo& tile = tiling.tiles[idx];
    const Exponents saved = exps;
    const Greek saved_v = vstate;
    const int hs = tile.hstrip;
    const Greek saved_h = hs > 0 ? hstate[hs] : Greek::None;

    switch (tile.kind) {
      case TileKind::Square: {
        if (tile.bottom_square) {
          // Forced corner letter; initializes both strips.
          const bool heavy = tiling.type.letters[tile.pos - 1] == 2;
          place(idx, heavy ? Label::Alpha : Label::Beta, saved, saved_h, saved_v, hs, true);
          place(idx, heavy ? Label::Delta : Label::Gamma, saved, saved_h, saved_v, hs, true);
          break;
        }
        const Greek right = hstate[hs];
        const Greek below = vstate;
        if (right == Greek::None || below == Greek::None)
          throw std::logic_error("strip state not initialized");
        add_empty_square(exps, right, below);
        place(idx, Label::Empty, saved, saved_h, saved_v, hs, false);
        exps = saved;
        if (!is_beta_delta(right) && !is_alpha_gamma(below)) {
          place(idx, Label::Alpha, saved, saved_h, saved_v, hs, true);
          place(idx, Label::Beta, saved, saved_h, saved_v, hs, true);
          place(idx, Label::Gamma, saved, saved_h, saved_v, hs, true);
          place(idx, Label::Delta, saved, saved_h, saved_v, hs, true);
        }
        break;
      }
      case TileKind::Tall: {
        const Greek right = hstate[hs];
        if (right == Greek::None) throw std::logic_error("strip state not initialized");
        add_empty_tall(exps, right);
        place(idx, Label::Empty, saved, saved_h, saved_v, hs, false);
        exps = saved;
        if (!is_beta_delta(right)) {
          place(idx, Label::BetaU, saved, saved_h, saved_v, hs, false);
          place(idx, Label::DeltaQ, saved, saved_h, saved_v, hs, false);
        }
        break;
      }
      case TileKind::Short: {
        const Greek below = vstate;
        if (below == Greek::None) throw std::logic_error("strip state not initialized");
        add_empty_short(exps, below);
        place(idx, Label::Empty, saved, saved_h, saved_v, 0, false);
        exps = saved;
        if (!is_alpha_gamma(below)) {
          place(idx, Label::AlphaU, saved, saved_h, saved_v, 0, true);
          place(idx, Label::GammaQ, saved, saved_h, saved_v, 0, true);
        }
        break;
      }
    }
  }
};

// Per-strip member lists used by the naive engine and the definitional
// weight scan.
struct StripIndex {
  std::vector<std::vector<int>> hstrip;  // tile indices, position ascending
  std::vector<std::vector<int>> column;  // square/short indices, bottom-up

  explicit StripIndex(const TilingSpec& t)
      : hstrip(t.num_hstrips + 1), column(t.columns.size() + 1) {
    for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
      const TileInfo& tile = t.tiles[i];
      if (tile.hstrip > 0) hstrip[tile.hstrip].push_back(i);
      if (tile.vstrip > 0) column[tile.pos].push_back(i);
    }
  }
};

// Exhaustive label assignment with the definitional invariant checker.  A
// partial assignment that already violates an invariant can never be
// completed, so the search prunes on first violation; the reachable leaves
// are exactly the valid tableaux.
struct NaiveEnumerator {
  const TilingSpec& tiling;
  StripIndex strips;
  std::vector<Label> labels;
  std::vector<Tableau>& out;

  NaiveEnumerator(const TilingSpec& t, std::vector<Tableau>& o)
      : tiling(t), strips(t), labels(t.tiles.size(), Label::Empty), out(o) {}

  bool admissible(int idx, Label l) const {
    const TileInfo& tile = tiling.tiles[idx];
    if (tile.bottom_square) {
      if (l == Label::Empty) return false;
      const bool heavy = tiling.type.letters[tile.pos - 1] == 2;
      const Greek cls = class_of(l);
      if (heavy != (cls == Greek::A || cls == Greek::D)) return false;
    }
    if (l == Label::Empty) return true;
    // Left of a beta/delta in the same horizontal strip => must be empty.
    if (tile.hstrip > 0) {
      for (int j : strips.hstrip[tile.hstrip]) {
        if (tiling.tiles[j].pos >= tile.pos) break;
        if (is_beta_delta(class_of(labels[j]))) return false;
      }
    }
    // Above an alpha/gamma in the same vertical strip => must be empty.
    if (tile.vstrip > 0) {
      for (int j : strips.column[tile.pos]) {
        if (j >= idx) break;
        if (is_alpha_gamma(class_of(labels[j]))) return false;
      }
    }
    return true;
  }

  void step(std::size_t idx) {
    if (idx == tiling.tiles.size()) {
      out.push_back(Tableau{tiling, labels});
      return;
    }
    static const Label kSquare[] = {Label::Empty, Label::Alpha, Label::Beta, Label::Gamma,
                                    Label::Delta};
    static const Label kTall[] = {Label::Empty, Label::BetaU, Label::DeltaQ};
    static const Label kShort[] = {Label::Empty, Label::AlphaU, Label::GammaQ};
    const TileInfo& tile = tiling.tiles[idx];
    const Label* options = kSquare;
    int n_options = 5;
    if (tile.kind == TileKind::Tall) {
      options = kTall;
      n_options = 3;
    } else if (tile.kind == TileKind::Short) {
      options = kShort;
      n_options = 3;
    }
    for (int i = 0; i < n_options; ++i) {
      if (!admissible(static_cast<int>(idx), options[i])) continue;
      labels[idx] = options[i];
      step(idx + 1);
    }
    labels[idx] = Label::Empty;
  }
};

}  // namespace

const char* label_name(Label l) { return kLabelNames[static_cast<int>(l)]; }

Label label_from_name(const std::string& name) {
  for (int i = 0; i < 9; ++i)
    if (name == kLabelNames[i]) return static_cast<Label>(i);
  throw std::invalid_argument("unknown label name: " + name);
}

Monomial weight(const Tableau& t) {
  const TilingSpec& tiling = t.tiling;
  if (t.labels.size() != tiling.tiles.size())
    throw std::invalid_argument("label vector does not match tiling");
  StripIndex strips(tiling);
  Exponents exps;

  auto nearest_right = [&](int idx) -> Greek {
    const TileInfo& tile = tiling.tiles[idx];
    const auto& strip = strips.hstrip[tile.hstrip];
    auto self = std::find(strip.begin(), strip.end(), idx);
    while (self != strip.begin()) {
      --self;
      Greek cls = class_of(t.labels[*self]);
      if (cls != Greek::None) return cls;
    }
    throw std::logic_error("empty tile sees no letter to its right");
  };
  auto nearest_below = [&](int idx) -> Greek {
    const TileInfo& tile = tiling.tiles[idx];
    const auto& col = strips.column[tile.pos];
    auto self = std::find(col.begin(), col.end(), idx);
    while (self != col.begin()) {
      --self;
      Greek cls = class_of(t.labels[*self]);
      if (cls != Greek::None) return cls;
    }
    throw std::logic_error("empty tile sees no letter below it");
  };

  for (int idx = 0; idx < static_cast<int>(tiling.tiles.size()); ++idx) {
    const Label l = t.labels[idx];
    if (l != Label::Empty) {
      add_label_value(exps, l);
      continue;
    }
    switch (tiling.tiles[idx].kind) {
      case TileKind::Square:
        add_empty_square(exps, nearest_right(idx), nearest_below(idx));
        break;
      case TileKind::Tall:
        add_empty_tall(exps, nearest_right(idx));
        break;
      case TileKind::Short:
        add_empty_short(exps, nearest_below(idx));
        break;
    }
  }
  if (exps.degree() != weight_degree(tiling.type.size(), tiling.type.ones()))
    throw std::logic_error("tableau weight has wrong total degree");
  return Monomial{1, exps.key()};
}

void for_each_tableau(const TilingSpec& tiling, const TableauSink& sink) {
  DfsEnumerator(tiling, sink).run();
}

std::vector<Tableau> enumerate_tableaux(const TypeWord& type, Engine engine) {
  TilingSpec tiling = build_tiling(type);
  std::vector<Tableau> out;
  if (engine == Engine::Dfs) {
    for_each_tableau(tiling, [&](const std::vector<Label>& labels, ExpKey) {
      out.push_back(Tableau{tiling, labels});
    });
  } else {
    NaiveEnumerator e(tiling, out);
    e.step(0);
  }
  return out;
}

long long count_tableaux(const TypeWord& type) {
  long long count = 0;
  for_each_tableau(build_tiling(type),
                   [&](const std::vector<Label>&, ExpKey) { ++count; });
  return count;
}

Polynomial type_weight_sum(const TypeWord& type) {
  std::map<ExpKey, BigInt> accum;
  for_each_tableau(build_tiling(type),
                   [&](const std::vector<Label>&, ExpKey w) { accum[w] += 1; });
  return Polynomial::from_terms(std::move(accum));
}

Polynomial partition_function(int n, int r, bool track_xi, int threads) {
  const auto types = TypeWord::all_of_size(n, r);
  std::vector<std::unordered_map<ExpKey, long long>> partial;
  parallel_chunks(types.size(), threads, partial,
                  [&](std::unordered_map<ExpKey, long long>& accum, std::size_t begin,
                      std::size_t end) {
                    for (std::size_t t = begin; t < end; ++t) {
                      const ExpKey xi_key =
                          track_xi ? exp_key_var(Var::Xi, types[t].heavies()) : 0;
                      for_each_tableau(build_tiling(types[t]),
                                       [&](const std::vector<Label>&, ExpKey w) {
                                         accum[exp_mul(w, xi_key)] += 1;
                                       });
                    }
                  });
  std::map<ExpKey, BigInt> total;
  for (const auto& chunk : partial)
    for (const auto& [key, count] : chunk) total[key] += count;
  return Polynomial::from_terms(std::move(total));
}

Polynomial q1_closed_form(int n, int r) {
  const Polynomial a = var_poly(Var::Alpha);
  const Polynomial b = var_poly(Var::Beta);
  const Polynomial g = var_poly(Var::Gamma);
  const Polynomial d = var_poly(Var::Delta);
  Polynomial result(binomial(n, r));
  const Polynomial cross = (a + g) * (b + d);
  for (int i = r; i <= n - 1; ++i)
    result *= a + b + g + d + cross.scaled(i);
  return result;
}

Census q1_census(int n, int r, int threads) {
  const auto types = TypeWord::all_of_size(n, r);
  std::vector<long long> counts;
  parallel_chunks(types.size(), threads, counts,
                  [&](long long& count, std::size_t begin, std::size_t end) {
                    for (std::size_t t = begin; t < end; ++t)
                      count += count_tableaux(types[t]);
                  });
  BigInt count = 0;
  for (long long c : counts) count += c;

  BigInt expected = 1;
  for (int i = 0; i < n - r; ++i) expected *= 4;
  expected *= factorial(n) / factorial(r);
  expected *= binomial(n, r);

  const Polynomial z1 = partition_function(n, r, false, threads)
                            .substitute({{Var::Q, Polynomial(BigInt(1))},
                                         {Var::U, Polynomial(BigInt(1))}});
  const bool match = (count == expected) && (z1 == q1_closed_form(n, r));
  return Census{count, expected, match};
}

}  // namespace rhombic
