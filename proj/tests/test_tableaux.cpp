#include <algorithm>
#include <set>

#include "doctest.h"
#include "rhombic/json_io.hpp"
#include "rhombic/tableau.hpp"

using namespace rhombic;

namespace {

ExpKey wkey(int a, int b, int g, int d, int q, int u) { return exp_key(a, b, g, d, q, u, 0); }

std::multiset<ExpKey> dfs_weight_multiset(const TypeWord& type) {
  std::multiset<ExpKey> out;
  for_each_tableau(build_tiling(type),
                   [&](const std::vector<Label>&, ExpKey w) { out.insert(w); });
  return out;
}

}  // namespace

TEST_CASE("maximal tiling of (1,2,0,1,0)") {
  const TilingSpec spec = build_tiling(TypeWord::parse("12010"));
  REQUIRE(spec.columns.size() == 5);
  CHECK(spec.columns[0].one_column);
  CHECK(spec.columns[0].tall_rhombi == 0);
  CHECK(spec.columns[1].corner_index == 1);
  CHECK(spec.columns[1].squares == 1);
  CHECK(spec.columns[1].short_rhombi == 1);
  CHECK(spec.columns[2].corner_index == 2);
  CHECK(spec.columns[2].squares == 2);
  CHECK(spec.columns[2].short_rhombi == 1);
  CHECK(spec.columns[3].one_column);
  CHECK(spec.columns[3].tall_rhombi == 2);
  CHECK(spec.columns[4].corner_index == 3);
  CHECK(spec.columns[4].squares == 3);
  CHECK(spec.columns[4].short_rhombi == 2);
  CHECK(spec.total_squares() == 6);
  CHECK(spec.total_rhombi() == 6);
  CHECK(spec.num_hstrips == 3);
}

TEST_CASE("tiling strip assignments") {
  const TilingSpec spec = build_tiling(TypeWord::parse("12010"));
  for (const TileInfo& tile : spec.tiles) {
    const ColumnSpec& col = spec.columns[tile.pos - 1];
    switch (tile.kind) {
      case TileKind::Square:
        CHECK(tile.hstrip == col.corner_index - tile.height + 1);
        CHECK(tile.vstrip == col.corner_index);
        CHECK(tile.bottom_square == (tile.height == 1));
        break;
      case TileKind::Tall:
        CHECK(tile.hstrip == col.tall_rhombi - tile.height + 1);
        CHECK(tile.vstrip == 0);
        break;
      case TileKind::Short:
        CHECK(tile.hstrip == 0);
        CHECK(tile.vstrip == col.corner_index);
        break;
    }
  }
}

TEST_CASE("degenerate tilings") {
  const TilingSpec one = build_tiling(TypeWord::parse("2"));
  CHECK(one.tiles.size() == 1);
  CHECK(one.columns[0].squares == 1);
  const TilingSpec empty = build_tiling(TypeWord::parse("11"));
  CHECK(empty.tiles.empty());
  CHECK(empty.columns[0].tall_rhombi == 0);
  CHECK(empty.columns[1].tall_rhombi == 0);
}

TEST_CASE("tile counts match the degree remark") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r)
      for (const TypeWord& type : TypeWord::all_of_size(n, r)) {
        const TilingSpec spec = build_tiling(type);
        CHECK(spec.total_squares() == (n - r + 1) * (n - r) / 2);
        CHECK(spec.total_rhombi() == r * (n - r));
      }
}

TEST_CASE("the four tableaux of type (2,1)") {
  const auto weights = dfs_weight_multiset(TypeWord::parse("21"));
  const std::multiset<ExpKey> expected = {
      wkey(1, 1, 0, 0, 0, 1),  // alpha beta u
      wkey(1, 0, 0, 1, 1, 0),  // alpha delta q
      wkey(1, 0, 0, 0, 1, 1),  // alpha u q
      wkey(0, 0, 0, 1, 2, 0),  // delta q^2
  };
  CHECK(weights == expected);
}

TEST_CASE("single-corner and small types") {
  CHECK(dfs_weight_multiset(TypeWord::parse("2")) ==
        std::multiset<ExpKey>{wkey(1, 0, 0, 0, 0, 0), wkey(0, 0, 0, 1, 0, 0)});

  // type (1,0): gamma with an empty short rhombus weighs gamma q^2
  const auto ts = enumerate_tableaux(TypeWord::parse("10"), Engine::Naive);
  CHECK(ts.size() == 4);
  bool found_gamma_case = false;
  for (const Tableau& t : ts) {
    if (t.labels[0] == Label::Gamma && t.labels[1] == Label::Empty) {
      found_gamma_case = true;
      CHECK(weight(t).exps == wkey(0, 0, 1, 0, 2, 0));
    }
  }
  CHECK(found_gamma_case);
}

TEST_CASE("weight rule examples") {
  // type (2,1): delta square forces an empty tall rhombus seeing delta -> q^2
  for (const Tableau& t : enumerate_tableaux(TypeWord::parse("21"), Engine::Dfs)) {
    if (t.labels[0] == Label::Delta) {
      CHECK(t.labels[1] == Label::Empty);
      CHECK(weight(t).exps == wkey(0, 0, 0, 1, 2, 0));
    }
    if (t.labels[0] == Label::Alpha && t.labels[1] == Label::Empty)
      CHECK(weight(t).exps == wkey(1, 0, 0, 0, 1, 1));  // empty tall sees alpha -> uq
  }
}

TEST_CASE("weight rejects an invalid labeling") {
  Tableau bad{build_tiling(TypeWord::parse("2")), {Label::Empty}};
  CHECK_THROWS_AS(weight(bad), std::logic_error);
}

TEST_CASE("dfs and naive engines agree up to size 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const TypeWord& type : TypeWord::all_of_size(n, r)) {
        std::vector<std::pair<std::vector<Label>, ExpKey>> dfs;
        for_each_tableau(build_tiling(type),
                         [&](const std::vector<Label>& labels, ExpKey w) {
                           dfs.emplace_back(labels, w);
                         });
        std::vector<std::pair<std::vector<Label>, ExpKey>> naive;
        for (const Tableau& t : enumerate_tableaux(type, Engine::Naive))
          naive.emplace_back(t.labels, weight(t).exps);
        std::sort(dfs.begin(), dfs.end());
        std::sort(naive.begin(), naive.end());
        REQUIRE(dfs == naive);
      }
    }
  }
}

TEST_CASE("every weight is a monomial of the forced degree") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r)
      for (const TypeWord& type : TypeWord::all_of_size(n, r))
        for_each_tableau(build_tiling(type), [&](const std::vector<Label>&, ExpKey w) {
          CHECK(exp_total_degree(w, false) == weight_degree(n, r));
        });
}

TEST_CASE("partition function examples") {
  const Polynomial z10 = partition_function(1, 0, true);
  Polynomial expected = Polynomial::monomial(1, exp_key(1, 0, 0, 0, 0, 0, 1)) +
                        Polynomial::monomial(1, exp_key(0, 0, 0, 1, 0, 0, 1)) +
                        Polynomial::variable(Var::Beta) + Polynomial::variable(Var::Gamma);
  CHECK(z10 == expected);

  CHECK(partition_function(1, 1, true) == Polynomial(BigInt(1)));

  std::array<Rational, kNumVars> ones;
  ones.fill(1);
  CHECK(partition_function(2, 1, true).evaluate(ones) == 16);
}

TEST_CASE("partition function coefficients are positive tableau counts") {
  std::array<Rational, kNumVars> ones;
  ones.fill(1);
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      const Polynomial z = partition_function(n, r, true);
      CHECK(z.all_coefficients_positive());
      BigInt count = 0;
      for (const TypeWord& type : TypeWord::all_of_size(n, r))
        count += count_tableaux(type);
      CHECK(z.evaluate(ones) == Rational(count));
    }
}

TEST_CASE("q=1 census") {
  const Census c21 = q1_census(2, 1);
  CHECK(c21.count == 16);
  CHECK(c21.closed_form_match);

  const Census diag = q1_census(3, 3);
  CHECK(diag.count == 1);
  CHECK(diag.closed_form_match);

  const Census c31 = q1_census(3, 1);
  CHECK(c31.count == 288);
  CHECK(c31.expected_count == 288);
  CHECK(c31.closed_form_match);
}

TEST_CASE("setting u = 1 loses nothing (re-homogenization recovers Z)") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      const Polynomial z = partition_function(n, r, false);
      const Polynomial z1 = z.substitute({{Var::U, Polynomial(BigInt(1))}});
      const int degree = weight_degree(n, r);
      Polynomial rehom;
      for (const auto& [key, coeff] : z1.terms()) {
        const int missing = degree - exp_total_degree(key, false);
        REQUIRE(missing >= 0);
        rehom += Polynomial::monomial(coeff, exp_mul(key, exp_key_var(Var::U, missing)));
      }
      CHECK(rehom == z);
    }
}

TEST_CASE("tableau JSON shape") {
  const auto ts = enumerate_tableaux(TypeWord::parse("21"), Engine::Dfs);
  const auto j = tableau_to_json(ts.front());
  CHECK(j["type"] == nlohmann::json({2, 1}));
  REQUIRE(j["labels"].size() == 2);
  CHECK(j["labels"][0]["kind"] == "square");
  CHECK(j["labels"][0]["pos"] == 1);
  CHECK(j["labels"][0]["height"] == 1);
  CHECK(j["labels"][1]["kind"] == "tall");
  CHECK(j["weight"]["coeff"] == "1");
  CHECK(label_from_name("beta_u") == Label::BetaU);
  CHECK_THROWS_AS(label_from_name("zeta"), std::invalid_argument);
}

TEST_CASE("parallel partition function matches sequential") {
  CHECK(partition_function(4, 1, true, 4) == partition_function(4, 1, true, 1));
  CHECK(q1_census(4, 2, 4).count == q1_census(4, 2, 1).count);
}
